#pragma once

#include <complex>
#include <span>
#include <vector>

#include "emhd/grid.hpp"

namespace emhd {

using complex = std::complex<double>;

// Real-valued scalar (1 component) or vector (3 components) field on the
// torus, stored as Fourier coefficients over the half spectrum.
class SpectralField {
 public:
  SpectralField(Grid grid, int ncomp);

  static SpectralField zeros(Grid grid, int ncomp) { return {grid, ncomp}; }
  // `values` holds ncomp blocks of n^3 samples, component outermost.
  static SpectralField from_physical(Grid grid, int ncomp,
                                     std::span<const double> values);

  const Grid& grid() const { return grid_; }
  int ncomp() const { return ncomp_; }
  bool is_vector() const { return ncomp_ == 3; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  std::span<complex> component(int c) {
    return {coeffs_.data() + c * grid_.spectral_size(), grid_.spectral_size()};
  }
  std::span<const complex> component(int c) const {
    return {coeffs_.data() + c * grid_.spectral_size(), grid_.spectral_size()};
  }
  complex& at(int c, std::size_t idx) { return coeffs_[c * grid_.spectral_size() + idx]; }
  const complex& at(int c, std::size_t idx) const {
    return coeffs_[c * grid_.spectral_size() + idx];
  }
  std::span<const complex> coefficients() const { return coeffs_; }
  std::span<complex> coefficients() { return coeffs_; }

  // Samples on the native grid, or on an (oversample*n)^3 grid by zero
  // padding. Component-outermost layout.
  std::vector<double> to_physical(int oversample = 1) const;
  std::vector<double> component_physical(int c, int oversample = 1) const;

  complex mean(int c) const { return at(c, 0); }
  double max_abs_coeff() const;

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double s);

 private:
  void check_compatible(const SpectralField& o) const;

  Grid grid_;
  int ncomp_;
  double time_ = 0.0;
  std::vector<complex> coeffs_;
};

inline SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
inline SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
inline SpectralField operator*(double s, SpectralField a) { return a *= s; }
inline SpectralField operator*(SpectralField a, double s) { return a *= s; }

}  // namespace emhd
