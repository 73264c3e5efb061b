#include "emhd/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "emhd/errors.hpp"
#include "emhd/fft.hpp"

namespace emhd {

SpectralField::SpectralField(Grid grid, int ncomp)
    : grid_(grid), ncomp_(ncomp) {
  if (ncomp != 1 && ncomp != 3) {
    throw ShapeError("field must have 1 or 3 components, got " +
                     std::to_string(ncomp));
  }
  coeffs_.assign(ncomp * grid_.spectral_size(), complex{});
}

SpectralField SpectralField::from_physical(Grid grid, int ncomp,
                                           std::span<const double> values) {
  SpectralField f(grid, ncomp);
  if (values.size() != ncomp * grid.physical_size()) {
    throw ShapeError("physical sample count does not match grid");
  }
  const int n = grid.n();
  for (int c = 0; c < ncomp; ++c) {
    auto comp = f.component(c);
    fft::forward(n, values.data() + c * grid.physical_size(), comp.data());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < grid.half(); ++l)
          if (grid.is_nyquist(i, j, l)) comp[grid.spectral_index(i, j, l)] = 0.0;
  }
  return f;
}

std::vector<double> SpectralField::component_physical(int c, int oversample) const {
  const int n = grid_.n();
  const int m = n * oversample;
  std::vector<double> out(std::size_t(m) * m * m);
  auto src = component(c);
  if (oversample == 1) {
    fft::inverse(n, src.data(), out.data());
    return out;
  }
  const int mh = m / 2 + 1;
  std::vector<complex> padded(std::size_t(m) * m * mh);
  for_each_mode(grid_, [&](const Mode& md) {
    const complex v = src[md.index];
    if (v == complex{}) return;
    const int pi = md.kx >= 0 ? md.kx : md.kx + m;
    const int pj = md.ky >= 0 ? md.ky : md.ky + m;
    padded[(std::size_t(pi) * m + pj) * mh + md.kz] = v;
  });
  fft::inverse(m, padded.data(), out.data());
  return out;
}

std::vector<double> SpectralField::to_physical(int oversample) const {
  const std::size_t m = std::size_t(grid_.n()) * oversample;
  const std::size_t block = m * m * m;
  std::vector<double> out(ncomp_ * block);
  for (int c = 0; c < ncomp_; ++c) {
    auto comp = component_physical(c, oversample);
    std::copy(comp.begin(), comp.end(), out.begin() + c * block);
  }
  return out;
}

double SpectralField::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& v : coeffs_) m = std::max(m, std::abs(v));
  return m;
}

void SpectralField::check_compatible(const SpectralField& o) const {
  if (!(grid_ == o.grid_) || ncomp_ != o.ncomp_) {
    throw ShapeError("fields differ in grid or component count");
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& v : coeffs_) v *= s;
  return *this;
}

}  // namespace emhd
