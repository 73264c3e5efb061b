#pragma once

#include <array>
#include <vector>

#include "emhd/grid.hpp"
#include "emhd/mollifier.hpp"
#include "emhd/spectral_field.hpp"

namespace emhd {

using Point3 = std::array<double, 3>;

struct CurveSample {
  double t;
  Point3 x;
};

// Time-stamped samples of a curve t -> s(t) on [t_first, t_last].
// Positions are unwrapped coordinates; distances to grid points are taken
// with the periodic minimum image.
class SingularCurve {
 public:
  explicit SingularCurve(std::vector<CurveSample> samples);

  const std::vector<CurveSample>& samples() const { return samples_; }
  double hoelder_seminorm() const { return hoelder_; }
  double t_first() const { return samples_.front().t; }
  double t_last() const { return samples_.back().t; }

  // Piecewise-linear position, held constant outside the sampled interval
  // (the constant extension used before mollifying in time).
  Point3 position(double t) const;

 private:
  std::vector<CurveSample> samples_;
  double hoelder_ = 0.0;
};

// max over sample pairs of |s(t1) - s(t2)| / |t1 - t2|^(1/2)
double hoelder_half_seminorm(const std::vector<CurveSample>& samples);

// s_eps(t) = eps^-2 int eta(tau / eps^2) s_ext(t - tau) dtau, trapezoid
// quadrature with step eps^2 / 8.
Point3 mollified_position(const SingularCurve& curve, double epsilon, double t);
// s_eps sampled at the curve's own sample times.
SingularCurve mollify_curve(const SingularCurve& curve, double epsilon);

// Radial cutoff profile: 0 on [0, 2], 1 on [3, inf), quintic C^2 ramp between.
double cutoff_profile(double r);
double cutoff_profile_d1(double r);
double cutoff_profile_d2(double r);

// chi_eps(t, x) = chi(|x - s_eps(t)| / eps) sampled on `grid`.
SpectralField singular_cutoff(const SingularCurve& curve, const MollifierSpec& spec,
                              double t, const Grid& grid);

// ||D^gamma chi_eps(t, .)||_p for gamma in {1, 2}, by midpoint quadrature
// on a resolution^3 box covering the support of the derivatives. The value
// does not depend on t: chi_eps(t, .) is a translate of one radial profile.
double cutoff_derivative_norm(const MollifierSpec& spec, int gamma, double p,
                              int resolution = 160);

}  // namespace emhd
