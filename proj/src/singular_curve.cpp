#include "emhd/singular_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "emhd/errors.hpp"
#include "emhd/norms.hpp"

namespace emhd {
namespace {

double distance(const Point3& a, const Point3& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Signed minimum-image offset on a period-2pi axis.
double wrap(double d) {
  const double L = Grid::length();
  d = std::fmod(d, L);
  if (d > L / 2) d -= L;
  if (d < -L / 2) d += L;
  return d;
}

double smootherstep(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

void check_epsilon(const MollifierSpec& spec) {
  spec.validate();
  // The ball of radius 3 eps where chi_eps != 1 must fit inside the torus.
  if (3.0 * spec.epsilon >= Grid::length() / 2) {
    throw ParameterError("epsilon too large: cutoff support 3*eps must stay below pi");
  }
}

}  // namespace

double hoelder_half_seminorm(const std::vector<CurveSample>& samples) {
  double h = 0.0;
  for (std::size_t a = 0; a < samples.size(); ++a) {
    for (std::size_t b = a + 1; b < samples.size(); ++b) {
      const double dt = std::abs(samples[b].t - samples[a].t);
      h = std::max(h, distance(samples[a].x, samples[b].x) / std::sqrt(dt));
    }
  }
  return h;
}

SingularCurve::SingularCurve(std::vector<CurveSample> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) throw ParameterError("curve needs at least one sample");
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    if (!(samples_[i].t > samples_[i - 1].t)) {
      throw ParameterError("curve sample times must be strictly increasing");
    }
  }
  hoelder_ = hoelder_half_seminorm(samples_);
}

Point3 SingularCurve::position(double t) const {
  if (t <= samples_.front().t) return samples_.front().x;
  if (t >= samples_.back().t) return samples_.back().x;
  auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                             [](double v, const CurveSample& s) { return v < s.t; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double w = (t - lo.t) / (hi.t - lo.t);
  Point3 p;
  for (int i = 0; i < 3; ++i) p[i] = (1.0 - w) * lo.x[i] + w * hi.x[i];
  return p;
}

Point3 mollified_position(const SingularCurve& curve, double epsilon, double t) {
  if (!(epsilon > 0.0)) throw ParameterError("curve mollification needs epsilon > 0");
  const double width = epsilon * epsilon;
  const double step = width / 8.0;
  Point3 acc{0.0, 0.0, 0.0};
  double mass = 0.0;
  // tau runs over [-eps^2, eps^2]; the endpoint weights vanish with the profile.
  for (int i = -8; i <= 8; ++i) {
    const double tau = i * step;
    const double w = mollifier_profile_1d(tau / width) / width * step;
    const Point3 p = curve.position(t - tau);
    for (int c = 0; c < 3; ++c) acc[c] += w * p[c];
    mass += w;
  }
  for (int c = 0; c < 3; ++c) acc[c] /= mass;
  return acc;
}

SingularCurve mollify_curve(const SingularCurve& curve, double epsilon) {
  std::vector<CurveSample> out;
  out.reserve(curve.samples().size());
  for (const auto& s : curve.samples()) {
    out.push_back({s.t, mollified_position(curve, epsilon, s.t)});
  }
  return SingularCurve(std::move(out));
}

double cutoff_profile(double r) { return smootherstep(r - 2.0); }

double cutoff_profile_d1(double r) {
  const double t = r - 2.0;
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 30.0 * t * t * (1.0 - t) * (1.0 - t);
}

double cutoff_profile_d2(double r) {
  const double t = r - 2.0;
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 60.0 * t * (1.0 - t) * (1.0 - 2.0 * t);
}

SpectralField singular_cutoff(const SingularCurve& curve, const MollifierSpec& spec,
                              double t, const Grid& grid) {
  check_epsilon(spec);
  const Point3 center = mollified_position(curve, spec.epsilon, t);
  const int n = grid.n();
  const double h = grid.spacing();
  std::vector<double> values(grid.physical_size());
  for (int i = 0; i < n; ++i) {
    const double dx = wrap(i * h - center[0]);
    for (int j = 0; j < n; ++j) {
      const double dy = wrap(j * h - center[1]);
      for (int l = 0; l < n; ++l) {
        const double dz = wrap(l * h - center[2]);
        const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
        values[grid.physical_index(i, j, l)] = cutoff_profile(r / spec.epsilon);
      }
    }
  }
  auto f = SpectralField::from_physical(grid, 1, values);
  f.set_time(t);
  return f;
}

double cutoff_derivative_norm(const MollifierSpec& spec, int gamma, double p,
                              int resolution) {
  check_epsilon(spec);
  if (gamma != 1 && gamma != 2) throw ParameterError("derivative order must be 1 or 2");
  if (!(p >= 1.0)) throw ParameterError("norm exponent must be >= 1");
  // |D^gamma chi_eps| is radial about s_eps(t), so the box is centered there.
  const double eps = spec.epsilon;
  const double half = 3.0 * eps;
  const double h = 2.0 * half / resolution;
  std::vector<double> samples;
  samples.reserve(std::size_t(resolution) * resolution * resolution);
  double peak = 0.0;
  for (int i = 0; i < resolution; ++i) {
    const double x = -half + (i + 0.5) * h;
    for (int j = 0; j < resolution; ++j) {
      const double y = -half + (j + 0.5) * h;
      for (int k = 0; k < resolution; ++k) {
        const double z = -half + (k + 0.5) * h;
        const double r = std::sqrt(x * x + y * y + z * z);
        const double u = r / eps;
        double mag = 0.0;
        if (gamma == 1) {
          mag = std::abs(cutoff_profile_d1(u)) / eps;
        } else if (r > 0.0) {
          // Hessian of a radial function: f'' radially, f'/r twice tangentially.
          const double f2 = cutoff_profile_d2(u) / (eps * eps);
          const double f1r = cutoff_profile_d1(u) / eps / r;
          mag = std::sqrt(f2 * f2 + 2.0 * f1r * f1r);
        }
        peak = std::max(peak, mag);
        if (!std::isinf(p)) samples.push_back(std::pow(mag, p));
      }
    }
  }
  if (std::isinf(p)) return peak;
  return std::pow(pairwise_sum(samples) * h * h * h, 1.0 / p);
}

}  // namespace emhd
