#include "emhd/mollifier.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "emhd/errors.hpp"
#include "emhd/operators.hpp"

namespace emhd {
namespace {

constexpr int kRadialPoints = 2048;
constexpr double kPi = std::numbers::pi;

// The integrands below are even in r and flat to all orders at r = 1, so the
// plain trapezoid rule on [0, 1] converges faster than any power.
template <class Fn>
double radial_trapezoid(Fn&& fn, int points) {
  const double h = 1.0 / points;
  double s = 0.5 * fn(0.0);
  for (int i = 1; i < points; ++i) s += fn(i * h);
  return s * h;
}

double bump_mass_3d() {
  static const double mass = 4.0 * kPi * radial_trapezoid(
      [](double r) { return bump(r) * r * r; }, kRadialPoints);
  return mass;
}

double bump_mass_1d() {
  static const double mass =
      2.0 * radial_trapezoid([](double t) { return bump(t); }, kRadialPoints);
  return mass;
}

}  // namespace

void MollifierSpec::validate() const {
  if (!(delta > 0.0)) throw ParameterError("mollifier delta must be > 0");
  if (!(epsilon > 0.0)) throw ParameterError("mollifier epsilon must be > 0");
}

double bump(double r) {
  const double a = std::abs(r);
  if (a >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - a * a));
}

double mollifier_profile(double r) { return bump(r) / bump_mass_3d(); }

double mollifier_profile_1d(double t) { return bump(t) / bump_mass_1d(); }

double mollifier_mass() {
  // Finer rule than the one used for normalization.
  return 4.0 * kPi * radial_trapezoid(
      [](double r) { return mollifier_profile(r) * r * r; }, 3 * kRadialPoints);
}

double mollifier_symbol(double rho) {
  if (rho == 0.0) return 1.0;
  const double integral = radial_trapezoid(
      [rho](double r) {
        if (r == 0.0) return 0.0;
        return bump(r) * r * std::sin(rho * r) / rho;
      },
      kRadialPoints);
  return 4.0 * kPi * integral / bump_mass_3d();
}

SpectralField mollify(const SpectralField& f, const MollifierSpec& spec) {
  spec.validate();
  if (spec.delta >= Grid::length() / 2) {
    throw ParameterError("mollifier delta must be below half the period");
  }
  std::map<long, double> cache;
  auto out = apply_symbol(f, [&](const Mode& m) {
    const long k2 = long(m.k2());
    auto it = cache.find(k2);
    if (it != cache.end()) return it->second;
    const double s = mollifier_symbol(spec.delta * std::sqrt(double(k2)));
    cache.emplace(k2, s);
    return s;
  });
  out.set_time(f.time());
  return out;
}

}  // namespace emhd
