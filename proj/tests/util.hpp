#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "emhd/operators.hpp"
#include "emhd/spectral_field.hpp"

namespace testutil {

using emhd::Grid;
using emhd::SpectralField;

using VecFn = std::function<std::array<double, 3>(double, double, double)>;
using ScalarFn = std::function<double(double, double, double)>;

inline SpectralField sample_vector(const Grid& g, const VecFn& f) {
  const int n = g.n();
  const std::size_t np = g.physical_size();
  std::vector<double> v(3 * np);
  const double h = g.spacing();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const auto val = f(i * h, j * h, l * h);
        const auto idx = g.physical_index(i, j, l);
        for (int c = 0; c < 3; ++c) v[c * np + idx] = val[c];
      }
  return SpectralField::from_physical(g, 3, v);
}

inline SpectralField sample_scalar(const Grid& g, const ScalarFn& f) {
  const int n = g.n();
  std::vector<double> v(g.physical_size());
  const double h = g.spacing();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) v[g.physical_index(i, j, l)] = f(i * h, j * h, l * h);
  return SpectralField::from_physical(g, 1, v);
}

// Random real field with every retained mode |k_i| <= kmax filled.
inline SpectralField random_field(const Grid& g, int ncomp, int kmax, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<double> noise(std::size_t(ncomp) * g.physical_size());
  for (auto& v : noise) v = nd(rng);
  auto f = SpectralField::from_physical(g, ncomp, noise);
  f = emhd::apply_symbol(f, [kmax](const emhd::Mode& m) {
    return (std::abs(m.kx) <= kmax && std::abs(m.ky) <= kmax && m.kz <= kmax) ? 1.0 : 0.0;
  });
  return f;
}

inline SpectralField random_solenoidal(const Grid& g, int kmax, unsigned seed) {
  auto f = emhd::leray_project(random_field(g, 3, kmax, seed));
  for (int c = 0; c < 3; ++c) f.at(c, 0) = 0.0;
  return f;
}

// cos(k x1) placed directly on the +-k coefficients.
inline SpectralField cos_mode(const Grid& g, int k, int ncomp = 1, int comp = 0) {
  SpectralField f(g, ncomp);
  f.at(comp, g.spectral_index(g.index_of(k), 0, 0)) = 0.5;
  f.at(comp, g.spectral_index(g.index_of(-k), 0, 0)) = 0.5;
  return f;
}

// Max absolute coefficient difference.
inline double max_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) m = std::max(m, std::abs(ca[i] - cb[i]));
  return m;
}

// Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// Independent radial transform of the normalized bump:
// eta_hat(rho) = 4 pi int_0^1 eta(r) r^2 sinc(rho r) dr.
inline double eta_hat_oracle(double rho) {
  auto bumpf = [](double r) { return r < 1 ? std::exp(-1.0 / (1.0 - r * r)) : 0.0; };
  const double mass = simpson([&](double r) { return 4 * std::numbers::pi * r * r * bumpf(r); }, 0, 1, 20000);
  return simpson(
             [&](double r) {
               const double x = rho * r;
               const double sinc = x == 0 ? 1.0 : std::sin(x) / x;
               return 4 * std::numbers::pi * r * r * bumpf(r) * sinc;
             },
             0, 1, 20000) /
         mass;
}

}  // namespace testutil
