#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "emhd/littlewood_paley.hpp"
#include "util.hpp"

namespace testutil {

// Sum of modes a cos(k.x + phase) with a perpendicular to k.
struct TrigMode {
  std::array<int, 3> k;
  std::array<double, 3> a;
  double phase;
};

using Vec = std::array<double, 3>;

inline Vec cross3(const Vec& u, const Vec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}
inline double dot3(const Vec& u, const Vec& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

struct TrigField {
  std::vector<TrigMode> modes;

  // Field value, and its curl when `curl` is set; `weight` scales each mode.
  Vec eval(double x, double y, double z, bool curl,
           const std::function<double(double)>& weight) const {
    Vec out{0, 0, 0};
    for (const auto& m : modes) {
      const Vec k{double(m.k[0]), double(m.k[1]), double(m.k[2])};
      const double ph = k[0] * x + k[1] * y + k[2] * z + m.phase;
      const double w = weight(std::sqrt(dot3(k, k)));
      // curl(a cos) = -(k x a) sin
      const Vec v = curl ? cross3(k, m.a) : m.a;
      const double s = curl ? -std::sin(ph) : std::cos(ph);
      for (int c = 0; c < 3; ++c) out[c] += w * s * v[c];
    }
    return out;
  }

  SpectralField sample(const Grid& g) const {
    return testutil::sample_vector(
        g, [this](double x, double y, double z) { return eval(x, y, z, false, one); });
  }

  static double one(double) { return 1.0; }
};

// Brute-force quadrature of H_Q = 2 int L . S_Q^2 B and Pi_Q = int L . curl S_Q^2 B
// on an m^3 grid, L = (curl B) x B evaluated pointwise.
inline std::pair<double, double> flux_oracle(const TrigField& f, int Q, int m) {
  auto w2 = [Q](double r) {
    const double s = emhd::lp::low_symbol(Q, r);
    return s * s;
  };
  const double h = 2 * std::numbers::pi / m;
  double hq = 0, pq = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l) {
        const double x = i * h, y = j * h, z = l * h;
        const Vec b = f.eval(x, y, z, false, TrigField::one);
        const Vec jc = f.eval(x, y, z, true, TrigField::one);
        const Vec lor = cross3(jc, b);
        hq += 2 * dot3(lor, f.eval(x, y, z, false, w2));
        pq += dot3(lor, f.eval(x, y, z, true, w2));
      }
  const double cell = h * h * h;
  return {hq * cell, pq * cell};
}

inline double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace testutil
