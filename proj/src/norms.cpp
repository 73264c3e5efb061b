#include "emhd/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "emhd/errors.hpp"

namespace emhd {
namespace {

double pairwise(const double* v, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise(v, h) + pairwise(v + h, n - h);
}

void require_compatible(const SpectralField& f, const SpectralField& g) {
  if (!(f.grid() == g.grid()) || f.ncomp() != g.ncomp()) {
    throw ShapeError("inner product of incompatible fields");
  }
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise(values.data(), values.size());
}

double integrate_samples(std::span<const double> values, int m) {
  const double h = Grid::length() / m;
  return pairwise_sum(values) * h * h * h;
}

double inner(const SpectralField& f, const SpectralField& g) {
  require_compatible(f, g);
  std::vector<double> terms;
  terms.reserve(f.grid().spectral_size());
  for_each_mode(f.grid(), [&](const Mode& m) {
    double s = 0.0;
    for (int c = 0; c < f.ncomp(); ++c) {
      const complex a = f.at(c, m.index), b = g.at(c, m.index);
      s += a.real() * b.real() + a.imag() * b.imag();
    }
    terms.push_back(m.weight * s);
  });
  return Grid::volume() * pairwise_sum(terms);
}

double l2_norm(const SpectralField& f) { return std::sqrt(std::max(0.0, inner(f, f))); }

double grad_inner(const SpectralField& f, const SpectralField& g) {
  require_compatible(f, g);
  std::vector<double> terms;
  terms.reserve(f.grid().spectral_size());
  for_each_mode(f.grid(), [&](const Mode& m) {
    double s = 0.0;
    for (int c = 0; c < f.ncomp(); ++c) {
      const complex a = f.at(c, m.index), b = g.at(c, m.index);
      s += a.real() * b.real() + a.imag() * b.imag();
    }
    terms.push_back(m.weight * m.k2() * s);
  });
  return Grid::volume() * pairwise_sum(terms);
}

double grad_l2_sq(const SpectralField& f) { return grad_inner(f, f); }

std::vector<double> magnitude_samples(const SpectralField& f, int oversample) {
  const auto phys = f.to_physical(oversample);
  const std::size_t m = std::size_t(f.grid().n()) * oversample;
  const std::size_t np = m * m * m;
  std::vector<double> mag(np, 0.0);
  for (int c = 0; c < f.ncomp(); ++c)
    for (std::size_t i = 0; i < np; ++i) mag[i] += phys[c * np + i] * phys[c * np + i];
  for (auto& v : mag) v = std::sqrt(v);
  return mag;
}

double lp_norm(const SpectralField& f, double p) {
  if (!(p >= 1.0)) throw ParameterError("lp_norm: exponent must be >= 1");
  if (p == 2.0) return l2_norm(f);
  auto mag = magnitude_samples(f, 2);
  if (std::isinf(p)) return *std::max_element(mag.begin(), mag.end());
  for (auto& v : mag) v = std::pow(v, p);
  return std::pow(integrate_samples(mag, 2 * f.grid().n()), 1.0 / p);
}

}  // namespace emhd
