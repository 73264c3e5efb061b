#include "emhd/commutator.hpp"

#include <cmath>
#include <unordered_map>

#include "emhd/errors.hpp"
#include "emhd/littlewood_paley.hpp"
#include "emhd/mollifier.hpp"
#include "emhd/norms.hpp"
#include "emhd/operators.hpp"

namespace emhd::diag {

double TensorSamples::at(int i, int j, std::size_t idx) const {
  const std::size_t np = std::size_t(m) * m * m;
  return values[std::size_t(3 * i + j) * np + idx];
}

double TensorSamples::lp_norm(double p) const {
  if (!(p >= 1.0)) throw ParameterError("lp_norm: p must be >= 1");
  const std::size_t np = std::size_t(m) * m * m;
  std::vector<double> mag(np);
  for (std::size_t k = 0; k < np; ++k) {
    double s = 0.0;
    for (int c = 0; c < 9; ++c) s += values[c * np + k] * values[c * np + k];
    mag[k] = std::sqrt(s);
  }
  if (std::isinf(p)) {
    double mx = 0.0;
    for (double v : mag) mx = std::max(mx, v);
    return mx;
  }
  for (auto& v : mag) v = std::pow(v, p);
  return std::pow(integrate_samples(mag, m), 1.0 / p);
}

double TensorSamples::mean_trace() const {
  const std::size_t np = std::size_t(m) * m * m;
  std::vector<double> tr(np);
  for (std::size_t k = 0; k < np; ++k) tr[k] = at(0, 0, k) + at(1, 1, k) + at(2, 2, k);
  return pairwise_sum(tr) / double(np);
}

TensorSamples commutator(const SpectralField& b, const std::function<double(double)>& symbol) {
  if (!b.is_vector()) throw ShapeError("commutator needs a vector field");
  const Grid fine(2 * b.grid().n());
  const std::size_t np = fine.physical_size();
  std::unordered_map<long, double> cache;
  auto filter = [&](const SpectralField& f) {
    return apply_symbol(f, [&](const Mode& md) {
      const long k2 = long(md.k2());
      auto it = cache.find(k2);
      if (it == cache.end()) it = cache.emplace(k2, symbol(std::sqrt(double(k2)))).first;
      return it->second;
    });
  };
  const auto bf = resample(b, fine);
  const auto u = bf.to_physical();
  const auto uh = filter(bf).to_physical();

  TensorSamples out;
  out.m = fine.n();
  out.values.assign(9 * np, 0.0);
  std::vector<double> prod(np);
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      for (std::size_t k = 0; k < np; ++k) prod[k] = u[i * np + k] * u[j * np + k];
      const auto prod_h = filter(SpectralField::from_physical(fine, 1, prod)).to_physical();
      for (std::size_t k = 0; k < np; ++k) {
        const double v = prod_h[k] - u[i * np + k] * uh[j * np + k] -
                         uh[i * np + k] * u[j * np + k] + prod[k];
        out.values[(3 * i + j) * np + k] = v;
        out.values[(3 * j + i) * np + k] = v;
      }
    }
  }
  return out;
}

TensorSamples shell_commutator(const SpectralField& b, int Q) {
  if (Q < -1) throw ParameterError("shell_commutator: Q must be >= -1");
  return commutator(b, [Q](double r) { return lp::low_symbol(Q, r); });
}

TensorSamples mollifier_commutator(const SpectralField& b, double delta) {
  MollifierSpec spec;
  spec.delta = delta;
  spec.validate();
  return commutator(b, [delta](double r) { return mollifier_symbol(delta * r); });
}

}  // namespace emhd::diag
