#pragma once

#include <functional>
#include <vector>

#include "emhd/spectral_field.hpp"

namespace emhd::diag {

// Symmetric 3x3 tensor field sampled on an m^3 grid; component (i, j) is
// values[(3 * i + j) * m^3 + idx].
struct TensorSamples {
  int m = 0;
  std::vector<double> values;

  double at(int i, int j, std::size_t idx) const;
  // (int |r|^p)^(1/p) with |r| the pointwise Frobenius norm; p = inf is the max.
  double lp_norm(double p) const;
  // Volume average of the trace.
  double mean_trace() const;
};

// r_h(B, B) = int h(y) (B(x-y) - B(x)) (x) (B(x-y) - B(x)) dy for a unit-mass
// kernel h given by its radial Fourier symbol, expanded as
// (B_i B_j)_h - B_i (B_j)_h - (B_i)_h B_j + B_i B_j. Sampled on the 2n grid,
// where every product of dealiased fields is represented exactly.
TensorSamples commutator(const SpectralField& b, const std::function<double(double)>& symbol);

// Appendix form: h the kernel of the low-pass up to shell Q.
TensorSamples shell_commutator(const SpectralField& b, int Q);
// Mollifier form with eta_delta.
TensorSamples mollifier_commutator(const SpectralField& b, double delta);

}  // namespace emhd::diag
