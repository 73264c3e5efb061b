#pragma once

#include <vector>

#include "emhd/spectral_field.hpp"

namespace emhd::diag {

struct FluxRow {
  int Q = 0;
  double helicity_flux = 0;  // H_Q = 2 int L_{<=Q} . B_{<=Q}
  double energy_flux = 0;    // Pi_Q = int L_{<=Q} . curl B_{<=Q}
  double kernel_bound = 0;   // (K * b^2)^(3/2)(Q)
  double beta_bound = 0;     // (kappa * beta^2)^(3/2)(Q)
};

// L = (curl B) x B, dealiased; the low-pass is lp::low_pass.
struct FluxSpectrum {
  std::vector<FluxRow> rows;  // Q = -1 .. Q_max
  // max |H_Q| / kernel_bound over rows with a nonzero bound.
  double fit_constant() const;
};

FluxSpectrum flux_spectrum(const SpectralField& b, int Q_max);

double helicity_flux(const SpectralField& b, int Q);
double energy_flux(const SpectralField& b, int Q);

}  // namespace emhd::diag
