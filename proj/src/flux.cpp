#include "emhd/flux.hpp"

#include <cmath>

#include "emhd/errors.hpp"
#include "emhd/littlewood_paley.hpp"
#include "emhd/norms.hpp"
#include "emhd/operators.hpp"

namespace emhd::diag {
namespace {

struct Pair {
  double h;
  double pi;
};

Pair fluxes(const SpectralField& lorentz, const SpectralField& b, int Q) {
  const auto l_low = lp::low_pass(lorentz, Q);
  const auto b_low = lp::low_pass(b, Q);
  return {2.0 * inner(l_low, b_low), inner(l_low, curl(b_low))};
}

std::vector<double> squares(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * v[i];
  return out;
}

}  // namespace

double FluxSpectrum::fit_constant() const {
  double c = 0.0;
  for (const auto& r : rows) {
    if (r.kernel_bound > 0.0) c = std::max(c, std::abs(r.helicity_flux) / r.kernel_bound);
  }
  return c;
}

FluxSpectrum flux_spectrum(const SpectralField& b, int Q_max) {
  if (!b.is_vector()) throw ShapeError("flux_spectrum needs a vector field");
  if (Q_max < -1) throw ParameterError("flux_spectrum: Q_max must be >= -1");
  const auto lorentz = hall_nonlinearity(b).lorentz;
  const auto amps = lp::shell_amplitudes(b);
  const auto b2 = squares(amps.b);
  const auto beta2 = squares(amps.beta);
  FluxSpectrum out;
  for (int Q = -1; Q <= Q_max; ++Q) {
    const auto f = fluxes(lorentz, b, Q);
    FluxRow row;
    row.Q = Q;
    row.helicity_flux = f.h;
    row.energy_flux = f.pi;
    row.kernel_bound = std::pow(lp::kernel_convolve(b2, lp::Kernel::K, Q), 1.5);
    row.beta_bound = std::pow(lp::kernel_convolve(beta2, lp::Kernel::kappa, Q), 1.5);
    out.rows.push_back(row);
  }
  return out;
}

double helicity_flux(const SpectralField& b, int Q) {
  return fluxes(hall_nonlinearity(b).lorentz, b, Q).h;
}

double energy_flux(const SpectralField& b, int Q) {
  return fluxes(hall_nonlinearity(b).lorentz, b, Q).pi;
}

}  // namespace emhd::diag
