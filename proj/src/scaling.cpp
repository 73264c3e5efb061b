#include "emhd/scaling.hpp"

#include <cmath>
#include <cstdlib>

#include "emhd/errors.hpp"
#include "emhd/norms.hpp"
#include "emhd/operators.hpp"

namespace emhd::diag {
namespace {

// Copies mode k of `b` to mode lambda k of a field on `target`.
SpectralField rescale_into(const SpectralField& b, int lambda, const Grid& target) {
  if (lambda < 1 || (lambda & (lambda - 1)) != 0) {
    throw ParameterError("scaling factor must be a positive power of two");
  }
  SpectralField out(target, b.ncomp());
  out.set_time(b.time());
  for_each_mode(b.grid(), [&](const Mode& m) {
    bool nonzero = false;
    for (int c = 0; c < b.ncomp(); ++c) nonzero = nonzero || std::abs(b.at(c, m.index)) > 0.0;
    if (!nonzero) return;
    const int kx = lambda * m.kx, ky = lambda * m.ky, kz = lambda * m.kz;
    if (!target.is_dealiased(kx, ky, kz)) {
      throw ParameterError("rescaled mode leaves the dealiased spectrum");
    }
    const std::size_t j = target.spectral_index(target.index_of(kx), target.index_of(ky), kz);
    for (int c = 0; c < b.ncomp(); ++c) out.at(c, j) = b.at(c, m.index);
  });
  return out;
}

}  // namespace

SpectralField rescale_modes(const SpectralField& b, int lambda) {
  return rescale_into(b, lambda, b.grid());
}

double scaling_residual(const SpectralField& b0, const SolverConfig& cfg, int lambda) {
  const auto b0_scaled = rescale_modes(b0, lambda);
  const double norm0 = l2_norm(b0);
  if (lambda == 1 || norm0 == 0.0) return 0.0;

  // The unscaled run lives on the n / lambda grid: its dealiased modes map
  // one to one onto the modes of the n grid that are multiples of lambda, and
  // the scaled run never leaves those.
  const int coarse_n = b0.grid().n() / lambda;
  if (coarse_n < 8) throw ParameterError("grid too small for this scaling factor");
  const Grid coarse(coarse_n);
  SolverConfig direct = cfg;
  direct.n = coarse_n;
  direct.snapshot_every = std::max<int>(1, int(std::ceil(cfg.t_end / cfg.dt)));
  const auto t1 = evolve_from(resample(b0, coarse), direct);

  SolverConfig scaled = cfg;
  const double l2 = double(lambda) * lambda;
  scaled.dt = cfg.dt / l2;
  scaled.t_end = cfg.t_end / l2;
  scaled.snapshot_every = direct.snapshot_every;
  const auto t2 = evolve_from(b0_scaled, scaled);

  const auto diff = rescale_into(t1.snapshots.back(), lambda, b0.grid()) - t2.snapshots.back();
  return l2_norm(diff) / norm0;
}

}  // namespace emhd::diag
