#pragma once

#include "emhd/solver.hpp"

namespace emhd::diag {

// B(x) -> B(lambda x): mode k moves to lambda k. Throws ParameterError if
// lambda is not a positive power of two or a nonzero mode would leave the
// dealiased spectrum.
SpectralField rescale_modes(const SpectralField& b, int lambda);

// || [evolve B0](lambda x, t) - [evolve B0(lambda .)](x, t / lambda^2) ||_2 / ||B0||_2,
// with t = cfg.t_end and the rescaled run using dt / lambda^2. The unscaled
// run uses the n / lambda grid so both runs truncate the same modes.
double scaling_residual(const SpectralField& b0, const SolverConfig& cfg, int lambda);

}  // namespace emhd::diag
