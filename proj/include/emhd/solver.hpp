#pragma once

#include <memory>
#include <vector>

#include "emhd/config.hpp"
#include "emhd/errors.hpp"
#include "emhd/spectral_field.hpp"

namespace emhd {

// B = (sin z + cos y, sin x + cos z, sin y + cos x); curl B = B.
SpectralField abc_field(const Grid& grid);
// B = (0, cos(k x1), 0).
SpectralField single_mode_field(const Grid& grid, int k);
// Isotropic Gaussian field confined to LP shells [q_lo, q_hi], projected
// divergence-free, dealiased, mean-free and normalized to unit energy.
SpectralField random_shells_field(const Grid& grid, int q_lo, int q_hi,
                                  std::uint64_t seed);
SpectralField initial_field(const SolverConfig& cfg);

// 1 / (d_i ||B||_inf k_max^2) with k_max the dealias cutoff; +inf when the
// field vanishes or d_i = 0.
double whistler_dt_limit(const SpectralField& b, const SolverConfig& cfg);
// Throws ConfigError("cfl_safety") when dt exceeds cfl_safety times the limit.
void check_cfl(const SpectralField& b0, const SolverConfig& cfg);

// One step of dB/dt = -d_i curl((curl B) x B) + mu Lap B.
SpectralField step(const SpectralField& b, const SolverConfig& cfg);
SpectralField step(const SpectralField& b, const SolverConfig& cfg, double dt);

// How the vector potential of a trajectory is fixed.
enum class Gauge {
  none,     // no potential carried
  coulomb,  // div A = 0: dA/dt = -d_i P((curl B) x B) + mu Lap A
  hall,     // unprojected: dA/dt = -d_i (curl B) x B + mu Lap A
};

struct StepRecord {
  double t;
  double energy;   // ||B||_2^2 / 2
  double helicity; // int A . B, Coulomb gauge
  double l2;       // ||B||_2
  double linf;     // max |B| on the native grid
  double grad_l2;  // ||grad B||_2
};
StepRecord measure(const SpectralField& b);

struct Trajectory {
  SolverConfig config;
  std::vector<SpectralField> snapshots;   // B
  std::vector<SpectralField> potentials;  // A, empty when gauge == none
  Gauge gauge = Gauge::none;
  std::vector<StepRecord> log;
};

struct InstabilityError : Error {
  InstabilityError(const std::string& what, std::shared_ptr<Trajectory> partial_run)
      : Error(what), partial(std::move(partial_run)) {}
  std::shared_ptr<Trajectory> partial;  // up to and including the last finite state
};

Trajectory evolve(const SolverConfig& cfg);
Trajectory evolve_from(const SpectralField& b0, const SolverConfig& cfg);

Trajectory evolve_potential(const SolverConfig& cfg, Gauge gauge = Gauge::coulomb);
Trajectory evolve_potential_from(const SpectralField& a0, const SolverConfig& cfg,
                                 Gauge gauge = Gauge::coulomb);

}  // namespace emhd
