#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "emhd/solver.hpp"

namespace emhd::diag {

struct CrossEnergyPoint {
  double t = 0;
  double lhs = 0;       // int B1.B2 (t) - int B1.B2 (0)
  double rhs = 0;       // time integrals of the dissipation and flux terms
  double residual = 0;  // (lhs - rhs) / (||B1(0)||_2 ||B2(0)||_2)
};

// Residual of
//   int B1.B2 |_0^t = -2 mu int_0^t int grad B1 : grad B2
//                     + d_i int_0^t int ((curl B1) x Z) . (curl Z),  Z = B2 - B1,
// at every snapshot, trapezoid in time. Throws ParameterError when the
// trajectories differ in grid, mu, d_i or snapshot times.
std::vector<CrossEnergyPoint> cross_energy_residual(const Trajectory& traj1,
                                                    const Trajectory& traj2);
double max_abs_residual(const std::vector<CrossEnergyPoint>& points);

struct UniquenessRow {
  double t = 0;
  double z_l2_sq = 0;          // ||Z(t)||_2^2
  double besov_time_norm = 0;  // ||curl B1||_{L^q(0, t; B^r_{p,inf})}
  bool bound_ok = false;       // ||Z(t)||^2 <= ||Z(0)||^2 exp(C (t + besov_time_norm))
};

struct UniquenessReport {
  std::vector<UniquenessRow> rows;
  // Smallest C >= 0 for which the bound holds at every snapshot.
  double fitted_C = 0;
  double c_cap = std::numeric_limits<double>::infinity();
  bool bound_ok = false;  // every row holds and fitted_C <= c_cap
};

// ||curl B||_{B^r_{p,inf}} for each snapshot of the trajectory.
std::vector<double> curl_besov_series(const Trajectory& traj, double p, double r);

// (p, q, r) must classify as uniqueness_region (ClassificationError otherwise).
UniquenessReport uniqueness_bound_check(
    const Trajectory& traj1, const Trajectory& traj2, double p, double q, double r,
    double c_cap = std::numeric_limits<double>::infinity());
// Same, with curl_besov_series(traj1, p, r) precomputed.
UniquenessReport uniqueness_bound_check(
    const Trajectory& traj1, const Trajectory& traj2, std::span<const double> besov,
    double p, double q, double r, double c_cap = std::numeric_limits<double>::infinity());

struct EnsembleSpec {
  SolverConfig base;        // the unperturbed run B1
  double perturb = 1e-3;    // ||B2(0) - B1(0)||_2 / ||B1(0)||_2
  int shell = 2;            // LP shell of the random perturbation
  std::vector<std::uint64_t> seeds;
  double p = 3, q = 2, r = 1;
  double c_cap = std::numeric_limits<double>::infinity();
  unsigned threads = 1;     // worker threads; reports keep seed order
};

struct EnsembleResult {
  Trajectory reference;
  std::vector<UniquenessReport> reports;  // one per seed, in seed order
  double fitted_C = 0;                    // max over seeds
  bool bound_ok = false;                  // every report holds with fitted_C
};

// B2(0) = B1(0) + perturb ||B1(0)||_2 * (unit-L2 random field in `shell`).
SpectralField perturbed_initial(const SpectralField& b1, double perturb, int shell,
                                std::uint64_t seed);
EnsembleResult uniqueness_ensemble(const EnsembleSpec& spec);

}  // namespace emhd::diag
