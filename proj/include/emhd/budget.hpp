#pragma once

#include <span>
#include <vector>

#include "emhd/solver.hpp"

namespace emhd::diag {

struct BudgetRecord {
  double t = 0;
  double energy = 0;                  // ||B||_2^2 / 2
  double helicity = 0;                // int A . B with A = biot_savart(B)
  double grad_energy = 0;             // ||grad B||_2^2
  double cumulative_dissipation = 0;  // 2 mu int_0^t ||grad B||_2^2, trapezoid
};

std::vector<BudgetRecord> budget(std::span<const SpectralField> snapshots, double mu);
// Uses the per-step log when present, otherwise the snapshots.
std::vector<BudgetRecord> budget(const Trajectory& traj);

// (||B(t)||^2 + 2 mu int_0^t ||grad B||^2 - ||B_0||^2) / ||B_0||^2 per record;
// zeros when B_0 = 0.
std::vector<double> energy_inequality_series(const std::vector<BudgetRecord>& records);
// The entry of largest magnitude in the series, keeping its sign.
double energy_inequality_residual(const Trajectory& traj);

}  // namespace emhd::diag
