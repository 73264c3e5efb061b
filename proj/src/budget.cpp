#include "emhd/budget.hpp"

#include <cmath>

#include "emhd/norms.hpp"
#include "emhd/operators.hpp"

namespace emhd::diag {
namespace {

void accumulate(std::vector<BudgetRecord>& out, double mu) {
  for (std::size_t i = 1; i < out.size(); ++i) {
    const double h = out[i].t - out[i - 1].t;
    out[i].cumulative_dissipation = out[i - 1].cumulative_dissipation +
                                    mu * h * (out[i].grad_energy + out[i - 1].grad_energy);
  }
}

}  // namespace

std::vector<BudgetRecord> budget(std::span<const SpectralField> snapshots, double mu) {
  std::vector<BudgetRecord> out;
  out.reserve(snapshots.size());
  for (const auto& b : snapshots) {
    BudgetRecord r;
    r.t = b.time();
    r.energy = 0.5 * inner(b, b);
    r.helicity = inner(biot_savart(b), b);
    r.grad_energy = grad_l2_sq(b);
    out.push_back(r);
  }
  accumulate(out, mu);
  return out;
}

std::vector<BudgetRecord> budget(const Trajectory& traj) {
  if (traj.log.empty()) return budget(traj.snapshots, traj.config.mu);
  std::vector<BudgetRecord> out;
  out.reserve(traj.log.size());
  for (const auto& s : traj.log) {
    out.push_back({s.t, s.energy, s.helicity, s.grad_l2 * s.grad_l2, 0.0});
  }
  accumulate(out, traj.config.mu);
  return out;
}

std::vector<double> energy_inequality_series(const std::vector<BudgetRecord>& records) {
  std::vector<double> out(records.size(), 0.0);
  if (records.empty()) return out;
  const double e0 = records.front().energy;
  if (e0 == 0.0) return out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    out[i] = (records[i].energy + 0.5 * records[i].cumulative_dissipation - e0) / e0;
  }
  return out;
}

double energy_inequality_residual(const Trajectory& traj) {
  double worst = 0.0;
  for (double v : energy_inequality_series(budget(traj))) {
    if (std::abs(v) > std::abs(worst)) worst = v;
  }
  return worst;
}

}  // namespace emhd::diag
