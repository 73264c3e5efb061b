#include "emhd/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "emhd/errors.hpp"
#include "emhd/littlewood_paley.hpp"
#include "emhd/norms.hpp"
#include "emhd/operators.hpp"
#include "emhd/region.hpp"

namespace emhd::diag {
namespace {

void check_pair(const Trajectory& a, const Trajectory& b) {
  if (a.snapshots.empty() || b.snapshots.empty()) {
    throw ParameterError("trajectories must contain snapshots");
  }
  if (a.snapshots.front().grid() != b.snapshots.front().grid()) {
    throw ParameterError("trajectories live on different grids");
  }
  if (a.config.mu != b.config.mu || a.config.d_i != b.config.d_i) {
    throw ParameterError("trajectories differ in mu or d_i");
  }
  if (a.snapshots.size() != b.snapshots.size()) {
    throw ParameterError("trajectories have different snapshot counts");
  }
  for (std::size_t i = 0; i < a.snapshots.size(); ++i) {
    const double ta = a.snapshots[i].time(), tb = b.snapshots[i].time();
    if (std::abs(ta - tb) > 1e-12 * std::max(1.0, std::abs(ta))) {
      throw ParameterError("trajectories have different snapshot times");
    }
  }
}

void check_region(double p, double q, double r) {
  const auto c = region_classify(p, q, r);
  if (c.classification != Region::uniqueness_region) {
    throw ClassificationError("(p,q,r) is " + to_string(c.classification) +
                              ", not uniqueness_region; see region_classify");
  }
}

}  // namespace

std::vector<CrossEnergyPoint> cross_energy_residual(const Trajectory& traj1,
                                                    const Trajectory& traj2) {
  check_pair(traj1, traj2);
  const double mu = traj1.config.mu, d_i = traj1.config.d_i;
  const auto& s1 = traj1.snapshots;
  const auto& s2 = traj2.snapshots;
  const double scale = l2_norm(s1.front()) * l2_norm(s2.front());

  std::vector<double> integrand(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    const auto z = s2[i] - s1[i];
    const auto curl_z = curl(z);
    double v = -2.0 * mu * grad_inner(s1[i], s2[i]);
    if (d_i != 0.0) v += d_i * inner(cross(curl(s1[i]), z), curl_z);
    integrand[i] = v;
  }

  std::vector<CrossEnergyPoint> out(s1.size());
  const double c0 = inner(s1.front(), s2.front());
  double acc = 0.0;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (i > 0) {
      acc += 0.5 * (s1[i].time() - s1[i - 1].time()) * (integrand[i] + integrand[i - 1]);
    }
    CrossEnergyPoint& pt = out[i];
    pt.t = s1[i].time();
    pt.lhs = inner(s1[i], s2[i]) - c0;
    pt.rhs = acc;
    pt.residual = scale > 0.0 ? (pt.lhs - pt.rhs) / scale : 0.0;
  }
  return out;
}

double max_abs_residual(const std::vector<CrossEnergyPoint>& points) {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, std::abs(p.residual));
  return m;
}

std::vector<double> curl_besov_series(const Trajectory& traj, double p, double r) {
  const lp::BesovSpec spec{r, p, std::numeric_limits<double>::infinity()};
  std::vector<double> out;
  out.reserve(traj.snapshots.size());
  for (const auto& b : traj.snapshots) out.push_back(lp::besov_norm(curl(b), spec));
  return out;
}

UniquenessReport uniqueness_bound_check(const Trajectory& traj1, const Trajectory& traj2,
                                        double p, double q, double r, double c_cap) {
  check_region(p, q, r);
  check_pair(traj1, traj2);
  const auto besov = curl_besov_series(traj1, p, r);
  return uniqueness_bound_check(traj1, traj2, besov, p, q, r, c_cap);
}

UniquenessReport uniqueness_bound_check(const Trajectory& traj1, const Trajectory& traj2,
                                        std::span<const double> besov, double p, double q,
                                        double r, double c_cap) {
  check_region(p, q, r);
  check_pair(traj1, traj2);
  const auto& s1 = traj1.snapshots;
  const auto& s2 = traj2.snapshots;
  if (besov.size() != s1.size()) throw ParameterError("besov series length mismatch");

  UniquenessReport rep;
  rep.c_cap = c_cap;
  rep.rows.resize(s1.size());
  // Cumulative L^q time norm of the per-snapshot Besov norms.
  double acc = 0.0, running_max = 0.0;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    auto& row = rep.rows[i];
    row.t = s1[i].time();
    const auto z = s2[i] - s1[i];
    row.z_l2_sq = inner(z, z);
    if (std::isinf(q)) {
      running_max = std::max(running_max, besov[i]);
      row.besov_time_norm = running_max;
    } else {
      if (i > 0) {
        acc += 0.5 * (row.t - rep.rows[i - 1].t) *
               (std::pow(besov[i], q) + std::pow(besov[i - 1], q));
      }
      row.besov_time_norm = std::pow(acc, 1.0 / q);
    }
  }

  const double z0 = rep.rows.front().z_l2_sq;
  double c = 0.0;
  if (z0 > 0.0) {
    for (const auto& row : rep.rows) {
      const double x = row.t + row.besov_time_norm;
      if (x > 0.0 && row.z_l2_sq > 0.0) c = std::max(c, std::log(row.z_l2_sq / z0) / x);
    }
  }
  rep.fitted_C = c;
  bool all = true;
  for (auto& row : rep.rows) {
    const double envelope = z0 * std::exp(c * (row.t + row.besov_time_norm));
    row.bound_ok = row.z_l2_sq <= envelope * (1.0 + 1e-12);
    all = all && row.bound_ok;
  }
  rep.bound_ok = all && c <= c_cap;
  return rep;
}

SpectralField perturbed_initial(const SpectralField& b1, double perturb, int shell,
                                std::uint64_t seed) {
  if (!(perturb >= 0.0)) throw ParameterError("perturb must be >= 0");
  SpectralField out = b1;
  if (perturb == 0.0) return out;
  auto d = random_shells_field(b1.grid(), shell, shell, seed);
  d *= perturb * l2_norm(b1) / l2_norm(d);
  out += d;
  return out;
}

EnsembleResult uniqueness_ensemble(const EnsembleSpec& spec) {
  check_region(spec.p, spec.q, spec.r);
  if (spec.seeds.empty()) throw ParameterError("ensemble needs at least one seed");
  EnsembleResult res;
  const auto b1 = initial_field(spec.base);
  res.reference = evolve_from(b1, spec.base);
  const auto besov = curl_besov_series(res.reference, spec.p, spec.r);

  const std::size_t count = spec.seeds.size();
  res.reports.resize(count);
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](std::size_t i) {
    try {
      const auto b2 = perturbed_initial(b1, spec.perturb, spec.shell, spec.seeds[i]);
      const auto traj2 = evolve_from(b2, spec.base);
      res.reports[i] = uniqueness_bound_check(res.reference, traj2, besov, spec.p, spec.q,
                                              spec.r, spec.c_cap);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned nthreads =
      std::max(1u, std::min<unsigned>(spec.threads, unsigned(count)));
  if (nthreads == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nthreads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += nthreads) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (const auto& rep : res.reports) res.fitted_C = std::max(res.fitted_C, rep.fitted_C);
  // Every member must satisfy the bound with the shared constant.
  bool ok = res.fitted_C <= spec.c_cap;
  for (const auto& rep : res.reports) {
    const double z0 = rep.rows.front().z_l2_sq;
    for (const auto& row : rep.rows) {
      ok = ok && row.z_l2_sq <=
                     z0 * std::exp(res.fitted_C * (row.t + row.besov_time_norm)) * (1.0 + 1e-12);
    }
  }
  res.bound_ok = ok;
  return res;
}

}  // namespace emhd::diag
