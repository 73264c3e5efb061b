// Acceptance run: one PASS/FAIL line per headline criterion, exit status 1
// if any fails. Configurations are fixed so the output is reproducible.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "emhd/budget.hpp"
#include "emhd/flux.hpp"
#include "emhd/helicity_identity.hpp"
#include "emhd/littlewood_paley.hpp"
#include "emhd/norms.hpp"
#include "emhd/operators.hpp"
#include "emhd/region.hpp"
#include "emhd/scaling.hpp"
#include "emhd/solver.hpp"
#include "emhd/uniqueness.hpp"
#include "flux_oracle.hpp"
#include "util.hpp"

using namespace emhd;
using namespace emhd::diag;

namespace {

const double kInf = std::numeric_limits<double>::infinity();
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (detail.tellp() > 0) detail << "; ";
    detail << what << (ok ? "" : " [violated]");
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fix(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

SolverConfig base_config(double mu, double t_end, double dt) {
  SolverConfig cfg;
  cfg.n = 32;
  cfg.mu = mu;
  cfg.d_i = 1.0;
  cfg.dt = dt;
  cfg.t_end = t_end;
  return cfg;
}

SolverConfig shells_config(double mu, double t_end, double dt, std::uint64_t seed) {
  auto cfg = base_config(mu, t_end, dt);
  cfg.init = InitKind::random_shells;
  cfg.q_lo = 1;
  cfg.q_hi = 3;
  cfg.seed = seed;
  return cfg;
}

void beltrami(Outcome& o) {
  auto cfg = base_config(0.1, 1.0, 1e-3);
  cfg.snapshot_every = 1000;
  const auto start = Clock::now();
  const auto traj = evolve(cfg);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const auto b0 = abc_field(Grid(32));
  const double err =
      l2_norm(traj.snapshots.back() - std::exp(-0.1) * b0) / l2_norm(b0);
  const double t = traj.snapshots.back().time();
  o.require(std::abs(t - 1.0) <= 1e-12, "t=" + fix(t, 6));
  o.require(err <= 1e-8, "rel error " + sci(err) + " <= 1e-8");
  o.require(secs <= 30.0, "runtime " + fix(secs, 1) + " s <= 30 s");
}

void vector_identities(Outcome& o) {
  Grid g(64);
  const int k = g.dealias_cutoff();
  double worst_lorentz = 0, worst_product = 0;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const auto b = random_shells_field(g, 0, 3, seed);
    const double scale = l2_norm(hall_nonlinearity(b).lorentz);
    worst_lorentz = std::max(worst_lorentz, identity_residual(b) / scale);

    const auto phi = testutil::random_field(g, 1, k, seed + 200);
    const auto a = testutil::random_field(g, 3, k, seed + 300);
    const auto c = testutil::random_field(g, 3, k, seed + 400);
    worst_product = std::max(worst_product, product_rule_residuals(phi, a, c).max());
  }
  o.require(worst_lorentz <= 1e-10, "Lorentz form " + sci(worst_lorentz));
  o.require(worst_product <= 1e-10, "product rules " + sci(worst_product));
}

double max_relative_drift(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x - v.front()) / std::abs(v.front()));
  return m;
}

// Shared ideal run: shells 1-3, dt = 5e-4, t = 0.25.
const Trajectory& ideal_run() {
  static const Trajectory traj = [] {
    auto cfg = shells_config(0.0, 0.25, 5e-4, 7);
    cfg.snapshot_every = 500;
    return evolve(cfg);
  }();
  return traj;
}

void energy_inequality(Outcome& o) {
  auto cfg = shells_config(0.02, 0.1, 1e-3, 3);
  cfg.snapshot_every = 100;
  const double resistive = std::abs(energy_inequality_residual(evolve(cfg)));
  std::vector<double> e;
  for (const auto& r : ideal_run().log) e.push_back(r.energy);
  const double drift = max_relative_drift(e);
  o.require(resistive <= 1e-6, "resistive residual " + sci(resistive));
  o.require(drift <= 1e-6, "ideal energy drift " + sci(drift));
}

void helicity_conservation(Outcome& o) {
  std::vector<double> h;
  for (const auto& r : ideal_run().log) h.push_back(r.helicity);
  const double drift = max_relative_drift(h);
  o.require(drift <= 1e-6, "helicity drift " + sci(drift) + " over t=0.25");
}

void littlewood_paley(Outcome& o) {
  Grid g(64);
  const int qm = lp::q_max(g);
  double partition = 0;
  for_each_mode(g, [&](const Mode& m) {
    const double r = std::sqrt(m.k2());
    double s = 0;
    for (int q = -1; q <= qm; ++q) s += lp::shell_symbol(q, r);
    partition = std::max(partition, std::abs(s - 1.0));
  });
  const auto f = testutil::random_field(g, 3, g.dealias_cutoff(), 8);
  SpectralField sum(g, 3);
  for (const auto& s : lp::decompose(f).shells) sum += s;
  const double recon = l2_norm(sum - f) / l2_norm(f);
  double law = 0;
  for (int j = 1; j <= 4; ++j) {
    for (double s : {1.0 / 3.0, 0.5, 1.0}) {
      const double want = std::pow(2.0, s * j);
      const double v = lp::besov_norm(testutil::cos_mode(g, 1 << j), {s, kInf, kInf});
      law = std::max(law, std::abs(v - want) / want);
    }
  }
  o.require(partition <= 1e-12, "partition " + sci(partition));
  o.require(recon <= 1e-12, "reconstruction " + sci(recon));
  o.require(law <= 1e-10, "2^(sj) law " + sci(law));
}

void bernstein(Outcome& o) {
  Grid g(64);
  std::vector<double> worst;
  for (int q = 2; q <= 5; ++q) {
    double m = 0;
    for (unsigned d = 0; d < 50; ++d) {
      const auto noise = testutil::random_field(g, 1, g.n() / 2, 1000u * unsigned(q) + d);
      m = std::max(m, lp::bernstein_margin(lp::project_shell(noise, q), 2, kInf));
    }
    worst.push_back(m);
  }
  const double c = *std::max_element(worst.begin(), worst.end());
  bool non_increasing = true;
  for (std::size_t i = 1; i < worst.size(); ++i) non_increasing &= worst[i] <= worst[i - 1];
  std::string per_shell;
  for (double w : worst) per_shell += (per_shell.empty() ? "" : ",") + fix(w, 5);
  o.require(c <= 3.0, "max ratio " + fix(c, 5) + " <= 3 (q=2..5: " + per_shell + ")");
  o.require(non_increasing, "non-increasing in q");
}

void flux(Outcome& o) {
  const auto abc = abc_field(Grid(32));
  const double abc_scale = std::pow(l2_norm(abc), 3);
  double abc_worst = 0;
  for (const auto& r : flux_spectrum(abc, 5).rows) {
    abc_worst = std::max({abc_worst, std::abs(r.helicity_flux), std::abs(r.energy_flux)});
  }
  o.require(abc_worst <= 1e-12 * abc_scale, "ABC " + sci(abc_worst / abc_scale));

  testutil::TrigField two{{{{4, 0, 0}, {0, 1, 0}, 0.0}, {{0, 2, 0}, {0.5, 0, 0}, 0.0}}};
  const auto b = two.sample(Grid(32));
  const int Q = 3;
  const auto [hq, pq] = testutil::flux_oracle(two, Q, 128);
  const double hq_num = helicity_flux(b, Q);
  const double pq_num = energy_flux(b, Q);
  // Relative to the larger of the oracle value and ||B||_2^3: this field has no triad.
  const double b3 = std::pow(l2_norm(b), 3);
  const double h_err = std::abs(hq_num - hq) / std::max(std::abs(hq), b3);
  const double p_err = std::abs(pq_num - pq) / std::max(std::abs(pq), b3);
  o.require(h_err <= 1e-8, "two-mode H_3 " + sci(hq_num) + " vs oracle " + sci(hq) + ", err " +
                               sci(h_err));
  o.require(p_err <= 1e-8, "Pi_3 err " + sci(p_err));

  testutil::TrigField triad{{{{3, 1, 0}, {0, 0, 1}, 0.0},
                             {{0, 2, 0}, {0.5, 0, 0.5}, 0.7},
                             {{3, 3, 0}, {0.4, -0.4, 0.4}, -1.1},
                             {{1, 1, 1}, {0.6, -0.6, 0}, 0.3}}};
  const auto bt = triad.sample(Grid(32));
  const auto [h1, p1] = testutil::flux_oracle(triad, 1, 128);
  const double h1_err = std::abs(helicity_flux(bt, 1) - h1) / std::abs(h1);
  const double p1_err = std::abs(energy_flux(bt, 1) - p1) / std::abs(p1);
  o.require(std::max(h1_err, p1_err) <= 1e-8, "triad H_1 " + fix(h1, 6) + ", Pi_1 " + fix(p1, 6) +
                                                  ", rel err " + sci(std::max(h1_err, p1_err)));

  const int qa = 2;
  const auto tail = flux_spectrum(random_shells_field(Grid(64), 0, qa, 17), qa + 5);
  std::vector<double> qs, logs;
  for (const auto& r : tail.rows) {
    if (r.Q > qa && r.Q <= qa + 4) {
      qs.push_back(r.Q);
      logs.push_back(std::log2(std::pow(r.kernel_bound, 2.0 / 3.0)));
    }
  }
  const double sl = testutil::slope(qs, logs);
  o.require(std::abs(sl + 4.0 / 3.0) <= 0.15, "tail slope " + fix(sl));
}

void helicity_identity(Outcome& o) {
  auto cfg = base_config(0.1, 0.2, 1e-3);
  const auto beltrami = evolve(cfg);
  const double r1 = generalized_helicity_residual(beltrami, constant_test_function(Grid(32)));
  o.require(r1 <= 1e-7, "phi=1 Beltrami " + sci(r1));

  const double T = 0.1;
  const auto b0 = random_shells_field(Grid(16), 0, 1, 3);
  std::vector<double> res;
  for (int lev = 0; lev < 2; ++lev) {
    auto c = base_config(0.05, T, 2e-3 / (1 << lev));
    c.n = 32 << lev;
    const Grid g(c.n);
    const auto traj = evolve_potential_from(biot_savart(resample(b0, g)), c, Gauge::coulomb);
    res.push_back(generalized_helicity_residual(traj, envelope_test_function(g, T)));
  }
  const double ratio = res[0] / res[1];
  o.require(ratio >= 4.0, "generic " + sci(res[0]) + " -> " + sci(res[1]) + ", ratio " +
                              fix(ratio, 6) + " >= 4");
}

void uniqueness(Outcome& o) {
  const auto b0 = abc_field(Grid(32));
  const auto b1 = perturbed_initial(b0, 1e-3, 3, 5);
  std::vector<double> res;
  for (double dt : {2e-3, 1e-3}) {
    const auto cfg = base_config(0.1, 0.1, dt);
    res.push_back(max_abs_residual(cross_energy_residual(evolve_from(b0, cfg), evolve_from(b1, cfg))));
  }
  o.require(res[1] <= 1e-5, "cross-energy " + sci(res[1]));
  o.require(res[1] <= 0.5 * res[0], "halving " + sci(res[0]) + " -> " + sci(res[1]));

  std::vector<double> c;
  bool bounds = true;
  for (double dt : {1e-3, 5e-4}) {
    EnsembleSpec spec;
    spec.base = shells_config(0.01, 0.1, dt, 11);
    spec.base.snapshot_every = int(std::lround(5e-3 / dt));
    for (std::uint64_t s = 1; s <= 10; ++s) spec.seeds.push_back(s);
    spec.threads = std::max(1u, std::thread::hardware_concurrency());
    const auto r = uniqueness_ensemble(spec);
    bounds &= r.bound_ok;
    c.push_back(r.fitted_C);
  }
  const double stable = std::max(c[0], c[1]) / std::min(c[0], c[1]);
  o.require(bounds, "Gronwall bound over 10 seeds");
  o.require(std::isfinite(stable) && stable <= 2.0,
            "C " + sci(c[0]) + " -> " + sci(c[1]) + " under dt/2");
}

void scaling(Outcome& o) {
  auto cfg = base_config(0.01, 0.02, 1e-3);
  cfg.n = 64;
  const auto b0 = random_shells_field(Grid(64), -1, 2, 4);
  const double r = scaling_residual(b0, cfg, 2);
  o.require(r <= 1e-6, "lambda=2 N=64 " + sci(r));
}

void region(Outcome& o) {
  struct Case {
    double p, q, r;
    Region want;
  };
  const Case cases[] = {{3, 2, 1, Region::uniqueness_region},
                        {kInf, 1, 1, Region::excluded_boundary},
                        {1.5, 4, 1, Region::excluded_boundary},
                        {3, kInf, 1, Region::region_II_regular}};
  for (const auto& c : cases) {
    const auto got = region_classify(c.p, c.q, c.r).classification;
    o.require(got == c.want, "(" + fix(c.p, 1) + "," + fix(c.q, 1) + "," + fix(c.r, 1) + ") " +
                                 to_string(got));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"beltrami_exact_solution", beltrami},
      {"vector_identities", vector_identities},
      {"energy_inequality", energy_inequality},
      {"ideal_helicity_conservation", helicity_conservation},
      {"littlewood_paley", littlewood_paley},
      {"bernstein", bernstein},
      {"flux_spectrum", flux},
      {"generalized_helicity_identity", helicity_identity},
      {"weak_strong_uniqueness", uniqueness},
      {"scaling_symmetry", scaling},
      {"region_classifier", region},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << (o.detail.tellp() > 0 ? "; " : "") << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
