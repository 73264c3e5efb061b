#include "emhd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "emhd/littlewood_paley.hpp"
#include "emhd/norms.hpp"
#include "emhd/operators.hpp"
#include "emhd/snapshot.hpp"

namespace emhd {
namespace {

using Rhs = std::function<SpectralField(const SpectralField&)>;

// exp(-mu |k|^2 tau) per stored mode; empty when it is identically 1.
std::vector<double> heat_factors(const Grid& g, double mu, double tau) {
  if (mu == 0.0 || tau == 0.0) return {};
  std::vector<double> e(g.spectral_size());
  for_each_mode(g, [&](const Mode& m) { e[m.index] = std::exp(-mu * m.k2() * tau); });
  return e;
}

SpectralField heat(const SpectralField& f, const std::vector<double>& e) {
  if (e.empty()) return f;
  SpectralField out = f;
  for (int c = 0; c < out.ncomp(); ++c) {
    auto comp = out.component(c);
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] *= e[i];
  }
  return out;
}

SpectralField axpy(const SpectralField& x, double a, const SpectralField& y) {
  SpectralField out = y;
  out *= a;
  out += x;
  return out;
}

// Lawson (integrating-factor) RK4: exact for the diffusion part.
SpectralField lawson_rk4(const SpectralField& u, const Rhs& rhs, double mu, double dt) {
  const auto half = heat_factors(u.grid(), mu, dt / 2);
  const auto full = heat_factors(u.grid(), mu, dt);
  const auto k1 = rhs(u);
  const auto u_half = heat(u, half);
  const auto u_full = heat(u, full);
  const auto k2 = rhs(heat(axpy(u, dt / 2, k1), half));
  const auto k3 = rhs(axpy(u_half, dt / 2, k2));
  const auto k4 = rhs(axpy(u_full, dt, heat(k3, half)));
  SpectralField sum = heat(k1, full);
  sum += 2.0 * heat(k2 + k3, half);
  sum += k4;
  return axpy(u_full, dt / 6, sum);
}

// Crank-Nicolson diffusion with a Heun predictor-corrector for the rest.
SpectralField imex_cn(const SpectralField& u, const Rhs& rhs, double mu, double dt) {
  auto explicit_part = [&](const SpectralField& f) {
    return apply_symbol(f, [=](const Mode& m) { return 1.0 - 0.5 * mu * m.k2() * dt; });
  };
  auto implicit_solve = [&](const SpectralField& f) {
    return apply_symbol(f, [=](const Mode& m) { return 1.0 / (1.0 + 0.5 * mu * m.k2() * dt); });
  };
  const auto n0 = rhs(u);
  const auto base = explicit_part(u);
  const auto predictor = implicit_solve(axpy(base, dt, n0));
  const auto n1 = rhs(predictor);
  return implicit_solve(axpy(base, dt / 2, n0 + n1));
}

SpectralField advance(const SpectralField& u, const Rhs& rhs, const SolverConfig& cfg,
                      double dt) {
  return cfg.integrator == Integrator::if_rk4 ? lawson_rk4(u, rhs, cfg.mu, dt)
                                              : imex_cn(u, rhs, cfg.mu, dt);
}

void clean(SpectralField& f) {
  dealias(f);
  f = leray_project(f);
  for (int c = 0; c < f.ncomp(); ++c) f.at(c, 0) = 0.0;
}

bool finite(const SpectralField& f) {
  for (const auto& v : f.coefficients()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

std::size_t step_count(const SolverConfig& cfg) {
  if (cfg.t_end == 0.0) return 0;
  return std::size_t(std::ceil(cfg.t_end / cfg.dt - 1e-9));
}

double step_time(const SolverConfig& cfg, std::size_t k, std::size_t nsteps) {
  return k == nsteps ? cfg.t_end : double(k) * cfg.dt;
}

[[noreturn]] void unstable(const SolverConfig& cfg, const SpectralField& last,
                           std::shared_ptr<Trajectory> partial, double t) {
  std::ostringstream msg;
  msg << "non-finite field at t=" << t << "; whistler dt limit at the last stable state is "
      << whistler_dt_limit(last, cfg) << " (dt=" << cfg.dt
      << ", cfl_safety=" << cfg.cfl_safety << ")";
  throw InstabilityError(msg.str(), std::move(partial));
}

}  // namespace

SpectralField abc_field(const Grid& grid) {
  const int n = grid.n();
  const double h = grid.spacing();
  const std::size_t np = grid.physical_size();
  std::vector<double> v(3 * np);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const double x = i * h, y = j * h, z = l * h;
        const std::size_t idx = grid.physical_index(i, j, l);
        v[idx] = std::sin(z) + std::cos(y);
        v[np + idx] = std::sin(x) + std::cos(z);
        v[2 * np + idx] = std::sin(y) + std::cos(x);
      }
  return SpectralField::from_physical(grid, 3, v);
}

SpectralField single_mode_field(const Grid& grid, int k) {
  if (k < 1 || k >= grid.n() / 2) throw ParameterError("single mode wavenumber out of range");
  SpectralField f(grid, 3);
  f.at(1, grid.spectral_index(grid.index_of(k), 0, 0)) = 0.5;
  f.at(1, grid.spectral_index(grid.index_of(-k), 0, 0)) = 0.5;
  return f;
}

SpectralField random_shells_field(const Grid& grid, int q_lo, int q_hi,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> noise(3 * grid.physical_size());
  for (auto& v : noise) v = normal(rng);
  auto f = SpectralField::from_physical(grid, 3, noise);
  f = apply_symbol(f, [=](const Mode& m) {
    const double r = std::sqrt(m.k2());
    return lp::low_symbol(q_hi, r) - lp::low_symbol(q_lo - 1, r);
  });
  clean(f);
  const double e = 0.5 * inner(f, f);
  if (!(e > 0.0)) throw ParameterError("random_shells: no modes in the requested shells");
  f *= 1.0 / std::sqrt(e);
  return f;
}

SpectralField initial_field(const SolverConfig& cfg) {
  cfg.validate();
  const Grid grid(cfg.n);
  switch (cfg.init) {
    case InitKind::abc: return abc_field(grid);
    case InitKind::single_mode: return single_mode_field(grid, cfg.mode_k);
    case InitKind::random_shells:
      return random_shells_field(grid, cfg.q_lo, cfg.q_hi, cfg.seed);
    case InitKind::file: {
      auto snap = read_snapshot(cfg.init_path);
      if (snap.field.grid().n() != cfg.n || !snap.field.is_vector()) {
        throw ConfigError("init", "snapshot grid or shape does not match n");
      }
      snap.field.set_time(0.0);
      return snap.field;
    }
  }
  return abc_field(grid);
}

double whistler_dt_limit(const SpectralField& b, const SolverConfig& cfg) {
  const double binf = lp_norm(b, std::numeric_limits<double>::infinity());
  const double kmax = b.grid().dealias_cutoff();
  const double rate = cfg.d_i * binf * kmax * kmax;
  if (rate == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / rate;
}

void check_cfl(const SpectralField& b0, const SolverConfig& cfg) {
  const double limit = whistler_dt_limit(b0, cfg);
  if (cfg.dt > cfg.cfl_safety * limit) {
    std::ostringstream msg;
    msg << "dt=" << cfg.dt << " exceeds cfl_safety*whistler limit = " << cfg.cfl_safety
        << "*" << limit;
    throw ConfigError("cfl_safety", msg.str());
  }
}

SpectralField step(const SpectralField& b, const SolverConfig& cfg, double dt) {
  const double d_i = cfg.d_i;
  Rhs rhs = [d_i](const SpectralField& f) {
    if (d_i == 0.0) return SpectralField::zeros(f.grid(), 3);
    auto h = hall_nonlinearity(f).hall;
    h *= -d_i;
    return h;
  };
  auto out = advance(b, rhs, cfg, dt);
  clean(out);
  out.set_time(b.time() + dt);
  return out;
}

SpectralField step(const SpectralField& b, const SolverConfig& cfg) {
  return step(b, cfg, cfg.dt);
}

StepRecord measure(const SpectralField& b) {
  StepRecord r{};
  r.t = b.time();
  const double l2sq = inner(b, b);
  r.energy = 0.5 * l2sq;
  r.l2 = std::sqrt(l2sq);
  r.helicity = inner(biot_savart(b), b);
  const auto phys = b.to_physical();
  const std::size_t np = b.grid().physical_size();
  double m = 0.0;
  for (std::size_t i = 0; i < np; ++i) {
    double s = 0.0;
    for (int c = 0; c < 3; ++c) s += phys[c * np + i] * phys[c * np + i];
    m = std::max(m, s);
  }
  r.linf = std::sqrt(m);
  r.grad_l2 = std::sqrt(grad_l2_sq(b));
  return r;
}

Trajectory evolve_from(const SpectralField& b0, const SolverConfig& cfg) {
  cfg.validate();
  if (!b0.is_vector()) throw ShapeError("evolve needs a vector field");
  check_cfl(b0, cfg);
  auto traj = std::make_shared<Trajectory>();
  traj->config = cfg;
  SpectralField b = b0;
  b.set_time(0.0);
  traj->snapshots.push_back(b);
  traj->log.push_back(measure(b));
  const std::size_t nsteps = step_count(cfg);
  for (std::size_t k = 1; k <= nsteps; ++k) {
    const double t0 = step_time(cfg, k - 1, nsteps);
    const double t1 = step_time(cfg, k, nsteps);
    auto next = step(b, cfg, t1 - t0);
    if (!finite(next)) {
      if (traj->snapshots.back().time() != b.time()) traj->snapshots.push_back(b);
      unstable(cfg, b, traj, t1);
    }
    b = std::move(next);
    b.set_time(t1);
    traj->log.push_back(measure(b));
    if (k % cfg.snapshot_every == 0 || k == nsteps) traj->snapshots.push_back(b);
  }
  return std::move(*traj);
}

Trajectory evolve(const SolverConfig& cfg) { return evolve_from(initial_field(cfg), cfg); }

Trajectory evolve_potential_from(const SpectralField& a0, const SolverConfig& cfg,
                                 Gauge gauge) {
  cfg.validate();
  if (gauge == Gauge::none) throw ParameterError("potential evolution needs a gauge");
  if (!a0.is_vector()) throw ShapeError("evolve_potential needs a vector field");
  check_cfl(curl(a0), cfg);
  const double d_i = cfg.d_i;
  Rhs rhs = [d_i, gauge](const SpectralField& a) {
    if (d_i == 0.0) return SpectralField::zeros(a.grid(), 3);
    const auto b = curl(a);
    auto lorentz = cross(curl(b), b);
    if (gauge == Gauge::coulomb) lorentz = leray_project(lorentz);
    lorentz *= -d_i;
    return lorentz;
  };
  auto finish = [gauge](SpectralField& a) {
    dealias(a);
    if (gauge == Gauge::coulomb) a = leray_project(a);
    for (int c = 0; c < 3; ++c) a.at(c, 0) = 0.0;
  };

  auto traj = std::make_shared<Trajectory>();
  traj->config = cfg;
  traj->gauge = gauge;
  SpectralField a = a0;
  finish(a);
  a.set_time(0.0);
  auto record = [&](const SpectralField& pot) {
    auto b = curl(pot);
    b.set_time(pot.time());
    traj->snapshots.push_back(b);
    traj->potentials.push_back(pot);
  };
  record(a);
  {
    auto b = curl(a);
    b.set_time(0.0);
    traj->log.push_back(measure(b));
  }
  const std::size_t nsteps = step_count(cfg);
  for (std::size_t k = 1; k <= nsteps; ++k) {
    const double t0 = step_time(cfg, k - 1, nsteps);
    const double t1 = step_time(cfg, k, nsteps);
    auto next = advance(a, rhs, cfg, t1 - t0);
    finish(next);
    if (!finite(next)) {
      if (traj->potentials.back().time() != a.time()) record(a);
      unstable(cfg, curl(a), traj, t1);
    }
    a = std::move(next);
    a.set_time(t1);
    auto b = curl(a);
    b.set_time(t1);
    traj->log.push_back(measure(b));
    if (k % cfg.snapshot_every == 0 || k == nsteps) record(a);
  }
  return std::move(*traj);
}

Trajectory evolve_potential(const SolverConfig& cfg, Gauge gauge) {
  const auto b0 = initial_field(cfg);
  return evolve_potential_from(biot_savart(b0), cfg, gauge);
}

}  // namespace emhd
