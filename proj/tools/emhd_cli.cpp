#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include "emhd/budget.hpp"
#include "emhd/config.hpp"
#include "emhd/csv.hpp"
#include "emhd/errors.hpp"
#include "emhd/flux.hpp"
#include "emhd/helicity_identity.hpp"
#include "emhd/littlewood_paley.hpp"
#include "emhd/norms.hpp"
#include "emhd/region.hpp"
#include "emhd/snapshot.hpp"
#include "emhd/solver.hpp"
#include "emhd/uniqueness.hpp"

namespace fs = std::filesystem;
using namespace emhd;

#ifndef EMHD_VERSION
#define EMHD_VERSION "0.0.0"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnstable = 2;

using Clock = std::chrono::steady_clock;

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf") return std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ParameterError("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw ParameterError("not a number: '" + s + "'");
  return v;
}

lp::BesovSpec parse_besov(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw ParameterError("--besov expects s:p:q, got '" + s + "'");
  lp::BesovSpec spec{parse_exponent(parts[0]), parse_exponent(parts[1]),
                     parse_exponent(parts[2])};
  if (!(spec.p >= 1.0) || !(spec.q >= 1.0)) {
    throw ParameterError("--besov: p and q must lie in [1, inf]");
  }
  return spec;
}

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EMHD_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, unsigned(cap));
    } catch (const std::exception&) {
      throw ConfigError("EMHD_THREADS", "must be a positive integer");
    }
  }
  return std::max(1u, std::min<unsigned>(n, unsigned(std::max<std::size_t>(jobs, 1))));
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

class Manifest {
 public:
  Manifest(std::string command, fs::path dir) : command_(std::move(command)), dir_(std::move(dir)) {}

  void set_config(const SolverConfig& cfg) {
    hash_ = config_digest(cfg);
    config_text_ = resolved_config_text(cfg);
  }
  void set_extra(const std::string& key, nlohmann::json value) { extra_[key] = std::move(value); }
  void add(const fs::path& artifact) { artifacts_.push_back(artifact.filename().string()); }

  void write() const {
    nlohmann::json j;
    j["command"] = command_;
    j["config_hash"] = hash_;
    if (!config_text_.empty()) j["config"] = config_text_;
    j["artifacts"] = artifacts_;
    j["wall_time_s"] = std::chrono::duration<double>(Clock::now() - start_).count();
    j["version"] = EMHD_VERSION;
    for (const auto& [k, v] : extra_.items()) j[k] = v;
    auto out = open_out(dir_ / "manifest.json");
    out << j.dump(2) << "\n";
  }

 private:
  std::string command_;
  fs::path dir_;
  std::string hash_;
  std::string config_text_;
  std::vector<std::string> artifacts_;
  nlohmann::json extra_ = nlohmann::json::object();
  Clock::time_point start_ = Clock::now();
};

std::string snapshot_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%06zu.bin", i);
  return buf;
}

void write_trajectory(const Trajectory& traj, const fs::path& dir, Manifest& manifest) {
  const auto& cfg = traj.config;
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    const auto path = dir / snapshot_name(i);
    write_snapshot(path.string(), traj.snapshots[i], cfg.mu, cfg.d_i);
    manifest.add(path);
  }
  {
    const auto path = dir / "log.csv";
    auto out = open_out(path);
    CsvWriter csv(out, {"t", "E", "H", "l2", "linf", "grad_l2"});
    for (const auto& r : traj.log) csv.row({r.t, r.energy, r.helicity, r.l2, r.linf, r.grad_l2});
    manifest.add(path);
  }
  {
    const auto path = dir / "budget.csv";
    auto out = open_out(path);
    const auto records = diag::budget(traj);
    const auto residual = diag::energy_inequality_series(records);
    CsvWriter csv(out, {"t", "E", "H", "grad_l2", "cum_dissipation", "energy_ineq_residual"});
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      csv.row({r.t, r.energy, r.helicity, std::sqrt(r.grad_energy), r.cumulative_dissipation,
               residual[i]});
    }
    manifest.add(path);
  }
}

fs::path prepare_dir(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

int cmd_run(const std::string& config_path) {
  const auto cfg = load_config(config_path);
  const auto dir = prepare_dir(cfg.out_dir);
  Manifest manifest("run", dir);
  manifest.set_config(cfg);
  try {
    const auto traj = evolve(cfg);
    write_trajectory(traj, dir, manifest);
    manifest.write();
  } catch (const InstabilityError& e) {
    if (e.partial) write_trajectory(*e.partial, dir, manifest);
    manifest.set_extra("status", "unstable");
    manifest.write();
    throw;
  }
  std::cout << "wrote " << dir.string() << "\n";
  return kExitOk;
}

int cmd_diagnose(const std::string& snapshot_path, const std::vector<std::string>& besov) {
  std::vector<lp::BesovSpec> specs;
  for (const auto& s : besov) specs.push_back(parse_besov(s));
  const auto snap = read_snapshot(snapshot_path);
  CsvWriter csv(std::cout, {"q", "lambda_q", "shell_l2", "shell_l3", "b_q", "beta_q"});
  for (const auto& r : lp::shell_spectrum(snap.field)) {
    csv.row({double(r.q), r.lambda_q, r.shell_l2, r.shell_l3, r.b_q, r.beta_q});
  }
  if (!specs.empty()) {
    std::cout << "\n";
    CsvWriter norms(std::cout, {"s", "p", "q", "besov_norm"});
    for (const auto& spec : specs) {
      norms.row({spec.s, spec.p, spec.q, lp::besov_norm(snap.field, spec)});
    }
  }
  return kExitOk;
}

int cmd_flux(const std::string& snapshot_path, std::optional<int> qmax, const std::string& out_dir) {
  const auto snap = read_snapshot(snapshot_path);
  if (!snap.field.is_vector()) throw ShapeError("flux needs a vector-field snapshot");
  const int Q = qmax.value_or(lp::q_max(snap.field.grid()) + 3);
  const auto dir = prepare_dir(out_dir);
  Manifest manifest("flux", dir);
  manifest.set_extra("snapshot", snapshot_path);
  const auto spec = diag::flux_spectrum(snap.field, Q);
  const auto path = dir / "flux.csv";
  {
    auto out = open_out(path);
    CsvWriter csv(out, {"Q", "H_Q", "Pi_Q", "kernel_bound", "beta_bound"});
    for (const auto& r : spec.rows) {
      csv.row({double(r.Q), r.helicity_flux, r.energy_flux, r.kernel_bound, r.beta_bound});
    }
  }
  manifest.add(path);
  manifest.set_extra("fit_constant", spec.fit_constant());
  manifest.write();
  std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

Gauge parse_gauge(const std::string& g) {
  if (g == "coulomb") return Gauge::coulomb;
  if (g == "hall") return Gauge::hall;
  if (g == "none") return Gauge::none;
  throw ParameterError("--gauge must be coulomb, hall or none");
}

int cmd_identity(const std::string& config_path, const std::string& testfn,
                 const std::string& gauge_name) {
  const auto cfg = load_config(config_path);
  const Gauge gauge = parse_gauge(gauge_name);
  const Grid grid(cfg.n);
  if (testfn != "one" && testfn != "envelope") {
    throw ParameterError("--testfn must be one or envelope");
  }
  const auto phi = testfn == "one"
                       ? diag::constant_test_function(grid)
                       : diag::envelope_test_function(grid, cfg.t_end > 0 ? cfg.t_end : 1.0);
  const auto dir = prepare_dir(cfg.out_dir);
  Manifest manifest("identity", dir);
  manifest.set_config(cfg);
  manifest.set_extra("testfn", testfn);
  manifest.set_extra("gauge", gauge_name);

  const auto traj = gauge == Gauge::none ? evolve(cfg) : evolve_potential(cfg, gauge);
  const auto rep = diag::generalized_helicity_report(traj, phi);
  const auto path = dir / "identity.csv";
  {
    auto out = open_out(path);
    CsvWriter csv(out, {"t", "lhs", "rhs", "residual"});
    for (const auto& p : rep.points) csv.row({p.t, p.lhs, p.rhs, p.residual});
  }
  manifest.add(path);
  manifest.set_extra("max_residual", rep.max_residual);
  manifest.write();
  std::cout << "max_residual," << CsvWriter::format(rep.max_residual) << "\n";
  return kExitOk;
}

int cmd_uniqueness(const std::string& config_path, double perturb, int seeds, int shell,
                   const std::string& p, const std::string& q, const std::string& r,
                   const std::string& c_cap) {
  const auto cfg = load_config(config_path);
  if (seeds < 1) throw ParameterError("--seeds must be >= 1");
  diag::EnsembleSpec spec;
  spec.base = cfg;
  spec.perturb = perturb;
  spec.shell = shell;
  for (int i = 0; i < seeds; ++i) spec.seeds.push_back(cfg.seed + 1 + std::uint64_t(i));
  spec.p = parse_exponent(p);
  spec.q = parse_exponent(q);
  spec.r = parse_exponent(r);
  spec.c_cap = parse_exponent(c_cap);
  spec.threads = worker_count(spec.seeds.size());

  const auto dir = prepare_dir(cfg.out_dir);
  Manifest manifest("uniqueness", dir);
  manifest.set_config(cfg);
  manifest.set_extra("perturb", perturb);
  manifest.set_extra("shell", shell);
  manifest.set_extra("seeds", spec.seeds);

  const auto res = diag::uniqueness_ensemble(spec);
  for (std::size_t i = 0; i < res.reports.size(); ++i) {
    const auto& rep = res.reports[i];
    const auto path = dir / ("uniqueness_seed" + std::to_string(spec.seeds[i]) + ".csv");
    auto out = open_out(path);
    CsvWriter csv(out, {"t", "Z_l2_sq", "besov_time_norm", "fitted_C", "bound_ok"});
    for (const auto& row : rep.rows) {
      csv.raw_row({CsvWriter::format(row.t), CsvWriter::format(row.z_l2_sq),
                   CsvWriter::format(row.besov_time_norm), CsvWriter::format(rep.fitted_C),
                   row.bound_ok ? "true" : "false"});
    }
    manifest.add(path);
  }
  manifest.set_extra("fitted_C", res.fitted_C);
  manifest.set_extra("bound_ok", res.bound_ok);
  manifest.write();
  std::cout << "fitted_C," << CsvWriter::format(res.fitted_C) << "\n"
            << "bound_ok," << (res.bound_ok ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_region(const std::string& p, const std::string& q, const std::string& r) {
  const auto c = diag::region_classify(parse_exponent(p), parse_exponent(q), parse_exponent(r));
  std::cout << diag::to_string(c.classification) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Electron-MHD spectral solver and Littlewood-Paley diagnostics"};
  app.set_version_flag("--version", EMHD_VERSION);
  app.require_subcommand(1);

  std::string config_path, snapshot_path, out_dir = ".", testfn = "envelope", gauge = "coulomb";
  std::vector<std::string> besov;
  std::optional<int> qmax;
  double perturb = 1e-3;
  int seeds = 1, shell = 2;
  std::string p = "3", q = "2", r = "1", c_cap = "inf";

  auto* run = app.add_subcommand("run", "evolve a configuration and write snapshots, log.csv, budget.csv");
  run->add_option("config", config_path, "config file")->required();

  auto* diagnose = app.add_subcommand("diagnose", "shell spectrum and Besov norms of a snapshot");
  diagnose->add_option("snapshot", snapshot_path)->required();
  diagnose->add_option("--besov", besov, "s:p:q, repeatable; inf allowed");

  auto* flux = app.add_subcommand("flux", "truncated helicity and energy flux spectrum");
  flux->add_option("snapshot", snapshot_path)->required();
  flux->add_option("--qmax", qmax, "largest cutoff shell (default q_max + 3)");
  flux->add_option("--out", out_dir, "output directory");

  auto* identity = app.add_subcommand("identity", "generalized helicity identity residual");
  identity->add_option("config", config_path)->required();
  identity->add_option("--testfn", testfn, "one | envelope");
  identity->add_option("--gauge", gauge, "coulomb | hall | none (potential from B)");

  auto* uniqueness = app.add_subcommand("uniqueness", "Gronwall bound over a perturbation ensemble");
  uniqueness->add_option("config", config_path)->required();
  uniqueness->add_option("--perturb", perturb, "relative L2 size of the perturbation");
  uniqueness->add_option("--seeds", seeds, "ensemble size");
  uniqueness->add_option("--shell", shell, "LP shell of the perturbation");
  uniqueness->add_option("--p", p);
  uniqueness->add_option("--q", q);
  uniqueness->add_option("--r", r);
  uniqueness->add_option("--c-cap", c_cap, "largest acceptable fitted C");

  auto* region = app.add_subcommand("region", "classify an exponent triple");
  region->add_option("--p", p)->required();
  region->add_option("--q", q)->required();
  region->add_option("--r", r)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return cmd_run(config_path);
    if (*diagnose) return cmd_diagnose(snapshot_path, besov);
    if (*flux) return cmd_flux(snapshot_path, qmax, out_dir);
    if (*identity) return cmd_identity(config_path, testfn, gauge);
    if (*uniqueness) return cmd_uniqueness(config_path, perturb, seeds, shell, p, q, r, c_cap);
    if (*region) return cmd_region(p, q, r);
  } catch (const InstabilityError& e) {
    std::cerr << "error: instability: " << e.what() << "\n";
    return kExitUnstable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
