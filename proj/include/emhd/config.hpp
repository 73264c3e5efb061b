#pragma once

#include <cstdint>
#include <string>

namespace emhd {

enum class Integrator { if_rk4, imex_cn };

enum class InitKind { abc, random_shells, single_mode, file };

// Run configuration. Text form is flat `key = value` lines; keys are
// n, mu, d_i, dt, t_end, integrator, init, seed, q_lo, q_hi,
// snapshot_every, cfl_safety, out_dir. `init` takes abc, random_shells,
// single_mode:K or file:PATH.
struct SolverConfig {
  int n = 32;
  double mu = 0.0;
  double d_i = 1.0;
  double dt = 1e-3;
  double t_end = 1.0;
  Integrator integrator = Integrator::if_rk4;
  InitKind init = InitKind::abc;
  int mode_k = 4;          // single_mode wavenumber along x1
  std::string init_path;   // file initializer
  std::uint64_t seed = 0;
  int q_lo = 1;
  int q_hi = 3;
  int snapshot_every = 1;
  double cfl_safety = 0.5;
  std::string out_dir = "out";

  // Checks everything that does not need the initial field; throws
  // ConfigError naming the key.
  void validate() const;
};

SolverConfig parse_config(const std::string& text);
SolverConfig load_config(const std::string& path);

// Canonical text with defaults applied, one key per line in fixed order.
std::string resolved_config_text(const SolverConfig& cfg);
// FNV-1a 64-bit digest of the resolved text, as 16 hex digits.
std::string config_digest(const SolverConfig& cfg);

std::string to_string(Integrator integrator);
std::string init_string(const SolverConfig& cfg);

}  // namespace emhd
