#include "emhd/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "emhd/errors.hpp"

namespace emhd {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a number, got '" + v + "'");
  }
}

long long to_integer(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long d = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected an integer, got '" + v + "'");
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void SolverConfig::validate() const {
  if (n < 8 || (n & (n - 1)) != 0) throw ConfigError("n", "must be a power of two >= 8");
  if (!(mu >= 0.0) || std::isinf(mu)) throw ConfigError("mu", "must be finite and >= 0");
  if (!(d_i >= 0.0) || std::isinf(d_i)) throw ConfigError("d_i", "must be finite and >= 0");
  if (!(dt > 0.0) || std::isinf(dt)) throw ConfigError("dt", "must be > 0");
  if (!(t_end >= 0.0) || std::isinf(t_end)) throw ConfigError("t_end", "must be >= 0");
  if (snapshot_every < 1) throw ConfigError("snapshot_every", "must be >= 1");
  if (!(cfl_safety > 0.0)) throw ConfigError("cfl_safety", "must be > 0");
  if (init == InitKind::random_shells && (q_lo < -1 || q_hi < q_lo)) {
    throw ConfigError("q_lo", "need -1 <= q_lo <= q_hi");
  }
  if (init == InitKind::single_mode && (mode_k < 1 || mode_k > n / 3)) {
    throw ConfigError("init", "single_mode wavenumber must lie in [1, n/3]");
  }
  if (init == InitKind::file && init_path.empty()) throw ConfigError("init", "file path missing");
}

SolverConfig parse_config(const std::string& text) {
  SolverConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "n") {
      cfg.n = int(to_integer(key, val));
    } else if (key == "mu") {
      cfg.mu = to_double(key, val);
    } else if (key == "d_i") {
      cfg.d_i = to_double(key, val);
    } else if (key == "dt") {
      cfg.dt = to_double(key, val);
    } else if (key == "t_end") {
      cfg.t_end = to_double(key, val);
    } else if (key == "integrator") {
      if (val == "ifrk4") cfg.integrator = Integrator::if_rk4;
      else if (val == "imex_cn") cfg.integrator = Integrator::imex_cn;
      else throw ConfigError(key, "expected ifrk4 or imex_cn, got '" + val + "'");
    } else if (key == "init") {
      if (val == "abc") {
        cfg.init = InitKind::abc;
      } else if (val == "random_shells") {
        cfg.init = InitKind::random_shells;
      } else if (val.rfind("single_mode", 0) == 0) {
        cfg.init = InitKind::single_mode;
        if (val.size() > 11) {
          if (val[11] != ':') throw ConfigError(key, "expected single_mode:K");
          cfg.mode_k = int(to_integer(key, val.substr(12)));
        }
      } else if (val.rfind("file:", 0) == 0) {
        cfg.init = InitKind::file;
        cfg.init_path = val.substr(5);
      } else {
        throw ConfigError(key, "unknown initializer '" + val + "'");
      }
    } else if (key == "seed") {
      const long long s = to_integer(key, val);
      if (s < 0) throw ConfigError(key, "must be >= 0");
      cfg.seed = std::uint64_t(s);
    } else if (key == "q_lo") {
      cfg.q_lo = int(to_integer(key, val));
    } else if (key == "q_hi") {
      cfg.q_hi = int(to_integer(key, val));
    } else if (key == "snapshot_every") {
      cfg.snapshot_every = int(to_integer(key, val));
    } else if (key == "cfl_safety") {
      cfg.cfl_safety = to_double(key, val);
    } else if (key == "out_dir") {
      cfg.out_dir = val;
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  cfg.validate();
  return cfg;
}

SolverConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config", "cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string to_string(Integrator integrator) {
  return integrator == Integrator::if_rk4 ? "ifrk4" : "imex_cn";
}

std::string init_string(const SolverConfig& cfg) {
  switch (cfg.init) {
    case InitKind::abc: return "abc";
    case InitKind::random_shells: return "random_shells";
    case InitKind::single_mode: return "single_mode:" + std::to_string(cfg.mode_k);
    case InitKind::file: return "file:" + cfg.init_path;
  }
  return "abc";
}

std::string resolved_config_text(const SolverConfig& cfg) {
  std::ostringstream o;
  o << "n = " << cfg.n << "\n"
    << "mu = " << fmt(cfg.mu) << "\n"
    << "d_i = " << fmt(cfg.d_i) << "\n"
    << "dt = " << fmt(cfg.dt) << "\n"
    << "t_end = " << fmt(cfg.t_end) << "\n"
    << "integrator = " << to_string(cfg.integrator) << "\n"
    << "init = " << init_string(cfg) << "\n"
    << "seed = " << cfg.seed << "\n"
    << "q_lo = " << cfg.q_lo << "\n"
    << "q_hi = " << cfg.q_hi << "\n"
    << "snapshot_every = " << cfg.snapshot_every << "\n"
    << "cfl_safety = " << fmt(cfg.cfl_safety) << "\n"
    << "out_dir = " << cfg.out_dir << "\n";
  return o.str();
}

std::string config_digest(const SolverConfig& cfg) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : resolved_config_text(cfg)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace emhd
