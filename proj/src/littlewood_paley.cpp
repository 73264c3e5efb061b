#include "emhd/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "emhd/errors.hpp"
#include "emhd/norms.hpp"
#include "emhd/operators.hpp"

namespace emhd::lp {
namespace {

double kmag(const Mode& m) { return std::sqrt(m.k2()); }

double shell_weight(double s, int q) { return std::pow(2.0, s * q); }

}  // namespace

double chi(double r) {
  r = std::abs(r);
  if (r <= 0.75) return 1.0;
  if (r >= 1.0) return 0.0;
  const double t = (r - 0.75) * 4.0;
  return 1.0 - t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double shell_symbol(int q, double r) {
  if (q < -1) throw ParameterError("shell index must be >= -1");
  if (q == -1) return chi(r);
  return chi(r / std::ldexp(1.0, q + 1)) - chi(r / std::ldexp(1.0, q));
}

double low_symbol(int Q, double r) {
  if (Q < -1) return 0.0;
  return chi(r / std::ldexp(1.0, Q + 1));
}

int q_max(const Grid& grid) {
  return int(std::ceil(std::log2(double(grid.dealias_cutoff())))) + 1;
}

SpectralField project_shell(const SpectralField& f, int j) {
  if (j < -1) throw ParameterError("shell index must be >= -1");
  if (j > q_max(f.grid())) return SpectralField::zeros(f.grid(), f.ncomp());
  auto out = apply_symbol(f, [j](const Mode& m) { return shell_symbol(j, kmag(m)); });
  out.set_time(f.time());
  return out;
}

SpectralField low_pass(const SpectralField& f, int Q) {
  auto out = apply_symbol(f, [Q](const Mode& m) { return low_symbol(Q, kmag(m)); });
  out.set_time(f.time());
  return out;
}

DyadicDecomposition decompose(const SpectralField& f) {
  DyadicDecomposition d;
  const int qm = q_max(f.grid());
  for (int q = -1; q <= qm; ++q) d.shells.push_back(project_shell(f, q));
  return d;
}

double besov_norm(const DyadicDecomposition& d, const BesovSpec& spec) {
  if (!(spec.p >= 1.0) || !(spec.q >= 1.0)) {
    throw ParameterError("Besov exponents p, q must lie in [1, inf]");
  }
  double acc = 0.0;
  for (int q = -1; q <= d.q_max(); ++q) {
    const double term = shell_weight(spec.s, q) * lp_norm(d.shell(q), spec.p);
    if (std::isinf(spec.q)) {
      acc = std::max(acc, term);
    } else {
      acc += std::pow(term, spec.q);
    }
  }
  return std::isinf(spec.q) ? acc : std::pow(acc, 1.0 / spec.q);
}

double besov_norm(const SpectralField& f, const BesovSpec& spec) {
  return besov_norm(decompose(f), spec);
}

double time_norm(std::span<const double> times, std::span<const double> values,
                 double q_time) {
  if (times.size() != values.size()) throw ParameterError("time/value length mismatch");
  if (times.size() < 2) throw ParameterError("time norm needs at least 2 snapshots");
  if (!(q_time >= 1.0)) throw ParameterError("time exponent must be >= 1");
  if (std::isinf(q_time)) return *std::max_element(values.begin(), values.end());
  double acc = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    acc += 0.5 * (times[i] - times[i - 1]) *
           (std::pow(values[i], q_time) + std::pow(values[i - 1], q_time));
  }
  return std::pow(acc, 1.0 / q_time);
}

double besov_time_norm(std::span<const SpectralField> snapshots, double q_time,
                       const BesovSpec& spec) {
  if (snapshots.size() < 2) throw ParameterError("time norm needs at least 2 snapshots");
  std::vector<double> times, values;
  for (const auto& s : snapshots) {
    times.push_back(s.time());
    values.push_back(besov_norm(s, spec));
  }
  return time_norm(times, values, q_time);
}

LowHighSplit decompose_low_high(const SpectralField& f, int Q, double p_prime) {
  if (Q < -1) throw ParameterError("cutoff shell must be >= -1");
  auto low = low_pass(f, Q);
  auto high = f - low;
  // Pointwise Frobenius norm of the gradient on the oversampled grid.
  const auto parts = gradient_components(low);
  const int m = 2 * f.grid().n();
  std::vector<double> frob(std::size_t(m) * m * m, 0.0);
  for (const auto& p : parts) {
    const auto v = p.component_physical(0, 2);
    for (std::size_t i = 0; i < frob.size(); ++i) frob[i] += v[i] * v[i];
  }
  double grad_inf = 0.0;
  for (double v : frob) grad_inf = std::max(grad_inf, std::sqrt(v));
  const double hn = lp_norm(high, p_prime);
  return {std::move(low), std::move(high), grad_inf, hn};
}

int auto_cutoff(const SpectralField& f, double p_prime, double q_prime) {
  int best = -1;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int Q = -1; Q <= q_max(f.grid()); ++Q) {
    const auto split = decompose_low_high(f, Q, p_prime);
    const double cost = split.grad_low_inf + std::pow(split.high_norm, q_prime);
    if (cost < best_cost) {
      best_cost = cost;
      best = Q;
    }
  }
  return best;
}

ShellAmplitudes shell_amplitudes(const SpectralField& b) {
  ShellAmplitudes a;
  const auto d = decompose(b);
  for (int q = -1; q <= d.q_max(); ++q) {
    const double l3 = lp_norm(d.shell(q), 3.0);
    a.b.push_back(std::cbrt(lambda(q)) * l3);
    a.beta.push_back(std::cbrt(lambda(q) * lambda(q)) * l3);
  }
  return a;
}

std::vector<ShellSpectrumRow> shell_spectrum(const SpectralField& b) {
  std::vector<ShellSpectrumRow> rows;
  const auto d = decompose(b);
  for (int q = -1; q <= d.q_max(); ++q) {
    const double l2 = l2_norm(d.shell(q));
    const double l3 = lp_norm(d.shell(q), 3.0);
    rows.push_back({q, lambda(q), l2, l3, std::cbrt(lambda(q)) * l3,
                    std::cbrt(lambda(q) * lambda(q)) * l3});
  }
  return rows;
}

double kernel_value(Kernel kernel, int n) {
  const double lam = std::ldexp(1.0, n);
  if (kernel == Kernel::K) return n <= 0 ? std::pow(lam, 2.0 / 3.0) : std::pow(lam, -4.0 / 3.0);
  return n <= 0 ? std::pow(lam, 4.0 / 3.0) : std::pow(lam, -2.0 / 3.0);
}

double kernel_convolve(std::span<const double> amps_sq, Kernel kernel, int Q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < amps_sq.size(); ++i) {
    const int q = int(i) - 1;
    if (!(amps_sq[i] >= 0.0) || std::isinf(amps_sq[i])) {
      throw ParameterError("kernel_convolve: amplitudes must be finite and nonnegative");
    }
    acc += kernel_value(kernel, Q - q) * amps_sq[i];
  }
  return acc;
}

int containing_shell(const SpectralField& f) {
  double kmin = std::numeric_limits<double>::infinity();
  double kmax = 0.0;
  const double tol = 1e-14 * std::max(1.0, f.max_abs_coeff());
  for_each_mode(f.grid(), [&](const Mode& m) {
    for (int c = 0; c < f.ncomp(); ++c) {
      if (std::abs(f.at(c, m.index)) > tol) {
        kmin = std::min(kmin, kmag(m));
        kmax = std::max(kmax, kmag(m));
      }
    }
  });
  if (std::isinf(kmin)) throw PreconditionError("field has empty spectrum");
  int best = -2;
  double best_mass = -1.0;
  for (int q = -1; q <= q_max(f.grid()); ++q) {
    const bool inside = q == -1 ? kmax <= 1.0
                                : kmin >= 0.75 * lambda(q) && kmax <= 2.0 * lambda(q);
    if (!inside) continue;
    const double mass = l2_norm(project_shell(f, q));
    if (mass > best_mass) {
      best_mass = mass;
      best = q;
    }
  }
  if (best < -1) throw PreconditionError("field is not supported in a single dyadic shell");
  return best;
}

double bernstein_margin(const SpectralField& f_shell, double s, double r) {
  if (!(s >= 1.0) || !(r >= s)) throw ParameterError("Bernstein needs 1 <= s <= r");
  const int q = containing_shell(f_shell);
  if (r == s) return 1.0;
  const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
  const double gain = std::pow(lambda(q), 3.0 * (1.0 / s - inv_r));
  return lp_norm(f_shell, r) / (gain * lp_norm(f_shell, s));
}

double besov_tail_decay(const SpectralField& f, double s, double p, int tail) {
  const auto d = decompose(f);
  std::vector<double> qs, ys;
  const double floor = 1e-13 * std::max(1e-300, lp_norm(f, p));
  for (int q = -1; q <= d.q_max(); ++q) {
    const double v = lp_norm(d.shell(q), p);
    if (v > floor) {
      qs.push_back(q);
      ys.push_back(std::log2(shell_weight(s, q) * v));
    }
  }
  if (int(qs.size()) < 2) return -std::numeric_limits<double>::infinity();
  const std::size_t start = qs.size() > std::size_t(tail) ? qs.size() - tail : 0;
  double mx = 0, my = 0;
  const double cnt = double(qs.size() - start);
  for (std::size_t i = start; i < qs.size(); ++i) { mx += qs[i]; my += ys[i]; }
  mx /= cnt;
  my /= cnt;
  double sxy = 0, sxx = 0;
  for (std::size_t i = start; i < qs.size(); ++i) {
    sxy += (qs[i] - mx) * (ys[i] - my);
    sxx += (qs[i] - mx) * (qs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace emhd::lp
