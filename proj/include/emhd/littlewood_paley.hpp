#pragma once

#include <span>
#include <vector>

#include "emhd/spectral_field.hpp"

namespace emhd::lp {

// Radial low-pass symbol: 1 for |xi| <= 3/4, 0 for |xi| >= 1, and the C^2
// quintic ramp 1 - S((|xi| - 3/4) * 4), S(t) = 6t^5 - 15t^4 + 10t^3, between.
double chi(double r);
// phi_q(xi): chi(xi) for q = -1, chi(xi / 2^(q+1)) - chi(xi / 2^q) for q >= 0.
double shell_symbol(int q, double r);
// sum_{q=-1}^{Q} phi_q(xi) = chi(xi / 2^(Q+1)).
double low_symbol(int Q, double r);

// Highest shell that meets the dealiased spectrum: ceil(log2(cutoff)) + 1.
int q_max(const Grid& grid);
inline double lambda(int q) { return q >= 0 ? double(1L << q) : 0.5; }

SpectralField project_shell(const SpectralField& f, int j);
SpectralField low_pass(const SpectralField& f, int Q);

struct DyadicDecomposition {
  // shells[q + 1] = Delta_q F for q = -1 .. q_max
  std::vector<SpectralField> shells;
  const SpectralField& shell(int q) const { return shells.at(q + 1); }
  int q_max() const { return int(shells.size()) - 2; }
};
DyadicDecomposition decompose(const SpectralField& f);

struct BesovSpec {
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;  // summation exponent; infinity selects the sup norm
};

double besov_norm(const SpectralField& f, const BesovSpec& spec);
double besov_norm(const DyadicDecomposition& d, const BesovSpec& spec);

// (int ||F(t)||^q_time dt)^(1/q_time) by the trapezoid rule over the
// sample times; q_time = inf returns the max.
double time_norm(std::span<const double> times, std::span<const double> values,
                 double q_time);
double besov_time_norm(std::span<const SpectralField> snapshots, double q_time,
                       const BesovSpec& spec);

struct LowHighSplit {
  SpectralField low;
  SpectralField high;
  double grad_low_inf = 0.0;  // ||grad low||_inf, Frobenius norm pointwise
  double high_norm = 0.0;     // ||high||_{p'}
};
LowHighSplit decompose_low_high(const SpectralField& f, int Q, double p_prime = 4.0);
// Heuristic cutoff: the Q in [-1, q_max] minimizing
// ||grad low||_inf + ||high||_{p'}^{q'}.
int auto_cutoff(const SpectralField& f, double p_prime, double q_prime);

struct ShellAmplitudes {
  // Index q + 1 for q = -1 .. q_max.
  std::vector<double> b;     // lambda_q^(1/3) ||B_q||_3
  std::vector<double> beta;  // lambda_q^(2/3) ||B_q||_3
  double b_at(int q) const { return b.at(q + 1); }
  double beta_at(int q) const { return beta.at(q + 1); }
};
ShellAmplitudes shell_amplitudes(const SpectralField& b);

struct ShellSpectrumRow {
  int q;
  double lambda_q;
  double shell_l2;
  double shell_l3;
  double b_q;
  double beta_q;
};
std::vector<ShellSpectrumRow> shell_spectrum(const SpectralField& b);

enum class Kernel { K, kappa };
// K(n) = lambda_n^(2/3) for n <= 0, lambda_n^(-4/3) for n > 0;
// kappa(n) = lambda_n^(4/3) for n <= 0, lambda_n^(-2/3) for n > 0.
// lambda_n = 2^n for every integer n here.
double kernel_value(Kernel kernel, int n);
// sum_q kernel(Q - q) * amps_sq[q + 1] over q = -1 .. amps_sq.size() - 2.
double kernel_convolve(std::span<const double> amps_sq, Kernel kernel, int Q);

// Shell index q whose support {3/4 lambda_q <= |xi| <= 2 lambda_q} contains
// the spectrum of F (|xi| <= 1 for q = -1); ties go to the shell carrying the
// most L2 mass. Throws PreconditionError if no shell contains it.
int containing_shell(const SpectralField& f);

// ||F||_r / (lambda_q^(3(1/s - 1/r)) ||F||_s) for a single-shell field.
double bernstein_margin(const SpectralField& f_shell, double s, double r);

// Least-squares slope of log2(2^(s j) ||Delta_j F||_p) against j over the
// highest `tail` nonzero shells. Strongly negative slopes indicate membership
// in the closure of the finite-q Besov spaces.
double besov_tail_decay(const SpectralField& f, double s, double p, int tail = 3);

}  // namespace emhd::lp
