#pragma once

#include <vector>

#include "emhd/solver.hpp"

namespace emhd::diag {

// phi(t, x) = psi(x) g(t) with psi a band-limited scalar field and g a
// polynomial, so phi_t, grad phi and Lap phi are exact.
struct TestFunction {
  SpectralField spatial;
  std::vector<double> temporal;  // g(t) = sum_k temporal[k] t^k

  double g(double t) const;
  double g_dot(double t) const;
};

// phi = 1.
TestFunction constant_test_function(const Grid& grid);
// phi = (1 + cos x1 cos x2) (1 - t/T)^2.
TestFunction envelope_test_function(const Grid& grid, double T);

struct HelicityIdentityPoint {
  double t = 0;
  double lhs = 0;  // int A.B phi (t) + 2 mu int_0^t int grad A : grad B phi
  double rhs = 0;  // int A.B phi (0) + int_0^t int A.B (phi_t + mu Lap phi) + fluxes
  double residual = 0;
};

struct HelicityIdentityReport {
  std::vector<HelicityIdentityPoint> points;
  double scale = 0;         // largest magnitude among the individual terms
  double max_residual = 0;  // max |lhs - rhs| / scale
};

// Checks, for B evolving by dB/dt = -d_i curl((curl B) x B) + mu Lap B,
//   int A.B phi |_0^t + 2 mu int int grad A : grad B phi
//     = int int A.B (phi_t + mu Lap phi) - d_i int int ((curl B) x B) . (grad phi x A) + G,
// where G = -d_i int int p B . grad phi, p = Lap^{-1} div((curl B) x B), when A is
// in Coulomb gauge (projected potential or biot_savart per snapshot) and G = 0
// for the unprojected potential. Space integrals are exact on the 2n grid,
// time integrals trapezoid over the snapshots.
HelicityIdentityReport generalized_helicity_report(const Trajectory& traj,
                                                   const TestFunction& phi);
double generalized_helicity_residual(const Trajectory& traj, const TestFunction& phi);

}  // namespace emhd::diag
