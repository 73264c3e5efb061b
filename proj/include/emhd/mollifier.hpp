#pragma once

#include "emhd/spectral_field.hpp"

namespace emhd {

// Mollification parameters. The profile is the standard bump
// c * exp(-1 / (1 - |y|^2)) on the unit ball, normalized to unit mass.
struct MollifierSpec {
  double delta = 0.1;    // spatial mollification radius
  double epsilon = 0.1;  // cutoff scale around the singular curve

  void validate() const;
};

// Unnormalized radial bump exp(-1/(1-r^2)) for r < 1, zero otherwise.
double bump(double r);

// Normalized 3D profile eta(r), with 4*pi * int_0^1 eta(r) r^2 dr = 1.
double mollifier_profile(double r);
// Normalized 1D profile on [-1, 1], used for curve mollification.
double mollifier_profile_1d(double t);

// 4*pi * int_0^1 eta(r) r^2 dr evaluated by quadrature; 1 up to roundoff.
double mollifier_mass();

// Fourier transform of the normalized 3D profile at radial frequency rho:
// eta_hat(rho) = int eta(y) exp(-i xi.y) dy, |xi| = rho.
double mollifier_symbol(double rho);

// F_delta = eta_delta * F as the Fourier multiplier eta_hat(delta |k|).
SpectralField mollify(const SpectralField& f, const MollifierSpec& spec);

}  // namespace emhd
