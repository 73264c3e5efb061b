#pragma once

#include <functional>

#include "emhd/spectral_field.hpp"

namespace emhd {

// Multiplies every mode by symbol(mode). The symbol must be real and even in
// k so the result stays real.
SpectralField apply_symbol(const SpectralField& f,
                           const std::function<double(const Mode&)>& symbol);

// Zeroes every mode with some |k_i| > floor(n/3).
void dealias(SpectralField& f);
SpectralField dealiased(SpectralField f);

SpectralField curl(const SpectralField& f);
SpectralField divergence(const SpectralField& f);
SpectralField gradient(const SpectralField& scalar);
SpectralField laplacian(const SpectralField& f);
// Component i of grad f_j is stored at component 3*j + i of the returned
// list; used for the tensor contractions of the helicity identity.
std::vector<SpectralField> gradient_components(const SpectralField& f);

// Removes the gradient part: P f = f - grad Lap^{-1} div f.
SpectralField leray_project(const SpectralField& f);

// Coulomb-gauge potential A = curl (-Lap)^{-1} B. Requires a zero mean mode.
SpectralField biot_savart(const SpectralField& b);

// Pointwise products evaluated on the native grid and dealiased.
SpectralField cross(const SpectralField& a, const SpectralField& b);
SpectralField dot(const SpectralField& a, const SpectralField& b);
SpectralField multiply(const SpectralField& scalar, const SpectralField& f);
// (a . grad) b
SpectralField advect(const SpectralField& a, const SpectralField& b);
// div(a (x) b), component i = sum_j d_j (a_i b_j)
SpectralField tensor_divergence(const SpectralField& a, const SpectralField& b);

struct HallTerms {
  SpectralField lorentz;  // (curl B) x B
  SpectralField hall;     // curl((curl B) x B)
};
HallTerms hall_nonlinearity(const SpectralField& b);

// L2 norm of (curl B) x B - div(B (x) B) + grad|B|^2 / 2.
double identity_residual(const SpectralField& b);

// Relative L2 residuals of the product-rule identities for scalar phi and
// vector fields a, b (each normalized by the largest term involved):
//   grad(phi a)   = grad(phi) (x) a + phi grad a
//   div(phi a)    = grad(phi) . a + phi div a
//   curl(phi a)   = phi curl a + grad(phi) x a
//   curl(a x b)   = a div b - b div a + (b.grad) a - (a.grad) b
//   (curl a) x b  = a x curl b + (a.grad) b + (b.grad) a - grad(a.b)
struct ProductRuleResiduals {
  double gradient_of_product = 0;
  double divergence_of_product = 0;
  double curl_of_product = 0;
  double curl_of_cross = 0;
  double cross_with_curl = 0;
  double max() const;
};
ProductRuleResiduals product_rule_residuals(const SpectralField& phi,
                                            const SpectralField& a,
                                            const SpectralField& b);

// Same field on another grid: shared modes are copied, the rest dropped.
SpectralField resample(const SpectralField& f, const Grid& target);

// Largest |k . F(k)| over all modes.
double max_divergence(const SpectralField& f);

}  // namespace emhd
