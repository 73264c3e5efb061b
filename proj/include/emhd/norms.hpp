#pragma once

#include <span>
#include <vector>

#include "emhd/spectral_field.hpp"

namespace emhd {

// Pairwise (tree) summation; result is independent of thread count.
double pairwise_sum(std::span<const double> values);

// Integral over the torus of equally spaced samples on an m^3 grid.
double integrate_samples(std::span<const double> values, int m);

// Integral over the torus of F . G, from Parseval.
double inner(const SpectralField& f, const SpectralField& g);
double l2_norm(const SpectralField& f);
// sum_i ||d_i F||_2^2
double grad_l2_sq(const SpectralField& f);
// sum_i int grad F_j : grad G_j
double grad_inner(const SpectralField& f, const SpectralField& g);

// (int |F|^p dx)^(1/p) with |F| the pointwise vector magnitude.
// p = 2 uses Parseval; other p use quadrature on a 2x oversampled grid;
// p = inf is the max over that grid.
double lp_norm(const SpectralField& f, double p);

// Pointwise magnitude |F| on an (oversample*n)^3 grid.
std::vector<double> magnitude_samples(const SpectralField& f, int oversample);

}  // namespace emhd
