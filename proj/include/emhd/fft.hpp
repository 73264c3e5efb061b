#pragma once

#include <complex>

namespace emhd::fft {

using complex = std::complex<double>;

// Real-to-complex transform on an m^3 grid, normalized so that
// f(x) = sum_k c_k exp(i k.x): c = (1/m^3) * sum_x f(x) exp(-i k.x).
void forward(int m, const double* physical, complex* half_spectrum);

// Inverse of `forward`: evaluates sum_k c_k exp(i k.x) on the m^3 grid.
// The input is left untouched.
void inverse(int m, const complex* half_spectrum, double* physical);

}  // namespace emhd::fft
