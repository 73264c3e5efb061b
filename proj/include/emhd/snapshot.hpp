#pragma once

#include <cstdint>
#include <string>

#include "emhd/spectral_field.hpp"

namespace emhd {

// Binary snapshot layout (little-endian):
//   "EMHDSNAP", u32 version = 1, u32 n, u32 ncomp, f64 time, f64 mu, f64 d_i,
//   then ncomp * n^3 coefficient pairs (f64 re, f64 im). Components are
//   outermost; within a component the index (i1, i2, i3) is row-major with
//   i3 fastest, and i maps to wavenumber i (i <= n/2) or i - n. Coefficients
//   use the convention f(x) = sum_k c_k exp(i k.x).
inline constexpr char kSnapshotMagic[8] = {'E', 'M', 'H', 'D', 'S', 'N', 'A', 'P'};
inline constexpr std::uint32_t kSnapshotVersion = 1;

struct Snapshot {
  SpectralField field;
  double mu = 0.0;
  double d_i = 0.0;
};

void write_snapshot(const std::string& path, const SpectralField& field, double mu,
                    double d_i);
// Throws SnapshotError ("bad snapshot header", or a truncation message with
// the byte offset where data ran out).
Snapshot read_snapshot(const std::string& path);

}  // namespace emhd
