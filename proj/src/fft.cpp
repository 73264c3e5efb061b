#include "emhd/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace emhd::fft {
namespace {

struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

// Planner calls are not thread-safe in FFTW; execution with the new-array
// interface is. Plans are created once per size and never destroyed. Plans
// assume SIMD-aligned arrays, so every execution goes through the aligned
// per-thread buffers below.
const PlanPair& plans_for(int m) {
  static std::mutex mu;
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  const std::size_t nreal = std::size_t(m) * m * m;
  const std::size_t ncplx = std::size_t(m) * m * (m / 2 + 1);
  double* r = fftw_alloc_real(nreal);
  fftw_complex* c = fftw_alloc_complex(ncplx);
  PlanPair p;
  p.r2c = fftw_plan_dft_r2c_3d(m, m, m, r, c, FFTW_ESTIMATE);
  p.c2r = fftw_plan_dft_c2r_3d(m, m, m, c, r, FFTW_ESTIMATE);
  fftw_free(r);
  fftw_free(c);
  return cache.emplace(m, p).first->second;
}

struct FftwDeleter {
  void operator()(void* p) const { fftw_free(p); }
};

struct Buffers {
  int m = 0;
  std::unique_ptr<double, FftwDeleter> real;
  std::unique_ptr<fftw_complex, FftwDeleter> cplx;
};

Buffers& buffers_for(int m) {
  thread_local std::map<int, Buffers> pool;
  auto& b = pool[m];
  if (b.m != m) {
    b.m = m;
    b.real.reset(fftw_alloc_real(std::size_t(m) * m * m));
    b.cplx.reset(fftw_alloc_complex(std::size_t(m) * m * (m / 2 + 1)));
  }
  return b;
}

}  // namespace

void forward(int m, const double* physical, complex* half_spectrum) {
  const auto& p = plans_for(m);
  auto& buf = buffers_for(m);
  const std::size_t nreal = std::size_t(m) * m * m;
  const std::size_t ncplx = std::size_t(m) * m * (m / 2 + 1);
  std::copy(physical, physical + nreal, buf.real.get());
  fftw_execute_dft_r2c(p.r2c, buf.real.get(), buf.cplx.get());
  const auto* c = reinterpret_cast<const complex*>(buf.cplx.get());
  const double scale = 1.0 / double(nreal);
  for (std::size_t i = 0; i < ncplx; ++i) half_spectrum[i] = c[i] * scale;
}

void inverse(int m, const complex* half_spectrum, double* physical) {
  const auto& p = plans_for(m);
  auto& buf = buffers_for(m);
  const std::size_t nreal = std::size_t(m) * m * m;
  const std::size_t ncplx = std::size_t(m) * m * (m / 2 + 1);
  // c2r overwrites its input for multi-dimensional transforms.
  std::copy(half_spectrum, half_spectrum + ncplx, reinterpret_cast<complex*>(buf.cplx.get()));
  fftw_execute_dft_c2r(p.c2r, buf.cplx.get(), buf.real.get());
  std::copy(buf.real.get(), buf.real.get() + nreal, physical);
}

}  // namespace emhd::fft
