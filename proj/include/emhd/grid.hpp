#pragma once

#include <cstddef>
#include <numbers>

namespace emhd {

// Uniform n^3 discretization of the torus [0, 2*pi)^3.
//
// Spectral storage follows the real-to-complex layout: index (i, j, l) with
// i, j in [0, n) and l in [0, n/2]. The signed wavenumber of index i is i for
// i <= n/2 and i - n otherwise. Modes on any Nyquist plane are kept at zero.
class Grid {
 public:
  explicit Grid(int n);

  int n() const { return n_; }
  int half() const { return n_ / 2 + 1; }
  int dealias_cutoff() const { return n_ / 3; }
  static constexpr double length() { return 2.0 * std::numbers::pi; }
  static constexpr double volume() { return length() * length() * length(); }

  std::size_t physical_size() const {
    return static_cast<std::size_t>(n_) * n_ * n_;
  }
  std::size_t spectral_size() const {
    return static_cast<std::size_t>(n_) * n_ * half();
  }
  std::size_t spectral_index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * n_ + j) * half() + l;
  }
  std::size_t physical_index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + l;
  }
  int wavenumber(int index) const { return index <= n_ / 2 ? index : index - n_; }
  // Index for signed wavenumber k (|k| < n/2).
  int index_of(int k) const { return k >= 0 ? k : k + n_; }
  bool is_nyquist(int i, int j, int l) const {
    return i == n_ / 2 || j == n_ / 2 || l == n_ / 2;
  }
  bool is_dealiased(int kx, int ky, int kz) const {
    const int c = dealias_cutoff();
    return kx <= c && kx >= -c && ky <= c && ky >= -c && kz <= c;
  }
  double spacing() const { return length() / n_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int n_;
};

// One stored spectral mode. `weight` is 2 for modes whose conjugate partner
// is not stored (0 < l < n/2) and 1 otherwise, so Parseval sums over the
// half spectrum reproduce full-spectrum sums.
struct Mode {
  std::size_t index;
  int kx, ky, kz;
  double weight;
  double k2() const { return double(kx) * kx + double(ky) * ky + double(kz) * kz; }
};

template <class Fn>
void for_each_mode(const Grid& g, Fn&& fn) {
  const int n = g.n();
  const int h = g.half();
  for (int i = 0; i < n; ++i) {
    const int kx = g.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const int ky = g.wavenumber(j);
      for (int l = 0; l < h; ++l) {
        const double w = (l == 0 || l == n / 2) ? 1.0 : 2.0;
        fn(Mode{g.spectral_index(i, j, l), kx, ky, l, w});
      }
    }
  }
}

}  // namespace emhd
