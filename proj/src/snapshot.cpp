#include "emhd/snapshot.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "emhd/errors.hpp"

namespace emhd {
namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

constexpr std::size_t kHeaderBytes = 8 + 4 + 4 + 4 + 8 + 8 + 8;

template <class T>
void put(std::string& buf, T v) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &v, sizeof(T));
  buf.append(bytes, sizeof(T));
}

class Reader {
 public:
  Reader(const std::string& data, const std::string& path) : data_(data), path_(path) {}

  template <class T>
  T get() {
    if (pos_ + sizeof(T) > data_.size()) {
      std::ostringstream msg;
      msg << path_ << ": truncated snapshot at byte offset " << data_.size() << " (needed "
          << sizeof(T) << " bytes at offset " << pos_ << ")";
      throw SnapshotError(msg.str());
    }
    T v;
    std::memcpy(&v, data_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  std::size_t pos() const { return pos_; }

 private:
  const std::string& data_;
  const std::string& path_;
  std::size_t pos_ = 0;
};

}  // namespace

void write_snapshot(const std::string& path, const SpectralField& field, double mu,
                    double d_i) {
  const Grid& g = field.grid();
  const int n = g.n();
  std::string buf;
  buf.reserve(kHeaderBytes + std::size_t(field.ncomp()) * g.physical_size() * 16);
  buf.append(kSnapshotMagic, 8);
  put<std::uint32_t>(buf, kSnapshotVersion);
  put<std::uint32_t>(buf, std::uint32_t(n));
  put<std::uint32_t>(buf, std::uint32_t(field.ncomp()));
  put<double>(buf, field.time());
  put<double>(buf, mu);
  put<double>(buf, d_i);
  for (int c = 0; c < field.ncomp(); ++c) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          complex v;
          if (l <= n / 2) {
            v = field.at(c, g.spectral_index(i, j, l));
          } else {
            v = std::conj(field.at(c, g.spectral_index((n - i) % n, (n - j) % n, n - l)));
          }
          put<double>(buf, v.real());
          put<double>(buf, v.imag());
        }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SnapshotError("cannot open " + path + " for writing");
  out.write(buf.data(), std::streamsize(buf.size()));
  if (!out) throw SnapshotError("write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotError("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (data.size() < 8 || std::memcmp(data.data(), kSnapshotMagic, 8) != 0) {
    throw SnapshotError(path + ": bad snapshot header");
  }
  Reader r(data, path);
  for (int i = 0; i < 8; ++i) r.get<char>();
  const auto version = r.get<std::uint32_t>();
  const auto n = r.get<std::uint32_t>();
  const auto ncomp = r.get<std::uint32_t>();
  if (version != kSnapshotVersion) {
    throw SnapshotError(path + ": bad snapshot header (version " + std::to_string(version) + ")");
  }
  if (ncomp != 1 && ncomp != 3) {
    throw SnapshotError(path + ": bad snapshot header (ncomp " + std::to_string(ncomp) + ")");
  }
  Grid grid = [&] {
    try {
      return Grid(int(n));
    } catch (const Error&) {
      throw SnapshotError(path + ": bad snapshot header (n " + std::to_string(n) + ")");
    }
  }();
  Snapshot snap{SpectralField(grid, int(ncomp)), 0.0, 0.0};
  snap.field.set_time(r.get<double>());
  snap.mu = r.get<double>();
  snap.d_i = r.get<double>();

  const int nn = int(n);
  std::vector<complex> full(grid.physical_size());
  for (int c = 0; c < int(ncomp); ++c) {
    for (auto& v : full) {
      const double re = r.get<double>();
      const double im = r.get<double>();
      v = {re, im};
    }
    double scale = 0.0;
    for (const auto& v : full) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j)
        for (int l = 0; l <= nn / 2; ++l) {
          const complex v = full[grid.physical_index(i, j, l)];
          const complex partner =
              full[grid.physical_index((nn - i) % nn, (nn - j) % nn, (nn - l) % nn)];
          if (std::abs(v - std::conj(partner)) > 1e-12 * scale + 1e-300) {
            std::ostringstream msg;
            msg << path << ": coefficients are not Hermitian at component " << c
                << ", index (" << i << "," << j << "," << l << ")";
            throw SnapshotError(msg.str());
          }
          snap.field.at(c, grid.spectral_index(i, j, l)) =
              grid.is_nyquist(i, j, l) ? complex{} : v;
        }
  }
  if (r.pos() != data.size()) {
    std::ostringstream msg;
    msg << path << ": " << data.size() - r.pos() << " trailing bytes after offset " << r.pos();
    throw SnapshotError(msg.str());
  }
  return snap;
}

}  // namespace emhd
