#pragma once

#include <stdexcept>
#include <string>

namespace emhd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Out-of-range scalar parameters (delta <= 0, p < 1, j < -1, ...).
struct ParameterError : Error {
  using Error::Error;
};

// Scalar field passed where a vector field is required, or grid mismatch.
struct ShapeError : Error {
  using Error::Error;
};

// Inverse Laplacian requested on a field with a nonzero mean mode.
struct GaugeError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

// Exponent triple outside the uniqueness region.
struct ClassificationError : Error {
  using Error::Error;
};

// Bad config value; `key` names the offending entry.
struct ConfigError : Error {
  ConfigError(std::string key_name, const std::string& what)
      : Error(key_name + ": " + what), key(std::move(key_name)) {}
  std::string key;
};

struct SnapshotError : Error {
  using Error::Error;
};

}  // namespace emhd
