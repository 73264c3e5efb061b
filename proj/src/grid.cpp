#include "emhd/grid.hpp"

#include <string>

#include "emhd/errors.hpp"

namespace emhd {

Grid::Grid(int n) : n_(n) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw ParameterError("grid size must be a power of two >= 8, got " +
                         std::to_string(n));
  }
}

}  // namespace emhd
