#pragma once

#include <string>

namespace emhd::diag {

enum class Region { uniqueness_region, excluded_boundary, region_I_open, region_II_regular };

std::string to_string(Region region);

struct CriterionTriple {
  double p = 0;
  double q = 0;
  double r = 0;
  Region classification = Region::region_I_open;
};

// Rules, first match wins:
//   uniqueness_region  2/q + 3/p = 1 + r (to 1e-12), 3/(1+r) < p <= inf,
//                      0 < r <= 1, (p, q) != (inf, 1)
//   excluded_boundary  some range condition holds with equality at its
//                      boundary (p = 3/(1+r), r = 0, (p, q) = (inf, 1)) and
//                      none fails strictly
//   region_II_regular  2/q + 3/p <= 1
//   region_I_open      otherwise
// p, q in [1, inf]; anything else throws ParameterError.
CriterionTriple region_classify(double p, double q, double r);

}  // namespace emhd::diag
