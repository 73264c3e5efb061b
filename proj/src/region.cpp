#include "emhd/region.hpp"

#include <cmath>

#include "emhd/errors.hpp"

namespace emhd::diag {
namespace {

constexpr double kTol = 1e-12;

bool close(double a, double b) { return std::abs(a - b) <= kTol * std::max(1.0, std::abs(b)); }

double inv(double x) { return std::isinf(x) ? 0.0 : 1.0 / x; }

}  // namespace

std::string to_string(Region region) {
  switch (region) {
    case Region::uniqueness_region: return "uniqueness_region";
    case Region::excluded_boundary: return "excluded_boundary";
    case Region::region_I_open: return "region_I_open";
    case Region::region_II_regular: return "region_II_regular";
  }
  return "unknown";
}

CriterionTriple region_classify(double p, double q, double r) {
  auto exponent_ok = [](double x) { return !std::isnan(x) && x >= 1.0; };
  if (!exponent_ok(p) || !exponent_ok(q)) {
    throw ParameterError("region_classify: p and q must lie in [1, inf]");
  }
  if (!std::isfinite(r)) throw ParameterError("region_classify: r must be finite");

  CriterionTriple out{p, q, r, Region::region_I_open};
  const double scaling = 2.0 * inv(q) + 3.0 * inv(p);

  // Lower bound on p, in reciprocal form to handle p = inf: 1/p < (1+r)/3.
  const double p_gap = (1.0 + r) / 3.0 - inv(p);
  const bool p_on_boundary = std::abs(p_gap) <= kTol;
  const bool p_strict_fail = !p_on_boundary && p_gap < 0.0;
  const bool r_on_boundary = std::abs(r) <= kTol;
  const bool r_strict_fail = !r_on_boundary && (r < 0.0 || r > 1.0 + kTol);
  const bool endpoint = std::isinf(p) && q == 1.0;

  const bool all_hold = close(scaling, 1.0 + r) && !p_on_boundary && !p_strict_fail &&
                        !r_on_boundary && !r_strict_fail && !endpoint;
  if (all_hold) {
    out.classification = Region::uniqueness_region;
  } else if ((p_on_boundary || r_on_boundary || endpoint) && !p_strict_fail &&
             !r_strict_fail) {
    out.classification = Region::excluded_boundary;
  } else if (scaling <= 1.0 + kTol) {
    out.classification = Region::region_II_regular;
  }
  return out;
}

}  // namespace emhd::diag
