#pragma once

// Exact rational linear feasibility via two-phase simplex with Bland's rule.

#include "tropdeg/rational.hpp"

#include <optional>
#include <vector>

namespace tropdeg {

enum class Relation { Equal, GreaterEqual, LessEqual };

struct LinearConstraint {
  RatVec coefficients;
  Relation relation = Relation::Equal;
  Rat rhs;
};

/// A point satisfying every constraint, with x_i >= 0 wherever nonnegative[i]
/// is set (other variables are free), or nullopt when the system is
/// infeasible.
std::optional<RatVec> find_feasible_point(std::size_t num_vars, const std::vector<bool>& nonnegative,
                                          const std::vector<LinearConstraint>& constraints);

}  // namespace tropdeg
