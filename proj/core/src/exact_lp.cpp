#include "tropdeg/exact_lp.hpp"

#include <stdexcept>

namespace tropdeg {

std::optional<RatVec> find_feasible_point(std::size_t num_vars, const std::vector<bool>& nonnegative,
                                          const std::vector<LinearConstraint>& constraints) {
  if (nonnegative.size() != num_vars) throw std::invalid_argument("nonnegativity mask length mismatch");

  // Column layout: split variables (x+ and, for free ones, x-), then one
  // slack/surplus per inequality, then one artificial per row.
  std::vector<std::size_t> plus_col(num_vars), minus_col(num_vars, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t i = 0; i < num_vars; ++i) {
    plus_col[i] = cols++;
    if (!nonnegative[i]) minus_col[i] = cols++;
  }
  const std::size_t rows = constraints.size();
  std::vector<std::size_t> slack_col(rows, SIZE_MAX);
  for (std::size_t r = 0; r < rows; ++r)
    if (constraints[r].relation != Relation::Equal) slack_col[r] = cols++;
  const std::size_t first_artificial = cols;
  cols += rows;

  // Tableau rows 0..rows-1 are constraints, row `rows` is the phase-one
  // objective (minimise the sum of artificials), column `cols` is the rhs.
  std::vector<RatVec> t(rows + 1, RatVec(cols + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& con = constraints[r];
    if (con.coefficients.size() != num_vars) throw std::invalid_argument("constraint length mismatch");
    const bool flip = con.rhs < 0;
    const Rat sign = flip ? -1 : 1;
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (con.coefficients[i] == 0) continue;
      t[r][plus_col[i]] = sign * con.coefficients[i];
      if (minus_col[i] != SIZE_MAX) t[r][minus_col[i]] = -sign * con.coefficients[i];
    }
    if (con.relation == Relation::GreaterEqual) t[r][slack_col[r]] = -sign;
    if (con.relation == Relation::LessEqual) t[r][slack_col[r]] = sign;
    t[r][first_artificial + r] = 1;
    t[r][cols] = sign * con.rhs;
    basis[r] = first_artificial + r;
  }
  // Reduced costs of the phase-one objective.
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c <= cols; ++c)
      if (c < first_artificial || c == cols) t[rows][c] -= t[r][c];

  Rat ratio, best;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (t[rows][c] < 0) {
        enter = c;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has
    // a positive entry.
    if (leave == rows) throw std::logic_error("unbounded phase-one simplex");

    const Rat pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rat factor = t[r][enter];
      for (std::size_t c = 0; c <= cols; ++c)
        if (t[leave][c] != 0) t[r][c] -= factor * t[leave][c];
    }
    basis[leave] = enter;
  }

  if (t[rows][cols] != 0) return std::nullopt;

  RatVec split(cols);
  for (std::size_t r = 0; r < rows; ++r) split[basis[r]] = t[r][cols];
  RatVec x(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) {
    x[i] = split[plus_col[i]];
    if (minus_col[i] != SIZE_MAX) x[i] -= split[minus_col[i]];
  }
  return x;
}

}  // namespace tropdeg
