#pragma once

#include <optional>
#include <vector>

#include "plancut/rational.hpp"

namespace plancut {

// Exact fractional set-cover optimum:
//   minimize sum_j x_j   subject to   sum_{j in row} x_j >= 1 for every row,
//   0 <= x_j <= 1.
// Columns with identical row membership are collapsed before the simplex
// runs, so cost scales with the number of distinct membership patterns
// rather than with raw columns. The result is certified: the returned x is
// rechecked against every constraint and the optimal value is matched
// against an exact dual bound before returning.
struct CoverResult {
  std::vector<Rat> x;  // size n, an optimal assignment
  Rat value;           // sum of x, the exact LP minimum
  long iterations = 0;
  long patterns = 0;   // distinct nonempty membership patterns
};

// nullopt iff some row is empty after clamping to valid column indices
// (an uncoverable row makes the whole system infeasible at any budget).
std::optional<CoverResult> min_cover(size_t n, const std::vector<std::vector<size_t>>& rows);

}  // namespace plancut
