#pragma once

#include <optional>
#include <vector>

#include "relcurr/rational.hpp"

namespace relcurr {

// Result of an exact underdetermined solve of A x = b.
struct ExactSolution {
  bool consistent = false;
  std::vector<Rational> x;  // free variables pinned to zero
  int failing_row = -1;     // a row witnessing inconsistency
};

// Fraction-free (Bareiss) elimination after clearing denominators; divisions
// stay exact throughout. A is given densely, row major.
ExactSolution solve_exact(const std::vector<std::vector<Rational>>& a,
                          const std::vector<Rational>& b);

}  // namespace relcurr
