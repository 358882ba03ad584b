#pragma once

#include <span>
#include <vector>

#include "spatch/matrix.hpp"

namespace spatch {

struct LeastSquaresResult {
  std::vector<double> solution;  // minimum-norm minimizer of |a x - b|_2
  int rank = 0;                  // numerical rank of a
  bool rank_deficient = false;   // rank < min(rows, cols); informational
};

// Minimum-norm least-squares solve, float mode only. Rank deficiency beyond
// the expected structure is reported in the result, never thrown.
LeastSquaresResult solve_least_squares(const MatRect<double>& a,
                                       std::span<const double> b);

}  // namespace spatch
