#include "spatch/least_squares.hpp"

#include <Eigen/Dense>

namespace spatch {

LeastSquaresResult solve_least_squares(const MatRect<double>& a,
                                       std::span<const double> b) {
  if (a.rows() != static_cast<int>(b.size()))
    throw ShapeError("least squares: " + std::to_string(a.rows()) +
                     " rows vs " + std::to_string(b.size()) + " rhs entries");

  Eigen::MatrixXd m(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(b.size()));
  for (size_t i = 0; i < b.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = b[i];

  // Complete orthogonal decomposition yields the minimum-norm solution for
  // any shape and rank.
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m);
  Eigen::VectorXd x = cod.solve(rhs);

  LeastSquaresResult out;
  out.rank = static_cast<int>(cod.rank());
  out.rank_deficient = out.rank < std::min(a.rows(), a.cols());
  out.solution.assign(x.data(), x.data() + x.size());
  return out;
}

}  // namespace spatch
