#include "supg/solver.hpp"

#include <Eigen/SparseLU>
#include <cmath>

#include "supg/errors.hpp"

namespace supg {

Eigen::VectorXd solve(const LinearSystem& system) {
  if (system.matrix.rows() != system.matrix.cols() ||
      system.matrix.rows() != system.rhs.size()) {
    throw SolverFailure("solve: matrix/rhs shape mismatch");
  }
  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(system.matrix);
  lu.factorize(system.matrix);
  if (lu.info() != Eigen::Success) {
    throw SolverFailure("solve: singular or failed sparse LU factorization");
  }
  Eigen::VectorXd x = lu.solve(system.rhs);
  const double rhs_scale = std::max(system.rhs.cwiseAbs().maxCoeff(), 1e-300);
  const double residual = (system.matrix * x - system.rhs).cwiseAbs().maxCoeff();
  if (!std::isfinite(residual) || residual > 1e-8 * rhs_scale) {
    throw SolverFailure("solve: residual check failed");
  }
  return x;
}

}  // namespace supg
