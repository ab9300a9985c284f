#ifndef SUPG_SOLVER_HPP
#define SUPG_SOLVER_HPP

#include <Eigen/Core>

#include "supg/assembly.hpp"

namespace supg {

/// Direct sparse LU solve; throws SolverFailure on a singular factorization
/// or a relative residual above 1e-8.
Eigen::VectorXd solve(const LinearSystem& system);

}  // namespace supg

#endif
