#ifndef SUPG_ASSEMBLY_HPP
#define SUPG_ASSEMBLY_HPP

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <vector>

#include "supg/fe_space.hpp"
#include "supg/problem.hpp"

namespace supg {

using SparseMatrix = Eigen::SparseMatrix<double>;

struct LinearSystem {
  SparseMatrix matrix;
  Eigen::VectorXd rhs;
};

/// Element contributions split into the Galerkin part and the SUPG part,
/// which enters the system linearly in tau: A(tau) = G + tau * S, and
/// likewise for the right-hand side. Assembling once per configuration and
/// recombining per tau keeps scalar tau searches cheap.
struct AssembledForms {
  int n_dofs = 0;
  std::vector<Eigen::Triplet<double>> galerkin;
  std::vector<Eigen::Triplet<double>> supg;
  Eigen::VectorXd rhs_galerkin;
  Eigen::VectorXd rhs_supg;
};

/// Assembles both forms, parallel over cells. The result is bitwise
/// independent of the thread count: local blocks are computed concurrently
/// and inserted in cell order.
AssembledForms assemble_forms(const ProblemSpec& problem, const FeSpace& space);

/// Plain single-loop reference implementation; kept for tests and the
/// benchmark and bitwise identical to assemble_forms.
AssembledForms assemble_forms_serial(const ProblemSpec& problem, const FeSpace& space);

/// A(tau) = G + tau*S with Dirichlet rows replaced by the identity and
/// rhs = g at boundary dofs. Constrained rows store only the unit diagonal.
LinearSystem combine(const AssembledForms& forms, const ProblemSpec& problem,
                     const FeSpace& space, double tau);

/// One-shot assembly; tau = 0 recovers the plain Galerkin system.
LinearSystem assemble_supg(const ProblemSpec& problem, const FeSpace& space, double tau);
LinearSystem assemble_supg_serial(const ProblemSpec& problem, const FeSpace& space,
                                  double tau);

}  // namespace supg

#endif
