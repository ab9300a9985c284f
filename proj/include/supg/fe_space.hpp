#ifndef SUPG_FE_SPACE_HPP
#define SUPG_FE_SPACE_HPP

#include <array>
#include <vector>

#include "supg/mesh.hpp"
#include "supg/quadrature.hpp"

namespace supg {

/// Value and reference-frame derivatives of one basis function at one point.
/// 1D uses grad[0] and hess[0]; 2D hess packs (dxx, dxy, dyy).
struct BasisPoint {
  double value = 0.0;
  std::array<double, 2> grad = {0.0, 0.0};
  std::array<double, 3> hess = {0.0, 0.0, 0.0};
};

/// Equispaced Lagrange element of degree 1..4 on the reference interval
/// [0,1] or reference triangle {(x,y): x,y >= 0, x+y <= 1}.
class ReferenceElement {
 public:
  ReferenceElement(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int n_dofs() const { return static_cast<int>(nodes_.size()); }
  const std::vector<std::array<double, 2>>& nodes() const { return nodes_; }

  /// Evaluates every basis function at a reference point.
  std::vector<BasisPoint> eval(double x, double y) const;

  /// Basis tables at all points of a quadrature rule, [point][dof].
  std::vector<std::vector<BasisPoint>> tabulate(const QuadratureRule& rule) const;

  /// Node lattice steps (s,t) along the first/second cell edge, one per dof,
  /// in the same order as nodes(); node = v0 + (s/r)(v1-v0) + (t/r)(v2-v0).
  const std::vector<std::array<int, 2>>& lattice() const { return lattice_; }

 private:
  int dim_;
  int degree_;
  std::vector<std::array<double, 2>> nodes_;
  std::vector<std::array<int, 2>> lattice_;
};

/// Conforming Lagrange space over a structured mesh. Global dofs are the
/// points of the fine lattice with spacing 1/(n*r), so shared edge/vertex
/// nodes of neighboring cells coincide by construction.
struct FeSpace {
  Mesh mesh;
  int degree = 1;
  ReferenceElement element;
  std::vector<std::array<double, 2>> dof_coords;
  /// Flattened per-cell dof ids, stride = element.n_dofs().
  std::vector<int> cell_dofs;
  std::vector<bool> boundary_dof_flags;

  FeSpace(Mesh m, int r);

  int n_dofs() const { return static_cast<int>(dof_coords.size()); }
  int dofs_per_cell() const { return element.n_dofs(); }
  const int* cell_dof_ptr(std::size_t cell) const {
    return cell_dofs.data() + cell * static_cast<std::size_t>(dofs_per_cell());
  }
};

FeSpace build_space(const Mesh& mesh, int r);

}  // namespace supg

#endif
