#ifndef SUPG_QUADRATURE_HPP
#define SUPG_QUADRATURE_HPP

#include <array>
#include <vector>

namespace supg {

/// Quadrature rule on the reference cell: the unit interval [0,1] or the
/// unit triangle {(x,y) : x,y >= 0, x+y <= 1}. Weights include the
/// reference-cell measure, so sum(w) = 1 (interval) or 1/2 (triangle).
struct QuadratureRule {
  int dim = 1;
  /// Every polynomial of total degree <= `degree` is integrated exactly.
  int degree = 0;
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

/// Gauss-Legendre rule on [0,1], exact to the requested degree.
QuadratureRule interval_rule(int degree);

/// Symmetric rule on the reference triangle, exact to the requested degree.
QuadratureRule triangle_rule(int degree);

/// Rule of degree >= 2r+2 used for assembly and norms at FE degree r.
QuadratureRule cell_rule(int dim, int fe_degree);

}  // namespace supg

#endif
