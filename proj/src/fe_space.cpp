#include "supg/fe_space.hpp"

#include <cmath>

#include "supg/errors.hpp"

namespace supg {

namespace {

// Polynomial value with first and second derivative, accumulated as a
// product of linear factors.
struct Jet {
  double v = 1.0;
  double d1 = 0.0;
  double d2 = 0.0;

  // multiply by the linear factor a*x + b evaluated with f = a*x+b, f' = a
  void mul_linear(double f, double a) {
    d2 = d2 * f + 2.0 * d1 * a;
    d1 = d1 * f + v * a;
    v = v * f;
  }
};

// Lagrange polynomial L_i on the equispaced nodes {0, 1/r, ..., 1}.
Jet lagrange_1d(int r, int i, double x) {
  Jet jet;
  const double xi = static_cast<double>(i) / r;
  for (int j = 0; j <= r; ++j) {
    if (j == i) continue;
    const double xj = static_cast<double>(j) / r;
    const double denom = xi - xj;
    jet.mul_linear((x - xj) / denom, 1.0 / denom);
  }
  return jet;
}

// Silvester polynomial P_m(l) = prod_{s<m} (r*l - s)/(m - s); P_m(k/r) is 1
// at k = m and 0 at k = 0..m-1, which makes the products below interpolatory
// on the barycentric lattice.
Jet silvester(int r, int m, double l) {
  Jet jet;
  for (int s = 0; s < m; ++s) {
    const double denom = static_cast<double>(m - s);
    jet.mul_linear((r * l - s) / denom, r / denom);
  }
  return jet;
}

}  // namespace

ReferenceElement::ReferenceElement(int dim, int degree) : dim_(dim), degree_(degree) {
  if (degree < 1 || degree > 4) {
    throw UnsupportedDegree("ReferenceElement: degree must be in 1..4");
  }
  const int r = degree;
  if (dim == 1) {
    for (int s = 0; s <= r; ++s) {
      nodes_.push_back({static_cast<double>(s) / r, 0.0});
      lattice_.push_back({s, 0});
    }
  } else {
    for (int t = 0; t <= r; ++t) {
      for (int s = 0; s + t <= r; ++s) {
        nodes_.push_back({static_cast<double>(s) / r, static_cast<double>(t) / r});
        lattice_.push_back({s, t});
      }
    }
  }
}

std::vector<BasisPoint> ReferenceElement::eval(double x, double y) const {
  const int r = degree_;
  std::vector<BasisPoint> out(nodes_.size());
  if (dim_ == 1) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Jet jet = lagrange_1d(r, lattice_[i][0], x);
      out[i].value = jet.v;
      out[i].grad = {jet.d1, 0.0};
      out[i].hess = {jet.d2, 0.0, 0.0};
    }
    return out;
  }
  // Barycentric coordinates on the reference triangle; all three are linear
  // in (x,y) so second derivatives need only products of the P factors.
  const double l1 = 1.0 - x - y;  // d/dx = -1, d/dy = -1
  const double l2 = x;
  const double l3 = y;
  for (std::size_t idx = 0; idx < nodes_.size(); ++idx) {
    const int s = lattice_[idx][0];
    const int t = lattice_[idx][1];
    const int i = r - s - t;
    const Jet A = silvester(r, i, l1);
    const Jet B = silvester(r, s, l2);
    const Jet C = silvester(r, t, l3);
    BasisPoint& bp = out[idx];
    bp.value = A.v * B.v * C.v;
    bp.grad[0] = -A.d1 * B.v * C.v + A.v * B.d1 * C.v;
    bp.grad[1] = -A.d1 * B.v * C.v + A.v * B.v * C.d1;
    bp.hess[0] = A.d2 * B.v * C.v - 2.0 * A.d1 * B.d1 * C.v + A.v * B.d2 * C.v;
    bp.hess[1] = A.d2 * B.v * C.v - A.d1 * B.v * C.d1 - A.d1 * B.d1 * C.v +
                 A.v * B.d1 * C.d1;
    bp.hess[2] = A.d2 * B.v * C.v - 2.0 * A.d1 * B.v * C.d1 + A.v * B.v * C.d2;
  }
  return out;
}

std::vector<std::vector<BasisPoint>> ReferenceElement::tabulate(
    const QuadratureRule& rule) const {
  std::vector<std::vector<BasisPoint>> table(rule.size());
  for (std::size_t q = 0; q < rule.size(); ++q) {
    table[q] = eval(rule.points[q][0], rule.points[q][1]);
  }
  return table;
}

FeSpace::FeSpace(Mesh m, int r) : mesh(std::move(m)), degree(r), element(mesh.dim, r) {
  const int n = mesh.n;
  const int fine = n * r;  // fine-lattice points per side
  const int per_cell = element.n_dofs();
  cell_dofs.resize(mesh.n_cells() * static_cast<std::size_t>(per_cell));

  if (mesh.dim == 1) {
    dof_coords.resize(fine + 1);
    for (int a = 0; a <= fine; ++a) {
      dof_coords[a] = {static_cast<double>(a) / fine, 0.0};
    }
    boundary_dof_flags.assign(dof_coords.size(), false);
    boundary_dof_flags.front() = true;
    boundary_dof_flags.back() = true;
    for (std::size_t c = 0; c < mesh.n_cells(); ++c) {
      for (int s = 0; s <= r; ++s) {
        cell_dofs[c * per_cell + s] = static_cast<int>(c) * r + s;
      }
    }
    return;
  }

  const int stride = fine + 1;
  dof_coords.resize(static_cast<std::size_t>(stride) * stride);
  boundary_dof_flags.assign(dof_coords.size(), false);
  for (int b = 0; b <= fine; ++b) {
    for (int a = 0; a <= fine; ++a) {
      const int d = b * stride + a;
      dof_coords[d] = {static_cast<double>(a) / fine, static_cast<double>(b) / fine};
      if (a == 0 || a == fine || b == 0 || b == fine) boundary_dof_flags[d] = true;
    }
  }
  const int nv = n + 1;
  for (std::size_t c = 0; c < mesh.n_cells(); ++c) {
    const auto& cell = mesh.cells[c];
    // vertex fine-lattice coordinates; edge steps are integer by construction
    std::array<std::array<int, 2>, 3> vf;
    for (int k = 0; k < 3; ++k) {
      vf[k] = {(cell[k] % nv) * r, (cell[k] / nv) * r};
    }
    const std::array<int, 2> u = {(vf[1][0] - vf[0][0]) / r, (vf[1][1] - vf[0][1]) / r};
    const std::array<int, 2> w = {(vf[2][0] - vf[0][0]) / r, (vf[2][1] - vf[0][1]) / r};
    const auto& lattice = element.lattice();
    for (int k = 0; k < per_cell; ++k) {
      const int s = lattice[k][0];
      const int t = lattice[k][1];
      const int a = vf[0][0] + s * u[0] + t * w[0];
      const int b = vf[0][1] + s * u[1] + t * w[1];
      cell_dofs[c * per_cell + k] = b * stride + a;
    }
  }
}

FeSpace build_space(const Mesh& mesh, int r) {
  if (r < 1 || r > 4) throw UnsupportedDegree("build_space: degree must be in 1..4");
  return FeSpace(mesh, r);
}

}  // namespace supg
