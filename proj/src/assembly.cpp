#include "supg/assembly.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "supg/errors.hpp"

namespace supg {

namespace {

// Geometry of one affine cell: Jacobian inverse (transposed application),
// |det J|, and M = Jinv * Jinv^T for mapping reference Hessian traces.
struct CellMap {
  double origin[2];
  double jac[2][2];
  double det = 0.0;
  double inv[2][2];
  double m[3];  // M00, M01, M11
};

CellMap cell_map(const Mesh& mesh, std::size_t c) {
  CellMap map{};
  const auto& cell = mesh.cells[c];
  const auto& a = mesh.vertices[cell[0]];
  map.origin[0] = a[0];
  map.origin[1] = a[1];
  if (mesh.dim == 1) {
    const double dx = mesh.vertices[cell[1]][0] - a[0];
    map.jac[0][0] = dx;
    map.det = dx;
    map.inv[0][0] = 1.0 / dx;
    map.m[0] = map.inv[0][0] * map.inv[0][0];
    return map;
  }
  const auto& b = mesh.vertices[cell[1]];
  const auto& d = mesh.vertices[cell[2]];
  map.jac[0][0] = b[0] - a[0];
  map.jac[1][0] = b[1] - a[1];
  map.jac[0][1] = d[0] - a[0];
  map.jac[1][1] = d[1] - a[1];
  map.det = map.jac[0][0] * map.jac[1][1] - map.jac[0][1] * map.jac[1][0];
  const double idet = 1.0 / map.det;
  map.inv[0][0] = map.jac[1][1] * idet;
  map.inv[0][1] = -map.jac[0][1] * idet;
  map.inv[1][0] = -map.jac[1][0] * idet;
  map.inv[1][1] = map.jac[0][0] * idet;
  map.m[0] = map.inv[0][0] * map.inv[0][0] + map.inv[0][1] * map.inv[0][1];
  map.m[1] = map.inv[0][0] * map.inv[1][0] + map.inv[0][1] * map.inv[1][1];
  map.m[2] = map.inv[1][0] * map.inv[1][0] + map.inv[1][1] * map.inv[1][1];
  return map;
}

// Scratch holding one cell's local matrices, laid out G | S | rhsG | rhsS.
struct LocalBlock {
  double* g;
  double* s;
  double* fg;
  double* fs;
};

LocalBlock block_view(std::vector<double>& buffer, std::size_t cell, int p) {
  const std::size_t stride = static_cast<std::size_t>(p) * (2 * p + 2);
  double* base = buffer.data() + cell * stride;
  return {base, base + p * p, base + 2 * p * p, base + 2 * p * p + p};
}

// Computes the local Galerkin and SUPG blocks of one cell. Returns false if
// a coefficient evaluated non-finite.
bool cell_kernel(const ProblemSpec& problem, const FeSpace& space,
                 const QuadratureRule& rule,
                 const std::vector<std::vector<BasisPoint>>& table, std::size_t c,
                 const LocalBlock& out) {
  const int p = space.dofs_per_cell();
  const CellMap map = cell_map(space.mesh, c);
  const double mu = problem.mu;
  const double bx = problem.beta[0];
  const double by = space.mesh.dim == 2 ? problem.beta[1] : 0.0;
  const double bdiv = problem.beta_div;
  const int r = space.degree;

  std::fill(out.g, out.g + static_cast<std::size_t>(p) * (2 * p + 2), 0.0);

  double gradx[15];
  double grady[15];
  double lap[15];
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const auto& ref = table[q];
    const double w = rule.weights[q] * std::abs(map.det);
    Point x;
    x[0] = map.origin[0] + map.jac[0][0] * rule.points[q][0] +
           map.jac[0][1] * rule.points[q][1];
    x[1] = map.origin[1] + map.jac[1][0] * rule.points[q][0] +
           map.jac[1][1] * rule.points[q][1];
    const double f = problem.forcing(x);
    if (!std::isfinite(f)) return false;

    for (int i = 0; i < p; ++i) {
      gradx[i] = map.inv[0][0] * ref[i].grad[0] + map.inv[1][0] * ref[i].grad[1];
      grady[i] = map.inv[0][1] * ref[i].grad[0] + map.inv[1][1] * ref[i].grad[1];
      // diffusion part of the strong residual vanishes identically for r = 1
      lap[i] = r == 1 ? 0.0
                      : map.m[0] * ref[i].hess[0] + 2.0 * map.m[1] * ref[i].hess[1] +
                            map.m[2] * ref[i].hess[2];
    }
    for (int i = 0; i < p; ++i) {
      const double vi = ref[i].value;
      const double conv_i = bx * gradx[i] + by * grady[i];
      // SUPG test operator (div(beta v) + beta . grad v)/2
      const double sop_i = 0.5 * bdiv * vi + conv_i;
      for (int j = 0; j < p; ++j) {
        const double conv_j = bx * gradx[j] + by * grady[j];
        out.g[i * p + j] +=
            w * (mu * (gradx[j] * gradx[i] + grady[j] * grady[i]) + conv_j * vi);
        out.s[i * p + j] += w * (-mu * lap[j] + conv_j) * sop_i;
      }
      out.fg[i] += w * f * vi;
      out.fs[i] += w * f * sop_i;
    }
  }
  return true;
}

AssembledForms gather(const FeSpace& space, std::vector<double>& blocks) {
  const int p = space.dofs_per_cell();
  const std::size_t n_cells = space.mesh.n_cells();
  AssembledForms forms;
  forms.n_dofs = space.n_dofs();
  forms.rhs_galerkin = Eigen::VectorXd::Zero(forms.n_dofs);
  forms.rhs_supg = Eigen::VectorXd::Zero(forms.n_dofs);
  forms.galerkin.reserve(n_cells * static_cast<std::size_t>(p) * p);
  forms.supg.reserve(n_cells * static_cast<std::size_t>(p) * p);
  for (std::size_t c = 0; c < n_cells; ++c) {
    const LocalBlock local = block_view(blocks, c, p);
    const int* dofs = space.cell_dof_ptr(c);
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        forms.galerkin.emplace_back(dofs[i], dofs[j], local.g[i * p + j]);
        forms.supg.emplace_back(dofs[i], dofs[j], local.s[i * p + j]);
      }
      forms.rhs_galerkin[dofs[i]] += local.fg[i];
      forms.rhs_supg[dofs[i]] += local.fs[i];
    }
  }
  return forms;
}

}  // namespace

AssembledForms assemble_forms(const ProblemSpec& problem, const FeSpace& space) {
  const int p = space.dofs_per_cell();
  const std::size_t n_cells = space.mesh.n_cells();
  const QuadratureRule rule = cell_rule(space.mesh.dim, space.degree);
  const auto table = space.element.tabulate(rule);

  std::vector<double> blocks(n_cells * static_cast<std::size_t>(p) * (2 * p + 2));
  std::atomic<long> bad_cell{-1};
#pragma omp parallel for schedule(static)
  for (long c = 0; c < static_cast<long>(n_cells); ++c) {
    if (bad_cell.load(std::memory_order_relaxed) >= 0) continue;
    if (!cell_kernel(problem, space, rule, table, static_cast<std::size_t>(c),
                     block_view(blocks, static_cast<std::size_t>(c), p))) {
      bad_cell.store(c, std::memory_order_relaxed);
    }
  }
  if (bad_cell.load() >= 0) {
    throw AssemblyFailure("assemble_forms: non-finite coefficient in cell " +
                          std::to_string(bad_cell.load()));
  }
  return gather(space, blocks);
}

AssembledForms assemble_forms_serial(const ProblemSpec& problem, const FeSpace& space) {
  const int p = space.dofs_per_cell();
  const std::size_t n_cells = space.mesh.n_cells();
  const QuadratureRule rule = cell_rule(space.mesh.dim, space.degree);
  const auto table = space.element.tabulate(rule);

  std::vector<double> blocks(n_cells * static_cast<std::size_t>(p) * (2 * p + 2));
  for (std::size_t c = 0; c < n_cells; ++c) {
    if (!cell_kernel(problem, space, rule, table, c, block_view(blocks, c, p))) {
      throw AssemblyFailure("assemble_forms_serial: non-finite coefficient in cell " +
                            std::to_string(c));
    }
  }
  return gather(space, blocks);
}

LinearSystem combine(const AssembledForms& forms, const ProblemSpec& problem,
                     const FeSpace& space, double tau) {
  const int n = forms.n_dofs;
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(forms.galerkin.size() + forms.supg.size() + n);
  const auto& constrained = space.boundary_dof_flags;
  for (const auto& t : forms.galerkin) {
    if (!constrained[t.row()]) triplets.push_back(t);
  }
  if (tau != 0.0) {
    for (const auto& t : forms.supg) {
      if (!constrained[t.row()]) {
        triplets.emplace_back(t.row(), t.col(), tau * t.value());
      }
    }
  }
  LinearSystem system;
  system.rhs = forms.rhs_galerkin + tau * forms.rhs_supg;
  for (int i = 0; i < n; ++i) {
    if (constrained[i]) {
      triplets.emplace_back(i, i, 1.0);
      Point x;
      x[0] = space.dof_coords[i][0];
      x[1] = space.dof_coords[i][1];
      system.rhs[i] = problem.dirichlet(x);
    }
  }
  system.matrix.resize(n, n);
  system.matrix.setFromTriplets(triplets.begin(), triplets.end());
  return system;
}

LinearSystem assemble_supg(const ProblemSpec& problem, const FeSpace& space,
                           double tau) {
  if (tau < 0.0 || !std::isfinite(tau)) {
    throw std::invalid_argument("assemble_supg: tau must be finite and >= 0");
  }
  return combine(assemble_forms(problem, space), problem, space, tau);
}

LinearSystem assemble_supg_serial(const ProblemSpec& problem, const FeSpace& space,
                                  double tau) {
  if (tau < 0.0 || !std::isfinite(tau)) {
    throw std::invalid_argument("assemble_supg_serial: tau must be finite and >= 0");
  }
  return combine(assemble_forms_serial(problem, space), problem, space, tau);
}

}  // namespace supg
