#include "supg/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace supg {

double Mesh::cell_measure(std::size_t cell) const {
  const auto& c = cells.at(cell);
  if (dim == 1) {
    return vertices[c[1]][0] - vertices[c[0]][0];
  }
  const auto& a = vertices[c[0]];
  const auto& b = vertices[c[1]];
  const auto& d = vertices[c[2]];
  return 0.5 * ((b[0] - a[0]) * (d[1] - a[1]) - (d[0] - a[0]) * (b[1] - a[1]));
}

Mesh build_interval_mesh(int n) {
  if (n < 1) throw std::invalid_argument("build_interval_mesh: n must be >= 1");
  Mesh mesh;
  mesh.dim = 1;
  mesh.n = n;
  mesh.h = 1.0 / n;
  mesh.vertices.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    mesh.vertices[i] = {static_cast<double>(i) / n, 0.0};
  }
  mesh.cells.resize(n);
  for (int i = 0; i < n; ++i) {
    mesh.cells[i] = {i, i + 1, -1};
  }
  mesh.boundary_vertex_flags.assign(n + 1, false);
  mesh.boundary_vertex_flags.front() = true;
  mesh.boundary_vertex_flags.back() = true;
  return mesh;
}

Mesh build_unit_square_mesh(int n) {
  if (n < 1) throw std::invalid_argument("build_unit_square_mesh: n must be >= 1");
  Mesh mesh;
  mesh.dim = 2;
  mesh.n = n;
  mesh.h = std::sqrt(2.0) / n;
  const int nv = n + 1;
  mesh.vertices.resize(static_cast<std::size_t>(nv) * nv);
  mesh.boundary_vertex_flags.assign(mesh.vertices.size(), false);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const int v = j * nv + i;
      mesh.vertices[v] = {static_cast<double>(i) / n, static_cast<double>(j) / n};
      if (i == 0 || i == n || j == 0 || j == n) mesh.boundary_vertex_flags[v] = true;
    }
  }
  // Each square split along the diagonal from its lower-left to its
  // upper-right corner; both triangles counterclockwise.
  mesh.cells.reserve(2 * static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int v00 = j * nv + i;
      const int v10 = v00 + 1;
      const int v01 = v00 + nv;
      const int v11 = v01 + 1;
      mesh.cells.push_back({v00, v10, v11});
      mesh.cells.push_back({v00, v11, v01});
    }
  }
  return mesh;
}

}  // namespace supg
