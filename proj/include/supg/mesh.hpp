#ifndef SUPG_MESH_HPP
#define SUPG_MESH_HPP

#include <array>
#include <vector>

namespace supg {

/// Structured mesh of the unit interval (intervals) or unit square
/// (triangles, consistent diagonal orientation).
struct Mesh {
  int dim = 1;
  /// Cells per side: 1D has n elements, 2D has n*n squares split in two.
  int n = 0;
  /// Vertex coordinates; 1D stores y = 0.
  std::vector<std::array<double, 2>> vertices;
  /// Vertex-index tuples, 2 per interval, 3 per triangle (counterclockwise).
  std::vector<std::array<int, 3>> cells;
  /// Characteristic element size: 1/n in 1D, sqrt(2)/n in 2D (longest edge).
  double h = 0.0;
  std::vector<bool> boundary_vertex_flags;

  int vertices_per_cell() const { return dim == 1 ? 2 : 3; }
  std::size_t n_cells() const { return cells.size(); }

  /// Length of an interval or area of a triangle.
  double cell_measure(std::size_t cell) const;
};

Mesh build_interval_mesh(int n);
Mesh build_unit_square_mesh(int n);

}  // namespace supg

#endif
