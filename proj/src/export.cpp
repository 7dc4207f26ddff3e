#include "slfem/export.hpp"

#include <array>
#include <cstdio>
#include <fstream>

#include "slfem/errors.hpp"

namespace slfem {
namespace {

// Sub-triangulation of the 10-node triangle into 9 straight cells, in
// local (0-based) node slots.  Covers the element once, all cells ccw.
constexpr std::array<std::array<int, 3>, 9> kSubTriangles = {{
    {2, 7, 6},
    {7, 9, 6},
    {7, 8, 9},
    {8, 3, 9},
    {8, 0, 3},
    {6, 9, 5},
    {9, 4, 5},
    {9, 3, 4},
    {5, 4, 1},
}};

}  // namespace

void write_vtk(const Mesh& mesh, const CoefficientField& values, const std::string& path) {
  if (values.size() != mesh.nodes.size()) {
    throw ContractError("write_vtk: field length does not match mesh node count");
  }
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot open VTK file for writing: " + path);
  }

  const std::size_t n_points = mesh.nodes.size();
  const std::size_t n_cells = mesh.n_elements() * kSubTriangles.size();
  char buf[128];

  out << "# vtk DataFile Version 3.0\n";
  out << "strain-limiting anti-plane shear solution\n";
  out << "ASCII\n";
  out << "DATASET UNSTRUCTURED_GRID\n";

  out << "POINTS " << n_points << " double\n";
  for (const Node& node : mesh.nodes) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g 0\n", node.coords.x, node.coords.y);
    out << buf;
  }

  out << "CELLS " << n_cells << " " << n_cells * 4 << "\n";
  for (const CurvedTriangle10& element : mesh.elements) {
    for (const auto& tri : kSubTriangles) {
      out << "3 " << element.nodes[static_cast<std::size_t>(tri[0])] << " "
          << element.nodes[static_cast<std::size_t>(tri[1])] << " "
          << element.nodes[static_cast<std::size_t>(tri[2])] << "\n";
    }
  }

  out << "CELL_TYPES " << n_cells << "\n";
  for (std::size_t i = 0; i < n_cells; ++i) {
    out << "5\n";
  }

  out << "POINT_DATA " << n_points << "\n";
  out << "SCALARS phi double 1\n";
  out << "LOOKUP_TABLE default\n";
  for (double v : values) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", v);
    out << buf;
  }

  if (!out) {
    throw ConfigError("failed while writing VTK file: " + path);
  }
}

void write_trace_csv(const IterationTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot open trace file for writing: " + path);
  }
  out << "iter,max_diff\n";
  char buf[64];
  for (std::size_t k = 0; k < trace.diffs.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", k + 1, trace.diffs[k]);
    out << buf;
  }
  if (!out) {
    throw ConfigError("failed while writing trace file: " + path);
  }
}

}  // namespace slfem
