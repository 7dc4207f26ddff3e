#pragma once

// Small hand-built meshes shared across test suites.

#include <optional>
#include <string>
#include <vector>

#include "slfem/mesh.hpp"

namespace fixtures {

// One cubic triangle with vertices t1, t2, t3; edge 1-2 follows `edge` if
// given, every other side gets exact thirds.  Node ids follow the local
// slot order, so element.nodes is simply [0..9].
inline slfem::Mesh single_element(const slfem::Point2& t1, const slfem::Point2& t2,
                                  const slfem::Point2& t3,
                                  const std::optional<slfem::CurvedEdge>& edge = std::nullopt) {
  using slfem::Point2;
  const auto [t4, t5] = slfem::place_curved_edge_nodes(t1, t2, edge);
  const Point2 t6 = t2 + (1.0 / 3) * (t3 - t2);
  const Point2 t7 = t2 + (2.0 / 3) * (t3 - t2);
  const Point2 t8 = t3 + (1.0 / 3) * (t1 - t3);
  const Point2 t9 = t3 + (2.0 / 3) * (t1 - t3);
  const Point2 t10 = slfem::interior_node(t1, t2, t3, t4, t5);

  slfem::Mesh mesh;
  const Point2 coords[10] = {t1, t2, t3, t4, t5, t6, t7, t8, t9, t10};
  for (int i = 0; i < 10; ++i) {
    mesh.nodes.push_back({i, coords[i], std::nullopt});
  }
  slfem::CurvedTriangle10 element;
  for (int i = 0; i < 10; ++i) {
    element.nodes[static_cast<std::size_t>(i)] = i;
  }
  element.curved_edge = edge;
  mesh.elements.push_back(element);
  return mesh;
}

// Identity element: reference triangle embedded as-is.
inline slfem::Mesh identity_mesh() {
  return single_element({1, 0}, {0, 1}, {0, 0});
}

// Marks the nodes of edge 1-2 (slots 0, 1, 3, 4) with `label` so boundary
// integrals can address that side.
inline void mark_edge12(slfem::Mesh& mesh, const std::string& label) {
  for (int slot : {0, 1, 3, 4}) {
    mesh.nodes[static_cast<std::size_t>(slot)].marker = label;
    mesh.boundary_groups[label].push_back(slot);
  }
}

}  // namespace fixtures
