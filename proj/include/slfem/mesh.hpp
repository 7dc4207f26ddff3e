#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slfem/element.hpp"

namespace slfem {

struct Node {
  int id = 0;
  Point2 coords;
  std::optional<std::string> marker;  // boundary label; nullopt = interior
};

/// Supporting circle of a curved edge and the direction of travel along it
/// from local vertex 1 to local vertex 2.
struct CurvedEdge {
  Point2 center;
  double radius = 0.0;
  Orientation orientation = Orientation::ccw;
};

/// Ten-node cubic triangle.  Node slots follow the element ordering
/// [v1 v2 v3 | edge12 | edge23 | edge31 | interior]; only edge 1-2 may be
/// curved, so sides 2-3 and 3-1 are always straight.
struct CurvedTriangle10 {
  std::array<int, kNodesPerElement> nodes{};
  std::optional<CurvedEdge> curved_edge;
};

struct Mesh {
  std::vector<Node> nodes;
  std::vector<CurvedTriangle10> elements;
  std::map<std::string, std::vector<int>> boundary_groups;

  int n_dof() const { return static_cast<int>(nodes.size()); }
  int n_elements() const { return static_cast<int>(elements.size()); }
  int n_boundary_nodes() const;

  std::array<Point2, kNodesPerElement> element_coords(int e) const;
  ElementMap element_map(int e) const;
};

/// Nodes t4, t5 of edge 1-2.  With an arc, t4 sits on the circle at one
/// third of the angular travel from t1 to t2 and t5 = t4 - (1/3)(t1 - t2);
/// without one, both reduce to the exact thirds of the chord.
/// Throws GeometryError when t1 or t2 is off the given circle (1e-10).
std::pair<Point2, Point2> place_curved_edge_nodes(const Point2& t1, const Point2& t2,
                                                  const std::optional<CurvedEdge>& edge);

/// Interior node t10 = (1/12)(t1 + t2 + 4 t3 + 3 t4 + 3 t5).
Point2 interior_node(const Point2& t1, const Point2& t2, const Point2& t3,
                     const Point2& t4, const Point2& t5);

struct ValidationIssue {
  int element = -1;  // -1 for mesh-level findings
  std::string what;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks edge conformity, Jacobian positivity at all quadrature points,
/// the t4/t5/t10 node-placement formulas, and marker/group consistency.
/// An empty report means the mesh is valid.
ValidationReport validate_mesh(const Mesh& mesh);

Mesh read_mesh(const std::string& path);
void write_mesh(const Mesh& mesh, const std::string& path);

}  // namespace slfem
