#include "slfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "json.hpp"

namespace slfem {

namespace {

using nlohmann::json;

constexpr double kFormulaTol = 1e-12;  // node-placement formula tolerance
constexpr double kOnArcTol = 1e-10;    // vertex-on-circle tolerance

std::string el_tag(int e) { return "element " + std::to_string(e); }

}  // namespace

int Mesh::n_boundary_nodes() const {
  return static_cast<int>(
      std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.marker.has_value(); }));
}

std::array<Point2, kNodesPerElement> Mesh::element_coords(int e) const {
  if (e < 0 || e >= n_elements()) {
    throw ContractError("element index " + std::to_string(e) + " out of range");
  }
  std::array<Point2, kNodesPerElement> out;
  for (int i = 0; i < kNodesPerElement; ++i) {
    const int id = elements[e].nodes[i];
    if (id < 0 || id >= n_dof()) {
      throw ContractError(el_tag(e) + " references node id " + std::to_string(id) +
                          " outside [0, " + std::to_string(n_dof()) + ")");
    }
    out[i] = nodes[id].coords;
  }
  return out;
}

ElementMap Mesh::element_map(int e) const {
  const auto t = element_coords(e);
  return ElementMap(t[0], t[1], t[2], t[3], t[4]);
}

std::pair<Point2, Point2> place_curved_edge_nodes(const Point2& t1, const Point2& t2,
                                                  const std::optional<CurvedEdge>& edge) {
  Point2 t4;
  if (edge) {
    if (edge->radius <= 0.0) {
      throw GeometryError("curved edge radius must be positive");
    }
    for (const Point2& v : {t1, t2}) {
      const double off = std::abs(distance(v, edge->center) - edge->radius);
      if (off > kOnArcTol) {
        throw GeometryError("curved-edge vertex off the circle by " + std::to_string(off));
      }
    }
    const Arc arc{edge->center, edge->radius, 0.0, 0.0, edge->orientation};
    const double a1 = angle_on_circle(arc, t1);
    const double a2 = angle_on_circle(arc, t2);
    const double travel = angular_travel(a1, a2, edge->orientation);
    const double sign = (edge->orientation == Orientation::ccw) ? 1.0 : -1.0;
    t4 = point_at_angle(arc, a1 + sign * travel / 3.0);
  } else {
    t4 = t1 + (1.0 / 3.0) * (t2 - t1);
  }
  // t5 = t4 - (1/3)(t1 - t2); reduces to the 2/3 chord point when straight.
  return {t4, t4 + (1.0 / 3.0) * (t2 - t1)};
}

Point2 interior_node(const Point2& t1, const Point2& t2, const Point2& t3,
                     const Point2& t4, const Point2& t5) {
  return (1.0 / 12.0) * (t1 + t2 + 4.0 * t3 + 3.0 * t4 + 3.0 * t5);
}

ValidationReport validate_mesh(const Mesh& mesh) {
  ValidationReport rep;
  auto add = [&rep](int e, std::string what) { rep.issues.push_back({e, std::move(what)}); };

  const int n = mesh.n_dof();
  for (int i = 0; i < n; ++i) {
    if (mesh.nodes[i].id != i) {
      add(-1, "node at position " + std::to_string(i) + " carries id " +
                  std::to_string(mesh.nodes[i].id));
    }
  }

  const QuadratureRule& rule = quadrature_rule(8);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const CurvedTriangle10& el = mesh.elements[e];

    bool ids_ok = true;
    std::set<int> uniq;
    for (int id : el.nodes) {
      if (id < 0 || id >= n) {
        add(e, "node id " + std::to_string(id) + " out of range");
        ids_ok = false;
      } else {
        uniq.insert(id);
      }
    }
    if (ids_ok && static_cast<int>(uniq.size()) != kNodesPerElement) {
      add(e, "repeated node ids");
      ids_ok = false;
    }
    if (!ids_ok) continue;

    const auto t = mesh.element_coords(e);
    auto near = [](Point2 a, Point2 b, double tol) {
      return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
    };

    // Straight sides carry exact thirds nodes.
    const auto check_thirds = [&](Point2 a, Point2 b, Point2 pa, Point2 pb, const char* side) {
      if (!near(pa, a + (1.0 / 3.0) * (b - a), kFormulaTol) ||
          !near(pb, a + (2.0 / 3.0) * (b - a), kFormulaTol)) {
        add(e, std::string("side ") + side + " nodes off the exact thirds");
      }
    };
    check_thirds(t[1], t[2], t[5], t[6], "2-3");
    check_thirds(t[2], t[0], t[7], t[8], "3-1");
    if (el.curved_edge) {
      const CurvedEdge& ce = *el.curved_edge;
      if (ce.radius <= 0.0) {
        add(e, "curved edge radius not positive");
      } else {
        for (int slot : {0, 1, 3}) {
          if (std::abs(distance(t[slot], ce.center) - ce.radius) > kOnArcTol) {
            add(e, "curved-edge node t" + std::to_string(slot + 1) + " off the circle");
          }
        }
      }
      if (!near(t[4], t[3] + (1.0 / 3.0) * (t[1] - t[0]), kFormulaTol)) {
        add(e, "t5 violates t5 = t4 - (1/3)(t1 - t2)");
      }
    } else {
      check_thirds(t[0], t[1], t[3], t[4], "1-2");
    }
    if (!near(t[9], interior_node(t[0], t[1], t[2], t[3], t[4]), kFormulaTol)) {
      add(e, "interior node t10 violates its placement formula");
    }

    const ElementMap map = mesh.element_map(e);
    for (size_t q = 0; q < rule.points.size(); ++q) {
      const double det = map.jacobian_det_unchecked(rule.points[q]);
      if (!(det > 0.0)) {
        add(e, "non-positive Jacobian determinant " + std::to_string(det) +
                   " at quadrature point " + std::to_string(q));
        break;
      }
    }
  }

  // Edge conformity: interior edges in exactly two elements, mirrored.
  struct EdgeUse {
    int e, a, b, pa, pb;  // ordered vertices a->b, thirds pa (near a), pb
  };
  std::map<std::pair<int, int>, std::vector<EdgeUse>> edges;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const auto& nd = mesh.elements[e].nodes;
    const EdgeUse uses[3] = {
        {e, nd[0], nd[1], nd[3], nd[4]},
        {e, nd[1], nd[2], nd[5], nd[6]},
        {e, nd[2], nd[0], nd[7], nd[8]},
    };
    for (const EdgeUse& u : uses) {
      edges[std::minmax(u.a, u.b)].push_back(u);
    }
  }
  for (const auto& [key, uses] : edges) {
    if (uses.size() > 2) {
      add(-1, "edge {" + std::to_string(key.first) + "," + std::to_string(key.second) +
                  "} shared by " + std::to_string(uses.size()) + " elements");
      continue;
    }
    if (uses.size() == 2) {
      const EdgeUse& u = uses[0];
      const EdgeUse& v = uses[1];
      if (u.a != v.b || u.b != v.a) {
        add(-1, "elements " + std::to_string(u.e) + " and " + std::to_string(v.e) +
                    " traverse a shared edge in the same direction");
      } else if (u.pa != v.pb || u.pb != v.pa) {
        add(-1, "elements " + std::to_string(u.e) + " and " + std::to_string(v.e) +
                    " disagree on shared-edge nodes");
      }
    }
  }

  // Boundary groups cover exactly the marked nodes.
  std::set<int> grouped;
  for (const auto& [label, ids] : mesh.boundary_groups) {
    for (int id : ids) {
      if (id < 0 || id >= n) {
        add(-1, "boundary group '" + label + "' references invalid node " + std::to_string(id));
      } else {
        grouped.insert(id);
        if (!mesh.nodes[id].marker) {
          add(-1, "boundary group '" + label + "' contains unmarked node " + std::to_string(id));
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (mesh.nodes[i].marker && !grouped.count(i)) {
      add(-1, "marked node " + std::to_string(i) + " ('" + *mesh.nodes[i].marker +
                  "') missing from boundary_groups");
    }
  }

  return rep;
}

namespace {

const json& require_field(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(ctx + ": missing field '" + key + "'");
  }
  return j.at(key);
}

double require_number(const json& j, const char* key, const std::string& ctx) {
  const json& v = require_field(j, key, ctx);
  if (!v.is_number()) throw ParseError(ctx + ": field '" + key + "' must be a number");
  return v.get<double>();
}

int require_int(const json& j, const char* key, const std::string& ctx) {
  const json& v = require_field(j, key, ctx);
  if (!v.is_number_integer()) throw ParseError(ctx + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

std::optional<CurvedEdge> parse_curved_edge(const json& je, const std::string& ctx) {
  if (!je.contains("curved_edge") || je.at("curved_edge").is_null()) return std::nullopt;
  const json& jc = je.at("curved_edge");
  if (!jc.is_object() || !jc.contains("center") || !jc.contains("radius") ||
      !jc.contains("orientation")) {
    throw ParseError(ctx + ": curved edge requires arc (center, radius, orientation)");
  }
  const json& jcen = jc.at("center");
  if (!jcen.is_array() || jcen.size() != 2 || !jcen[0].is_number() || !jcen[1].is_number()) {
    throw ParseError(ctx + ": curved-edge center must be [x, y]");
  }
  CurvedEdge ce;
  ce.center = {jcen[0].get<double>(), jcen[1].get<double>()};
  ce.radius = require_number(jc, "radius", ctx);
  if (ce.radius <= 0.0) throw ParseError(ctx + ": curved-edge radius must be positive");
  const json& jo = jc.at("orientation");
  if (jo == "ccw") {
    ce.orientation = Orientation::ccw;
  } else if (jo == "cw") {
    ce.orientation = Orientation::cw;
  } else {
    throw ParseError(ctx + ": curved-edge orientation must be \"ccw\" or \"cw\"");
  }
  return ce;
}

}  // namespace

Mesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mesh file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& ex) {
    throw ParseError("malformed mesh file '" + path + "': " + ex.what());
  }

  Mesh mesh;
  const json& jnodes = require_field(j, "nodes", "mesh file");
  if (!jnodes.is_array()) throw ParseError("mesh file: 'nodes' must be an array");
  std::set<int> seen_ids;
  for (size_t i = 0; i < jnodes.size(); ++i) {
    const std::string ctx = "node entry " + std::to_string(i);
    const json& jn = jnodes[i];
    Node node;
    node.id = require_int(jn, "id", ctx);
    node.coords = {require_number(jn, "x", ctx), require_number(jn, "y", ctx)};
    if (jn.contains("marker") && !jn.at("marker").is_null()) {
      if (!jn.at("marker").is_string()) throw ParseError(ctx + ": marker must be a string or null");
      node.marker = jn.at("marker").get<std::string>();
    }
    if (node.id < 0) throw ParseError(ctx + ": negative node id");
    if (!seen_ids.insert(node.id).second) {
      throw ParseError(ctx + ": duplicate node id " + std::to_string(node.id));
    }
    mesh.nodes.push_back(std::move(node));
  }

  const int n = mesh.n_dof();
  const json& jelems = require_field(j, "elements", "mesh file");
  if (!jelems.is_array()) throw ParseError("mesh file: 'elements' must be an array");
  for (size_t i = 0; i < jelems.size(); ++i) {
    const json& je = jelems[i];
    const int eid = (je.is_object() && je.contains("id") && je.at("id").is_number_integer())
                        ? je.at("id").get<int>()
                        : static_cast<int>(i);
    const std::string ctx = el_tag(eid);
    const json& jn = require_field(je, "nodes", ctx);
    if (!jn.is_array() || jn.size() != static_cast<size_t>(kNodesPerElement)) {
      throw ParseError(ctx + ": expected " + std::to_string(kNodesPerElement) + " node ids");
    }
    CurvedTriangle10 el;
    for (int k = 0; k < kNodesPerElement; ++k) {
      if (!jn[k].is_number_integer()) throw ParseError(ctx + ": node ids must be integers");
      const int id = jn[k].get<int>();
      if (!seen_ids.count(id)) {
        throw ParseError(ctx + " references missing node " + std::to_string(id));
      }
      el.nodes[k] = id;
    }
    el.curved_edge = parse_curved_edge(je, ctx);
    mesh.elements.push_back(std::move(el));
  }

  // With unique non-negative ids, count n and max id < n imply 0..n-1.
  if (!seen_ids.empty() && *seen_ids.rbegin() != n - 1) {
    throw ParseError("node ids not contiguous from 0 (max id " +
                     std::to_string(*seen_ids.rbegin()) + " for " + std::to_string(n) + " nodes)");
  }
  std::sort(mesh.nodes.begin(), mesh.nodes.end(),
            [](const Node& a, const Node& b) { return a.id < b.id; });

  if (j.contains("boundary_groups")) {
    const json& jg = j.at("boundary_groups");
    if (!jg.is_object()) throw ParseError("mesh file: 'boundary_groups' must be an object");
    for (const auto& [label, jids] : jg.items()) {
      const std::string ctx = "boundary group '" + label + "'";
      if (!jids.is_array()) throw ParseError(ctx + ": must be an array of node ids");
      std::vector<int> ids;
      for (const json& v : jids) {
        if (!v.is_number_integer()) throw ParseError(ctx + ": node ids must be integers");
        const int id = v.get<int>();
        if (id < 0 || id >= n) {
          throw ParseError(ctx + " references missing node " + std::to_string(id));
        }
        ids.push_back(id);
      }
      mesh.boundary_groups.emplace(label, std::move(ids));
    }
  }
  return mesh;
}

void write_mesh(const Mesh& mesh, const std::string& path) {
  json j;
  j["nodes"] = json::array();
  for (const Node& node : mesh.nodes) {
    json jn{{"id", node.id}, {"x", node.coords.x}, {"y", node.coords.y}};
    jn["marker"] = node.marker ? json(*node.marker) : json(nullptr);
    j["nodes"].push_back(std::move(jn));
  }
  j["elements"] = json::array();
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const CurvedTriangle10& el = mesh.elements[e];
    json je{{"id", e}, {"nodes", el.nodes}};
    if (el.curved_edge) {
      je["curved_edge"] = {
          {"center", {el.curved_edge->center.x, el.curved_edge->center.y}},
          {"radius", el.curved_edge->radius},
          {"orientation", el.curved_edge->orientation == Orientation::ccw ? "ccw" : "cw"},
      };
    } else {
      je["curved_edge"] = nullptr;
    }
    j["elements"].push_back(std::move(je));
  }
  j["boundary_groups"] = json::object();
  for (const auto& [label, ids] : mesh.boundary_groups) {
    j["boundary_groups"][label] = ids;
  }

  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << j.dump(1, '\t') << '\n';
  if (!out) throw ConfigError("failed writing mesh file '" + path + "'");
}

}  // namespace slfem
