#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "slfem/errors.hpp"
#include "slfem/mesh.hpp"
#include "slfem/mesh_generator.hpp"

using namespace slfem;

namespace {

CurvedEdge unit_circle_ccw() { return {{0, 0}, 1.0, Orientation::ccw}; }

std::string write_temp(const std::string& name, const std::string& content) {
  std::ofstream out(name);
  out << content;
  return name;
}

}  // namespace

TEST_CASE("curved edge nodes on the unit quarter circle") {
  const auto [t4, t5] = place_curved_edge_nodes({1, 0}, {0, 1}, unit_circle_ccw());
  CHECK(std::abs(t4.x - 0.866025) <= 1e-6);
  CHECK(std::abs(t4.y - 0.5) <= 1e-6);
  CHECK(std::abs(t5.x - 0.532692) <= 1e-6);
  CHECK(std::abs(t5.y - 0.833333) <= 1e-6);
  // t4 sits on the circle; t5 (parabolic construction) does not.
  CHECK(std::abs(norm(t4) - 1.0) <= 1e-12);
  CHECK(norm(t5) == doctest::Approx(0.989043).epsilon(1e-5));
  // t5 = t4 - (1/3)(t1 - t2), componentwise.
  CHECK(std::abs(t5.x - (t4.x - 1.0 / 3)) <= 1e-15);
  CHECK(std::abs(t5.y - (t4.y + 1.0 / 3)) <= 1e-15);
}

TEST_CASE("straight edges reduce to exact thirds") {
  const Point2 t1{0.2, -1.0};
  const Point2 t2{1.4, 2.6};
  const auto [t4, t5] = place_curved_edge_nodes(t1, t2, std::nullopt);
  CHECK(std::abs(t4.x - (t1.x + (t2.x - t1.x) / 3)) <= 1e-15);
  CHECK(std::abs(t4.y - (t1.y + (t2.y - t1.y) / 3)) <= 1e-15);
  CHECK(std::abs(t5.x - (t1.x + 2 * (t2.x - t1.x) / 3)) <= 1e-15);
  CHECK(std::abs(t5.y - (t1.y + 2 * (t2.y - t1.y) / 3)) <= 1e-15);
}

TEST_CASE("cw orientation travels the short way around the other side") {
  // From (1,0) to (0,1) clockwise the travel is 3pi/2; t4 is a third of
  // the way at angle -pi/2, i.e. (0,-1)-side of the circle.
  const auto [t4, t5] = place_curved_edge_nodes({1, 0}, {0, 1}, CurvedEdge{{0, 0}, 1.0, Orientation::cw});
  (void)t5;
  CHECK(t4.y < 0.0);
  CHECK(std::abs(norm(t4) - 1.0) <= 1e-12);
}

TEST_CASE("endpoint off the arc is a geometry error") {
  CHECK_THROWS_AS(place_curved_edge_nodes({1.1, 0}, {0, 1}, unit_circle_ccw()), GeometryError);
  CHECK_THROWS_AS(place_curved_edge_nodes({1, 0}, {0, 1.001}, unit_circle_ccw()), GeometryError);
}

TEST_CASE("interior node formula") {
  SUBCASE("quarter-circle numbers") {
    const Point2 t10 = interior_node({1, 0}, {0, 1}, {0, 0}, {0.866025, 0.5}, {0.532692, 0.833333});
    CHECK(std::abs(t10.x - 0.433013) <= 1e-5);
    CHECK(std::abs(t10.y - 0.416667) <= 1e-5);
  }
  SUBCASE("straight triangle gives the centroid") {
    const Point2 t1{2, 0.5};
    const Point2 t2{-1, 1};
    const Point2 t3{0.4, -2};
    const auto [t4, t5] = place_curved_edge_nodes(t1, t2, std::nullopt);
    const Point2 t10 = interior_node(t1, t2, t3, t4, t5);
    CHECK(std::abs(t10.x - (t1.x + t2.x + t3.x) / 3) <= 1e-14);
    CHECK(std::abs(t10.y - (t1.y + t2.y + t3.y) / 3) <= 1e-14);
  }
  SUBCASE("all inputs equal") {
    const Point2 p{0.7, -0.3};
    const Point2 t10 = interior_node(p, p, p, p, p);
    CHECK(t10.x == doctest::Approx(p.x).epsilon(1e-15));
    CHECK(t10.y == doctest::Approx(p.y).epsilon(1e-15));
  }
}

TEST_CASE("validate_mesh accepts generated square meshes") {
  for (int n : {8, 16, 32}) {
    const Mesh mesh = generate_square_mesh(n);
    const ValidationReport report = validate_mesh(mesh);
    CHECK(report.ok());
  }
}

TEST_CASE("validate_mesh flags a perturbed interior node") {
  Mesh mesh = generate_square_mesh(8);
  const int victim = 3;
  const int t10_id = mesh.elements[victim].nodes[9];
  mesh.nodes[static_cast<std::size_t>(t10_id)].coords.x += 1e-3;
  const ValidationReport report = validate_mesh(mesh);
  REQUIRE(!report.ok());
  bool flagged = false;
  for (const ValidationIssue& issue : report.issues) {
    if (issue.element == victim && issue.what.find("interior") != std::string::npos) {
      flagged = true;
    }
  }
  CHECK(flagged);
}

TEST_CASE("validate_mesh flags clockwise elements") {
  // Swapping t1 and t2 flips the orientation; rebuild the edge nodes so
  // only the inverted Jacobian is at fault.
  Mesh mesh = fixtures::single_element({0, 1}, {1, 0}, {0, 0});
  const ValidationReport report = validate_mesh(mesh);
  REQUIRE(!report.ok());
  bool flagged = false;
  for (const ValidationIssue& issue : report.issues) {
    if (issue.what.find("Jacobian") != std::string::npos) {
      flagged = true;
    }
  }
  CHECK(flagged);
}

TEST_CASE("validate_mesh flags a broken t5 and marker inconsistencies") {
  SUBCASE("t5 formula violation") {
    Mesh mesh = fixtures::identity_mesh();
    mesh.nodes[4].coords.x += 1e-6;
    const ValidationReport report = validate_mesh(mesh);
    CHECK(!report.ok());
  }
  SUBCASE("orphan marker") {
    Mesh mesh = fixtures::identity_mesh();
    mesh.nodes[0].marker = "Gamma1";  // marked but in no group
    const ValidationReport report = validate_mesh(mesh);
    CHECK(!report.ok());
  }
  SUBCASE("group member without marker") {
    Mesh mesh = fixtures::identity_mesh();
    mesh.boundary_groups["Gamma1"] = {0};
    const ValidationReport report = validate_mesh(mesh);
    CHECK(!report.ok());
  }
}

TEST_CASE("mesh JSON round-trip is field-identical") {
  const Mesh mesh = generate_square_mesh(8);
  write_mesh(mesh, "roundtrip_square8.json");
  const Mesh back = read_mesh("roundtrip_square8.json");

  REQUIRE(back.nodes.size() == mesh.nodes.size());
  REQUIRE(back.elements.size() == mesh.elements.size());
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    CHECK(back.nodes[i].id == mesh.nodes[i].id);
    CHECK(back.nodes[i].coords.x == mesh.nodes[i].coords.x);
    CHECK(back.nodes[i].coords.y == mesh.nodes[i].coords.y);
    CHECK(back.nodes[i].marker == mesh.nodes[i].marker);
  }
  for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
    CHECK(back.elements[e].nodes == mesh.elements[e].nodes);
    CHECK(back.elements[e].curved_edge.has_value() == mesh.elements[e].curved_edge.has_value());
  }
  CHECK(back.boundary_groups == mesh.boundary_groups);
}

TEST_CASE("curved mesh JSON round-trip preserves arcs") {
  // Hole-style element: vertices ccw, circle boundary traversed cw.
  Mesh mesh = fixtures::single_element({0, 1}, {1, 0}, {1.8, 1.8},
                                       CurvedEdge{{0, 0}, 1.0, Orientation::cw});
  write_mesh(mesh, "roundtrip_curved.json");
  const Mesh back = read_mesh("roundtrip_curved.json");
  REQUIRE(back.elements.size() == 1);
  REQUIRE(back.elements[0].curved_edge.has_value());
  const CurvedEdge& edge = *back.elements[0].curved_edge;
  CHECK(edge.center.x == 0.0);
  CHECK(edge.center.y == 0.0);
  CHECK(edge.radius == 1.0);
  CHECK(edge.orientation == Orientation::cw);
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    CHECK(back.nodes[i].coords.x == mesh.nodes[i].coords.x);
    CHECK(back.nodes[i].coords.y == mesh.nodes[i].coords.y);
  }
}

TEST_CASE("read_mesh reports missing node references naming the element") {
  const std::string path = write_temp("bad_missing_node.json", R"({
    "nodes": [
      {"id": 0, "x": 0.0, "y": 0.0, "marker": null}
    ],
    "elements": [
      {"id": 0, "nodes": [0, 1, 2, 3, 4, 5, 6, 7, 8, 9], "curved_edge": null}
    ],
    "boundary_groups": {}
  })");
  try {
    read_mesh(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("element 0") != std::string::npos);
    CHECK(what.find("missing node") != std::string::npos);
  }
}

TEST_CASE("read_mesh rejects a curved edge without arc data") {
  const Mesh mesh = fixtures::single_element({0, 1}, {1, 0}, {1.8, 1.8},
                                             CurvedEdge{{0, 0}, 1.0, Orientation::cw});
  write_mesh(mesh, "curved_for_break.json");

  // Rewrite the arc object as an empty object: still "curved", no arc.
  std::ifstream in("curved_for_break.json");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  const auto pos = text.find("\"curved_edge\"");
  REQUIRE(pos != std::string::npos);
  const auto brace = text.find('{', pos);
  const auto end = text.find('}', brace);
  REQUIRE(brace != std::string::npos);
  text.replace(brace, end - brace + 1, "{}");
  const std::string path = write_temp("bad_curved_edge.json", text);

  try {
    read_mesh(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("curved edge requires arc") != std::string::npos);
  }
}

TEST_CASE("read_mesh rejects malformed JSON") {
  const std::string path = write_temp("bad_syntax.json", "{ not json ");
  CHECK_THROWS_AS(read_mesh(path), ParseError);
  CHECK_THROWS_AS(read_mesh("does_not_exist_anywhere.json"), ParseError);
}
