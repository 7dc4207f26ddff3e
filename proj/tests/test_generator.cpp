#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "slfem/errors.hpp"
#include "slfem/mesh_generator.hpp"

using namespace slfem;

namespace {

bool within_percent(int value, int reference, double percent) {
  return std::abs(value - reference) <= percent / 100.0 * reference;
}

// Max radial deviation from the unit circle of the mapped curved edge for
// a chord subtending `theta`, sampled densely.  The edge curve
// t1 s + t2 (1-s) + c s(1-s) is independent of the third vertex.
double edge_deviation(double theta) {
  const Point2 t1{1, 0};
  const Point2 t2{std::cos(theta), std::sin(theta)};
  const auto [t4, t5] = place_curved_edge_nodes(t1, t2, CurvedEdge{{0, 0}, 1.0, Orientation::ccw});
  const Point2 c = 2.25 * ((t4 + t5) - (t1 + t2));
  double worst = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double s = k / 100.0;
    const Point2 p = s * t1 + (1.0 - s) * t2 + (s * (1.0 - s)) * c;
    worst = std::max(worst, std::abs(norm(p) - 1.0));
  }
  return worst;
}

}  // namespace

TEST_CASE("square meshes match the published counts") {
  struct Row {
    int elements, dof, boundary;
  };
  const Row expected[] = {{8, 49, 24}, {16, 85, 24}, {32, 169, 48}};
  for (const Row& row : expected) {
    const Mesh mesh = generate_square_mesh(row.elements);
    CHECK(mesh.n_elements() == row.elements);
    CHECK(mesh.n_dof() == row.dof);
    CHECK(mesh.n_boundary_nodes() == row.boundary);
    for (const CurvedTriangle10& element : mesh.elements) {
      CHECK(!element.curved_edge.has_value());
    }
  }
}

TEST_CASE("square meshes: straight elements have constant Jacobians") {
  const Mesh mesh = generate_square_mesh(16);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const ElementMap map = mesh.element_map(e);
    const double d0 = map.jacobian({0.1, 0.1}).det;
    const double d1 = map.jacobian({0.7, 0.2}).det;
    const double d2 = map.jacobian({0.2, 0.6}).det;
    CHECK(d0 > 0.0);
    CHECK(std::abs(d0 - d1) <= 1e-12);
    CHECK(std::abs(d0 - d2) <= 1e-12);
  }
}

TEST_CASE("square mesh boundary groups trace the four sides") {
  const Mesh mesh = generate_square_mesh(8);
  REQUIRE(mesh.boundary_groups.count("Gamma_D1") == 1);
  REQUIRE(mesh.boundary_groups.count("Gamma_D2") == 1);
  REQUIRE(mesh.boundary_groups.count("Gamma_D3") == 1);
  REQUIRE(mesh.boundary_groups.count("Gamma_D4") == 1);
  for (int id : mesh.boundary_groups.at("Gamma_D1")) {
    CHECK(mesh.nodes[static_cast<std::size_t>(id)].coords.x == 0.0);
  }
  for (int id : mesh.boundary_groups.at("Gamma_D2")) {
    CHECK(mesh.nodes[static_cast<std::size_t>(id)].coords.x == 1.0);
  }
  for (int id : mesh.boundary_groups.at("Gamma_D3")) {
    CHECK(mesh.nodes[static_cast<std::size_t>(id)].coords.y == 0.0);
  }
  for (int id : mesh.boundary_groups.at("Gamma_D4")) {
    CHECK(mesh.nodes[static_cast<std::size_t>(id)].coords.y == 1.0);
  }
  CHECK(mesh.boundary_groups.at("Gamma_D1").size() == 7);
  CHECK(mesh.boundary_groups.at("Gamma_D3").size() == 7);
}

TEST_CASE("unsupported square element counts are rejected") {
  CHECK_THROWS_AS(generate_square_mesh(7), ConfigError);
  CHECK_THROWS_AS(generate_square_mesh(0), ConfigError);
  CHECK_THROWS_AS(generate_square_mesh(64), ConfigError);
}

TEST_CASE("v-notch mesh: counts, labels, and the apex node") {
  const DomainSpec spec = DomainSpec::vnotch();
  const Mesh mesh = generate_vnotch_mesh(spec, spec.target_h);

  CHECK(within_percent(mesh.n_elements(), 1038, 20.0));
  CHECK(within_percent(mesh.n_dof(), 4843, 20.0));

  for (int s = 1; s <= 7; ++s) {
    const std::string label = "Gamma" + std::to_string(s);
    REQUIRE(mesh.boundary_groups.count(label) == 1);
    CHECK(!mesh.boundary_groups.at(label).empty());
  }

  // The re-entrant corner exists exactly once and belongs to both flanks.
  const Point2 apex = spec.notch->apex;
  int apex_id = -1;
  int apex_hits = 0;
  for (const Node& node : mesh.nodes) {
    if (std::abs(node.coords.x - apex.x) <= 1e-12 && std::abs(node.coords.y - apex.y) <= 1e-12) {
      apex_id = node.id;
      ++apex_hits;
    }
  }
  REQUIRE(apex_hits == 1);
  const auto& g6 = mesh.boundary_groups.at("Gamma6");
  const auto& g7 = mesh.boundary_groups.at("Gamma7");
  CHECK(std::count(g6.begin(), g6.end(), apex_id) == 1);
  CHECK(std::count(g7.begin(), g7.end(), apex_id) == 1);
}

TEST_CASE("v-notch mesh is deterministic") {
  const DomainSpec spec = DomainSpec::vnotch();
  const Mesh a = generate_vnotch_mesh(spec, 0.08);
  const Mesh b = generate_vnotch_mesh(spec, 0.08);
  REQUIRE(a.n_dof() == b.n_dof());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    CHECK(a.nodes[i].coords.x == b.nodes[i].coords.x);
    CHECK(a.nodes[i].coords.y == b.nodes[i].coords.y);
  }
}

TEST_CASE("halving h roughly quadruples the element count") {
  const DomainSpec spec = DomainSpec::vnotch();
  const Mesh coarse = generate_vnotch_mesh(spec, 0.09);
  const Mesh fine = generate_vnotch_mesh(spec, 0.045);
  const double factor = static_cast<double>(fine.n_elements()) / coarse.n_elements();
  CHECK(factor >= 3.0);
  CHECK(factor <= 5.0);
}

TEST_CASE("degenerate notch and misused variants are rejected") {
  DomainSpec spec = DomainSpec::vnotch();
  spec.notch->half_angle = 0.0;
  CHECK_THROWS_AS(generate_vnotch_mesh(spec, 0.05), GeometryError);

  CHECK_THROWS_AS(generate_vnotch_mesh(DomainSpec::square(), 0.05), ConfigError);
  CHECK_THROWS_AS(generate_vnotch_inclusions_mesh(DomainSpec::vnotch(), 0.05), ConfigError);
}

TEST_CASE("overlapping or boundary-crossing inclusions are geometry errors") {
  DomainSpec crossing = DomainSpec::vnotch_inclusions();
  crossing.inclusions[0].center = {0.03, 0.5};  // sticks out of the left wall
  CHECK_THROWS_AS(generate_vnotch_inclusions_mesh(crossing, crossing.target_h), GeometryError);

  DomainSpec overlapping = DomainSpec::vnotch_inclusions();
  overlapping.inclusions[1].center = overlapping.inclusions[0].center + Point2{0.05, 0.0};
  CHECK_THROWS_AS(generate_vnotch_inclusions_mesh(overlapping, overlapping.target_h),
                  GeometryError);
}

TEST_CASE("inclusions mesh: counts, curved ring, and hole emptiness") {
  const DomainSpec spec = DomainSpec::vnotch_inclusions();
  const Mesh mesh = generate_vnotch_inclusions_mesh(spec, spec.target_h);

  CHECK(within_percent(mesh.n_elements(), 836, 20.0));
  CHECK(within_percent(mesh.n_dof(), 4026, 20.0));

  int curved_count = 0;
  std::set<int> curved_t5_ids;
  for (const CurvedTriangle10& element : mesh.elements) {
    if (!element.curved_edge.has_value()) {
      continue;
    }
    ++curved_count;
    curved_t5_ids.insert(element.nodes[4]);
    const CurvedEdge& edge = *element.curved_edge;
    for (int slot : {0, 1, 3}) {
      const Point2 p = mesh.nodes[static_cast<std::size_t>(element.nodes[static_cast<std::size_t>(slot)])].coords;
      CHECK(std::abs(distance(p, edge.center) - edge.radius) <= 1e-12);
    }
  }
  // At least a full ring of >= 12 chords per inclusion.
  CHECK(curved_count >= 36);

  // No node intrudes into a hole; the t5 nodes of curved elements may dip
  // inside by the parabolic sagitta, bounded by r theta^3 for the largest
  // chord angle theta (subdivision keeps theta <= 2 pi / 12).
  const double theta_max = 2.0 * std::numbers::pi / 12.0;
  for (const Node& node : mesh.nodes) {
    for (const CircleSpec& circle : spec.inclusions) {
      const double d = distance(node.coords, circle.center);
      if (curved_t5_ids.count(node.id) == 1) {
        CHECK(d >= circle.radius - circle.radius * theta_max * theta_max * theta_max);
      } else {
        CHECK(d >= circle.radius - 1e-9);
      }
    }
  }

  CHECK(validate_mesh(mesh).ok());
}

TEST_CASE("mapped curved edges track their circles at cubic order") {
  const double dev_full = edge_deviation(std::numbers::pi / 3);
  const double dev_half = edge_deviation(std::numbers::pi / 6);
  CHECK(dev_full <= std::pow(std::numbers::pi / 3, 3));
  CHECK(dev_half * 6.0 <= dev_full);
}
