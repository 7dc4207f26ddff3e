#pragma once

#include <optional>
#include <vector>

#include "slfem/mesh.hpp"

namespace slfem {

/// Downward-pointing triangular notch cut into the unit square.  The apex
/// is the re-entrant corner; the mouth spans the bottom edge.
struct NotchSpec {
  Point2 apex;
  double half_angle = 0.0;  // half of the opening angle, in (0, pi/2)
  double depth = 0.0;       // apex-to-mouth distance; apex.y - depth must be 0
};

struct CircleSpec {
  Point2 center;
  double radius = 0.0;
};

enum class DomainVariant { unit_square, v_notch, v_notch_with_inclusions };

struct DomainSpec {
  DomainVariant variant = DomainVariant::unit_square;
  std::optional<NotchSpec> notch;
  std::vector<CircleSpec> inclusions;  // full circles, holes in the domain
  double target_h = 0.05;

  static DomainSpec square();
  static DomainSpec vnotch();
  static DomainSpec vnotch_inclusions();
};

/// Structured cubic meshes of [0,1]^2 with 8, 16, or 32 triangles
/// (2x2 diagonal, 2x2 criss-cross, 4x4 diagonal).  Boundary markers:
/// Gamma_D1 (x=0), Gamma_D2 (x=1), Gamma_D3 (y=0), Gamma_D4 (y=1).
/// Throws ConfigError for any other element count.
Mesh generate_square_mesh(int n_elements);

/// Unstructured cubic mesh of the notched square.  Boundary segments are
/// labeled Gamma1..Gamma7 counterclockwise from the right mouth corner:
/// bottom-right, right, top, left, bottom-left, then the two notch flanks.
Mesh generate_vnotch_mesh(const DomainSpec& spec, double target_h);

/// Notched square with circular holes; every element with an edge on a
/// circle becomes a curved triangle conforming to it.  Hole boundaries are
/// labeled inclusion0, inclusion1, ...
Mesh generate_vnotch_inclusions_mesh(const DomainSpec& spec, double target_h);

}  // namespace slfem
