#pragma once

#include <array>
#include <span>
#include <vector>

#include "slfem/geometry.hpp"

namespace slfem {

inline constexpr int kNodesPerElement = 10;

/// Point in the reference triangle with vertices (1,0), (0,1), (0,0).
struct RefPoint {
  double xi = 0.0;
  double eta = 0.0;
};

/// Gradient with respect to the reference coordinates.
struct RefGrad {
  double d_xi = 0.0;
  double d_eta = 0.0;
};

/// One monomial term of a shape function: (num/2) * xi^a * eta^b.
/// All ten cubic shape functions have half-integer coefficients, so the
/// table is exact and doubles as the input for rational spot checks.
struct ShapeTerm {
  int a;
  int b;
  int num;
};

/// Monomial terms of shape function i (i in [0, 10)).
std::span<const ShapeTerm> shape_terms(int i);

/// Reference coordinates of the ten nodes, in the element node ordering
/// [v1 v2 v3 | edge12: t4 t5 | edge23: t6 t7 | edge31: t8 t9 | t10].
const std::array<RefPoint, kNodesPerElement>& reference_nodes();

std::array<double, kNodesPerElement> shape_values(const RefPoint& p);
std::array<RefGrad, kNodesPerElement> shape_gradients(const RefPoint& p);

struct ShapeEval {
  std::array<double, kNodesPerElement> values;
  std::array<RefGrad, kNodesPerElement> gradients;
};

inline ShapeEval shape_eval(const RefPoint& p) {
  return {shape_values(p), shape_gradients(p)};
}

struct JacobianEval {
  double m[2][2];    // [ dx/dxi dx/deta ; dy/dxi dy/deta ]
  double det;
  double inv[2][2];  // inverse of m
};

/// Subparametric map of a one-side-curved cubic triangle,
///   t(xi,eta) = t3 + (t1-t3) xi + (t2-t3) eta + c xi eta
/// with c = 9/4 [(t4+t5) - (t1+t2)].  For straight-sided elements with
/// thirds nodes the xi*eta coefficient vanishes and the map is affine.
class ElementMap {
 public:
  ElementMap(Point2 t1, Point2 t2, Point2 t3, Point2 t4, Point2 t5);

  Point2 map(const RefPoint& p) const;

  /// Throws GeometryError when |det| falls below the degeneracy threshold
  /// or the element is inverted (det <= 0).
  JacobianEval jacobian(const RefPoint& p) const;

  /// Physical-space gradients J^{-T} grad N_i of all shape functions.
  std::array<Point2, kNodesPerElement> physical_gradients(const RefPoint& p) const;

  /// Jacobian determinant without the degeneracy guard; lets validation
  /// report inverted elements instead of throwing.
  double jacobian_det_unchecked(const RefPoint& p) const noexcept;

  /// The xi*eta coefficient of the map; zero for straight-sided elements.
  Point2 bilinear_coefficient() const { return c_; }

 private:
  Point2 t1_, t2_, t3_, c_;
};

struct QuadratureRule {
  int degree = 0;
  std::vector<RefPoint> points;
  std::vector<double> weights;  // sum to 1/2, the reference-triangle area
};

/// Symmetric positive-weight rule exact for polynomials up to `degree`.
/// Supported degrees: 2, 5, 8.  Throws ConfigError otherwise.
const QuadratureRule& quadrature_rule(int degree);

struct EdgeQuadPoint {
  double s;  // parameter in [0,1]
  double w;
};

/// 4-point Gauss-Legendre rule on [0,1] for boundary-edge integrals.
std::span<const EdgeQuadPoint> edge_quadrature();

}  // namespace slfem
