#include "slfem/element.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slfem {

namespace {

// Cubic shape functions on the reference triangle, as (num/2) xi^a eta^b
// terms.  N9's cubic leading term is -27/2 xi^3, mirroring N6; with it the
// Kronecker property holds at all ten nodes.
using TermList = std::vector<ShapeTerm>;

const std::array<TermList, kNodesPerElement>& value_terms() {
  static const std::array<TermList, kNodesPerElement> terms = {{
      // N1 = 9/2 xi^3 - 9/2 xi^2 + xi
      {{3, 0, 9}, {2, 0, -9}, {1, 0, 2}},
      // N2 = 9/2 eta^3 - 9/2 eta^2 + eta
      {{0, 3, 9}, {0, 2, -9}, {0, 1, 2}},
      // N3
      {{3, 0, -9}, {0, 3, -9}, {2, 1, -27}, {1, 2, -27}, {2, 0, 18},
       {0, 2, 18}, {1, 1, 36}, {1, 0, -11}, {0, 1, -11}, {0, 0, 2}},
      // N4 = 27/2 xi^2 eta - 9/2 xi eta
      {{2, 1, 27}, {1, 1, -9}},
      // N5 = 27/2 xi eta^2 - 9/2 xi eta
      {{1, 2, 27}, {1, 1, -9}},
      // N6
      {{0, 3, -27}, {1, 2, -27}, {0, 2, 36}, {1, 1, 9}, {0, 1, -9}},
      // N7
      {{0, 3, 27}, {1, 2, 54}, {0, 2, -45}, {2, 1, 27}, {1, 1, -45}, {0, 1, 18}},
      // N8
      {{3, 0, 27}, {2, 1, 54}, {1, 2, 27}, {2, 0, -45}, {1, 1, -45}, {1, 0, 18}},
      // N9 (xi<->eta mirror of N6)
      {{3, 0, -27}, {2, 1, -27}, {2, 0, 36}, {1, 1, 9}, {1, 0, -9}},
      // N10 = -27 xi eta^2 - 27 xi^2 eta + 27 xi eta
      {{1, 2, -54}, {2, 1, -54}, {1, 1, 54}},
  }};
  return terms;
}

// Analytic partials, generated from the value table term by term.
struct GradTerms {
  TermList d_xi;
  TermList d_eta;
};

const std::array<GradTerms, kNodesPerElement>& gradient_terms() {
  static const std::array<GradTerms, kNodesPerElement> terms = [] {
    std::array<GradTerms, kNodesPerElement> out;
    for (int i = 0; i < kNodesPerElement; ++i) {
      for (const ShapeTerm& t : value_terms()[i]) {
        if (t.a > 0) out[i].d_xi.push_back({t.a - 1, t.b, t.num * t.a});
        if (t.b > 0) out[i].d_eta.push_back({t.a, t.b - 1, t.num * t.b});
      }
    }
    return out;
  }();
  return terms;
}

inline double eval_terms(const TermList& terms, const double* xp, const double* yp) {
  double acc = 0.0;
  for (const ShapeTerm& t : terms) acc += t.num * xp[t.a] * yp[t.b];
  return 0.5 * acc;
}

inline void power_table(double v, double* p) {
  p[0] = 1.0;
  p[1] = v;
  p[2] = v * v;
  p[3] = p[2] * v;
}

constexpr double kDegenerateDet = 1e-14;

}  // namespace

std::span<const ShapeTerm> shape_terms(int i) {
  return value_terms().at(static_cast<size_t>(i));
}

const std::array<RefPoint, kNodesPerElement>& reference_nodes() {
  static const std::array<RefPoint, kNodesPerElement> nodes = {{
      {1.0, 0.0},
      {0.0, 1.0},
      {0.0, 0.0},
      {2.0 / 3.0, 1.0 / 3.0},
      {1.0 / 3.0, 2.0 / 3.0},
      {0.0, 2.0 / 3.0},
      {0.0, 1.0 / 3.0},
      {1.0 / 3.0, 0.0},
      {2.0 / 3.0, 0.0},
      {1.0 / 3.0, 1.0 / 3.0},
  }};
  return nodes;
}

std::array<double, kNodesPerElement> shape_values(const RefPoint& p) {
  double xp[4], yp[4];
  power_table(p.xi, xp);
  power_table(p.eta, yp);
  std::array<double, kNodesPerElement> out;
  for (int i = 0; i < kNodesPerElement; ++i) out[i] = eval_terms(value_terms()[i], xp, yp);
  return out;
}

std::array<RefGrad, kNodesPerElement> shape_gradients(const RefPoint& p) {
  double xp[4], yp[4];
  power_table(p.xi, xp);
  power_table(p.eta, yp);
  std::array<RefGrad, kNodesPerElement> out;
  for (int i = 0; i < kNodesPerElement; ++i) {
    out[i].d_xi = eval_terms(gradient_terms()[i].d_xi, xp, yp);
    out[i].d_eta = eval_terms(gradient_terms()[i].d_eta, xp, yp);
  }
  return out;
}

ElementMap::ElementMap(Point2 t1, Point2 t2, Point2 t3, Point2 t4, Point2 t5)
    : t1_(t1), t2_(t2), t3_(t3), c_(2.25 * ((t4 + t5) - (t1 + t2))) {}

Point2 ElementMap::map(const RefPoint& p) const {
  return t3_ + p.xi * (t1_ - t3_) + p.eta * (t2_ - t3_) + (p.xi * p.eta) * c_;
}

JacobianEval ElementMap::jacobian(const RefPoint& p) const {
  JacobianEval j;
  const Point2 col0 = (t1_ - t3_) + p.eta * c_;
  const Point2 col1 = (t2_ - t3_) + p.xi * c_;
  j.m[0][0] = col0.x;
  j.m[0][1] = col1.x;
  j.m[1][0] = col0.y;
  j.m[1][1] = col1.y;
  j.det = j.m[0][0] * j.m[1][1] - j.m[0][1] * j.m[1][0];
  if (j.det <= kDegenerateDet) {
    throw GeometryError("degenerate element map: det J = " + std::to_string(j.det) +
                        " at (xi,eta) = (" + std::to_string(p.xi) + ", " +
                        std::to_string(p.eta) + ")");
  }
  const double inv_det = 1.0 / j.det;
  j.inv[0][0] = j.m[1][1] * inv_det;
  j.inv[0][1] = -j.m[0][1] * inv_det;
  j.inv[1][0] = -j.m[1][0] * inv_det;
  j.inv[1][1] = j.m[0][0] * inv_det;
  return j;
}

double ElementMap::jacobian_det_unchecked(const RefPoint& p) const noexcept {
  const Point2 col0 = (t1_ - t3_) + p.eta * c_;
  const Point2 col1 = (t2_ - t3_) + p.xi * c_;
  return col0.x * col1.y - col0.y * col1.x;
}

std::array<Point2, kNodesPerElement> ElementMap::physical_gradients(const RefPoint& p) const {
  const JacobianEval j = jacobian(p);
  const auto ref = shape_gradients(p);
  std::array<Point2, kNodesPerElement> out;
  for (int i = 0; i < kNodesPerElement; ++i) {
    // grad_x N = J^{-T} grad_ref N
    out[i].x = j.inv[0][0] * ref[i].d_xi + j.inv[1][0] * ref[i].d_eta;
    out[i].y = j.inv[0][1] * ref[i].d_xi + j.inv[1][1] * ref[i].d_eta;
  }
  return out;
}

namespace {

QuadratureRule make_rule_degree2() {
  QuadratureRule r;
  r.degree = 2;
  const double a = 1.0 / 6.0, b = 2.0 / 3.0;
  r.points = {{b, a}, {a, b}, {a, a}};
  r.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
  return r;
}

QuadratureRule make_rule_degree5() {
  QuadratureRule r;
  r.degree = 5;
  const double s = std::sqrt(15.0);
  const double a = (6.0 - s) / 21.0;
  const double b = (6.0 + s) / 21.0;
  const double wa = (155.0 - s) / 2400.0;
  const double wb = (155.0 + s) / 2400.0;
  r.points = {{1.0 / 3.0, 1.0 / 3.0}};
  r.weights = {9.0 / 80.0};
  for (Point2 p : {Point2{1 - 2 * a, a}, Point2{a, 1 - 2 * a}, Point2{a, a}}) {
    r.points.push_back({p.x, p.y});
    r.weights.push_back(wa);
  }
  for (Point2 p : {Point2{1 - 2 * b, b}, Point2{b, 1 - 2 * b}, Point2{b, b}}) {
    r.points.push_back({p.x, p.y});
    r.weights.push_back(wb);
  }
  return r;
}

// 16-point symmetric rule, exact through degree 8.  Constants solved from
// the moment equations in extended precision and rounded once to double;
// the rounded rule integrates all monomials of degree <= 8 to ~6e-17.
QuadratureRule make_rule_degree8() {
  static const double pts[16][3] = {
      {0.3333333333333333, 0.3333333333333333, 0.07215780383889359},
      {0.0814148234145537, 0.4592925882927232, 0.04754581713364231},
      {0.4592925882927232, 0.0814148234145537, 0.04754581713364231},
      {0.4592925882927232, 0.4592925882927232, 0.04754581713364231},
      {0.6588613844964796, 0.1705693077517602, 0.05160868526735912},
      {0.1705693077517602, 0.6588613844964796, 0.05160868526735912},
      {0.1705693077517602, 0.1705693077517602, 0.05160868526735912},
      {0.8989055433659381, 0.05054722831703098, 0.01622924881159904},
      {0.05054722831703098, 0.8989055433659381, 0.01622924881159904},
      {0.05054722831703098, 0.05054722831703098, 0.01622924881159904},
      {0.2631128296346381, 0.7284923929554042, 0.013615157087217496},
      {0.2631128296346381, 0.008394777409957605, 0.013615157087217496},
      {0.7284923929554042, 0.2631128296346381, 0.013615157087217496},
      {0.7284923929554042, 0.008394777409957605, 0.013615157087217496},
      {0.008394777409957605, 0.2631128296346381, 0.013615157087217496},
      {0.008394777409957605, 0.7284923929554042, 0.013615157087217496},
  };
  QuadratureRule r;
  r.degree = 8;
  for (const auto& p : pts) {
    r.points.push_back({p[0], p[1]});
    r.weights.push_back(p[2]);
  }
  return r;
}

}  // namespace

const QuadratureRule& quadrature_rule(int degree) {
  static const QuadratureRule d2 = make_rule_degree2();
  static const QuadratureRule d5 = make_rule_degree5();
  static const QuadratureRule d8 = make_rule_degree8();
  switch (degree) {
    case 2: return d2;
    case 5: return d5;
    case 8: return d8;
    default:
      throw ConfigError("unsupported quadrature degree " + std::to_string(degree) +
                        " (supported: 2, 5, 8)");
  }
}

std::span<const EdgeQuadPoint> edge_quadrature() {
  static const std::array<EdgeQuadPoint, 4> pts = {{
      {0.06943184420297371, 0.17392742256872692},
      {0.33000947820757187, 0.32607257743127305},
      {0.6699905217924281, 0.32607257743127305},
      {0.9305681557970263, 0.17392742256872692},
  }};
  return pts;
}

}  // namespace slfem
