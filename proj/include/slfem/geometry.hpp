#pragma once

#include <cmath>
#include <numbers>

#include "slfem/errors.hpp"

namespace slfem {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return s * a; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

enum class Orientation { ccw, cw };

/// Circular arc; angles in radians measured from the center.
struct Arc {
  Point2 center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
  Orientation orientation = Orientation::ccw;
};

inline Arc full_circle(Point2 center, double radius) {
  return {center, radius, 0.0, 2.0 * std::numbers::pi, Orientation::ccw};
}

inline double angle_on_circle(const Arc& arc, Point2 p) {
  return std::atan2(p.y - arc.center.y, p.x - arc.center.x);
}

inline Point2 point_at_angle(const Arc& arc, double theta) {
  return {arc.center.x + arc.radius * std::cos(theta),
          arc.center.y + arc.radius * std::sin(theta)};
}

/// Angular travel from angle a to angle b following the arc orientation,
/// normalized into (0, 2*pi].
inline double angular_travel(double a, double b, Orientation orientation) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double d = (orientation == Orientation::ccw) ? b - a : a - b;
  d = std::fmod(d, two_pi);
  if (d <= 0.0) d += two_pi;
  return d;
}

}  // namespace slfem
