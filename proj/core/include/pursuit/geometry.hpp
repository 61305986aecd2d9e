#pragma once

#include <cmath>

namespace pursuit {

struct Point {
  double x = 0;
  double y = 0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(Point a, Point b) = default;
  double norm() const { return std::hypot(x, y); }
};

struct Segment {
  Point a;
  Point b;
};

namespace geom {

/// Coordinates closer than this are treated as equal.
inline constexpr double kEps = 1e-9;

inline bool same_point(Point p, Point q) { return std::abs(p.x - q.x) <= kEps && std::abs(p.y - q.y) <= kEps; }

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(Point a, Point b, Point c);

/// p lies on segment s, endpoints excluded.
bool in_segment_interior(Point p, const Segment& s);

/// Segments share a point other than a common endpoint. Two segments that
/// share an endpoint still conflict when they overlap collinearly.
bool segments_conflict(const Segment& s, const Segment& t);

/// Angle of v in [0, 2*pi).
double angle(Point v);

}  // namespace geom
}  // namespace pursuit
