#include "pursuit/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace pursuit::geom {

int orientation(Point a, Point b, Point c) {
  double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  double scale = std::max({1.0, std::abs(b.x - a.x) + std::abs(b.y - a.y), std::abs(c.x - a.x) + std::abs(c.y - a.y)});
  if (cross > kEps * scale) return 1;
  if (cross < -kEps * scale) return -1;
  return 0;
}

namespace {

// p on the closed segment s, assuming collinearity.
bool within_box(Point p, const Segment& s) {
  return p.x >= std::min(s.a.x, s.b.x) - kEps && p.x <= std::max(s.a.x, s.b.x) + kEps &&
         p.y >= std::min(s.a.y, s.b.y) - kEps && p.y <= std::max(s.a.y, s.b.y) + kEps;
}

}  // namespace

bool in_segment_interior(Point p, const Segment& s) {
  if (same_point(p, s.a) || same_point(p, s.b)) return false;
  return orientation(s.a, s.b, p) == 0 && within_box(p, s);
}

bool segments_conflict(const Segment& s, const Segment& t) {
  // Quick reject on bounding boxes.
  if (std::max(s.a.x, s.b.x) < std::min(t.a.x, t.b.x) - kEps || std::max(t.a.x, t.b.x) < std::min(s.a.x, s.b.x) - kEps ||
      std::max(s.a.y, s.b.y) < std::min(t.a.y, t.b.y) - kEps || std::max(t.a.y, t.b.y) < std::min(s.a.y, s.b.y) - kEps) {
    return false;
  }
  int shared = 0;
  if (same_point(s.a, t.a) || same_point(s.a, t.b)) ++shared;
  if (same_point(s.b, t.a) || same_point(s.b, t.b)) ++shared;
  if (shared == 2) return true;  // parallel edges drawn on top of each other

  int o1 = orientation(s.a, s.b, t.a);
  int o2 = orientation(s.a, s.b, t.b);
  int o3 = orientation(t.a, t.b, s.a);
  int o4 = orientation(t.a, t.b, s.b);

  if (shared == 1) {
    // Only a collinear overlap beyond the common endpoint conflicts.
    if (o1 != 0 || o2 != 0) return false;
    return in_segment_interior(t.a, s) || in_segment_interior(t.b, s) || in_segment_interior(s.a, t) ||
           in_segment_interior(s.b, t);
  }
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  if (o1 == 0 && within_box(t.a, s)) return true;
  if (o2 == 0 && within_box(t.b, s)) return true;
  if (o3 == 0 && within_box(s.a, t)) return true;
  if (o4 == 0 && within_box(s.b, t)) return true;
  return false;
}

double angle(Point v) {
  double a = std::atan2(v.y, v.x);
  if (a < 0) a += 2 * std::numbers::pi;
  if (a >= 2 * std::numbers::pi) a = 0;
  return a;
}

}  // namespace pursuit::geom
