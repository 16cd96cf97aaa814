#pragma once

#include <cmath>
#include <limits>

namespace disksssp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A disk: center (x,y), radius r. Radii are normalized to r >= 1.
struct Vertex {
  int id = -1;
  double x = 0;
  double y = 0;
  double r = 1;
};

// Every distance in the library funnels through this one expression so that
// all solvers agree bit-for-bit.
inline double center_dist(double ax, double ay, double bx, double by) {
  double dx = ax - bx;
  double dy = ay - by;
  return std::sqrt(dx * dx + dy * dy);
}

inline double center_dist(const Vertex& u, const Vertex& v) {
  return center_dist(u.x, u.y, v.x, v.y);
}

// Closed predicate: tangent disks count as intersecting.
inline bool is_edge(const Vertex& u, const Vertex& v) {
  return center_dist(u, v) <= u.r + v.r;
}

inline double edge_weight(const Vertex& u, const Vertex& v) {
  return center_dist(u, v);
}

}  // namespace disksssp
