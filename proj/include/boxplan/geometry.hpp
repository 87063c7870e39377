#pragma once

#include <Eigen/Core>
#include <array>
#include <span>
#include <variant>
#include <vector>

namespace boxplan {

using Vec2 = Eigen::Vector2d;
using Quad = std::array<Vec2, 4>;  // convex, counterclockwise

struct Rect {  // axis-aligned, min < max componentwise
  Vec2 min;
  Vec2 max;

  bool contains(const Vec2& p) const {
    return p.x() >= min.x() && p.x() <= max.x() && p.y() >= min.y() &&
           p.y() <= max.y();
  }
};

struct Circle {
  Vec2 center;
  double radius = 0.0;
};

using Obstacle = std::variant<Rect, Circle>;

Quad rect_to_quad(const Rect& r);

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

Vec2 project_onto_segment(const Vec2& p, const Vec2& a, const Vec2& b);

bool point_in_convex_polygon(const Vec2& p, std::span<const Vec2> poly);

// Separating-axis test; touching polygons count as intersecting.
bool convex_polygons_intersect(std::span<const Vec2> a,
                               std::span<const Vec2> b);

// Euclidean distance between polygon boundaries, 0 if they intersect.
double convex_polygon_distance(std::span<const Vec2> a,
                               std::span<const Vec2> b);

// Boundary-to-boundary distance between a convex polygon and an obstacle,
// 0 if they overlap.
double obstacle_distance(const Quad& footprint, const Obstacle& obstacle);

}  // namespace boxplan
