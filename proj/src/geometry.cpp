#include "boxplan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace boxplan {

Quad rect_to_quad(const Rect& r) {
  return {Vec2(r.max.x(), r.max.y()), Vec2(r.min.x(), r.max.y()),
          Vec2(r.min.x(), r.min.y()), Vec2(r.max.x(), r.min.y())};
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  return (p - project_onto_segment(p, a, b)).norm();
}

Vec2 project_onto_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return a;
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return a + t * ab;
}

bool point_in_convex_polygon(const Vec2& p, std::span<const Vec2> poly) {
  // CCW polygon: inside iff never strictly right of an edge.
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % poly.size()];
    const Vec2 e = b - a;
    const Vec2 r = p - a;
    if (e.x() * r.y() - e.y() * r.x() < 0.0) return false;
  }
  return true;
}

namespace {

bool separated_on_axes(std::span<const Vec2> edges_of,
                       std::span<const Vec2> a, std::span<const Vec2> b) {
  for (std::size_t i = 0; i < edges_of.size(); ++i) {
    const Vec2 edge = edges_of[(i + 1) % edges_of.size()] - edges_of[i];
    const Vec2 axis(-edge.y(), edge.x());
    double amin = std::numeric_limits<double>::infinity(), amax = -amin;
    for (const Vec2& v : a) {
      const double d = axis.dot(v);
      amin = std::min(amin, d);
      amax = std::max(amax, d);
    }
    double bmin = std::numeric_limits<double>::infinity(), bmax = -bmin;
    for (const Vec2& v : b) {
      const double d = axis.dot(v);
      bmin = std::min(bmin, d);
      bmax = std::max(bmax, d);
    }
    if (amax < bmin || bmax < amin) return true;
  }
  return false;
}

}  // namespace

bool convex_polygons_intersect(std::span<const Vec2> a,
                               std::span<const Vec2> b) {
  return !separated_on_axes(a, a, b) && !separated_on_axes(b, a, b);
}

double convex_polygon_distance(std::span<const Vec2> a,
                               std::span<const Vec2> b) {
  if (convex_polygons_intersect(a, b)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vec2& p = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      best = std::min(
          best, point_segment_distance(p, b[j], b[(j + 1) % b.size()]));
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Vec2& p = b[i];
    for (std::size_t j = 0; j < a.size(); ++j) {
      best = std::min(
          best, point_segment_distance(p, a[j], a[(j + 1) % a.size()]));
    }
  }
  return best;
}

double obstacle_distance(const Quad& footprint, const Obstacle& obstacle) {
  if (const auto* rect = std::get_if<Rect>(&obstacle)) {
    const Quad other = rect_to_quad(*rect);
    return convex_polygon_distance(std::span<const Vec2>(footprint),
                                   std::span<const Vec2>(other));
  }
  const auto& circle = std::get<Circle>(obstacle);
  if (point_in_convex_polygon(circle.center, footprint)) return 0.0;
  double boundary = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < footprint.size(); ++i) {
    boundary = std::min(boundary,
                        point_segment_distance(circle.center, footprint[i],
                                               footprint[(i + 1) % 4]));
  }
  return std::max(0.0, boundary - circle.radius);
}

}  // namespace boxplan
