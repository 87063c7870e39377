#include "boxplan/svg.hpp"

#include <cstdio>
#include <sstream>

namespace boxplan {

namespace {

constexpr double kMargin = 4.0;
constexpr double kScale = 8.0;  // svg units per meter

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const RunReport& report, const WorldMap& world) {
  const Rect& ws = world.workspace;
  const double width = ws.max.x() - ws.min.x() + 2 * kMargin;
  const double height = ws.max.y() - ws.min.y() + 2 * kMargin;
  // World y grows up, SVG y grows down.
  auto sx = [&](double x) { return (x - ws.min.x() + kMargin) * kScale; };
  auto sy = [&](double y) { return (ws.max.y() - y + kMargin) * kScale; };
  auto point = [&](const Vec2& p) { return num(sx(p.x())) + "," + num(sy(p.y())); };
  auto polygon_points = [&](const Quad& quad) {
    std::string s;
    for (std::size_t i = 0; i < quad.size(); ++i) {
      if (i > 0) s += ' ';
      s += point(quad[i]);
    }
    return s;
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width * kScale)
      << "\" height=\"" << num(height * kScale) << "\" viewBox=\"0 0 "
      << num(width * kScale) << ' ' << num(height * kScale) << "\">\n";
  out << "  <rect x=\"" << num(sx(ws.min.x())) << "\" y=\"" << num(sy(ws.max.y()))
      << "\" width=\"" << num((ws.max.x() - ws.min.x()) * kScale)
      << "\" height=\"" << num((ws.max.y() - ws.min.y()) * kScale)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  for (const Obstacle& obstacle : world.obstacles) {
    if (const auto* rect = std::get_if<Rect>(&obstacle)) {
      out << "  <rect x=\"" << num(sx(rect->min.x())) << "\" y=\""
          << num(sy(rect->max.y())) << "\" width=\""
          << num((rect->max.x() - rect->min.x()) * kScale) << "\" height=\""
          << num((rect->max.y() - rect->min.y()) * kScale)
          << "\" fill=\"#9aa0a6\" stroke=\"#5f6368\"/>\n";
    } else {
      const auto& circle = std::get<Circle>(obstacle);
      out << "  <circle cx=\"" << num(sx(circle.center.x())) << "\" cy=\""
          << num(sy(circle.center.y())) << "\" r=\""
          << num(circle.radius * kScale)
          << "\" fill=\"#9aa0a6\" stroke=\"#5f6368\"/>\n";
    }
  }

  // Goal marker and tolerance circle.
  out << "  <circle cx=\"" << num(sx(world.goal_cg.x())) << "\" cy=\""
      << num(sy(world.goal_cg.y())) << "\" r=\""
      << num(world.params.epsilon * kScale)
      << "\" fill=\"none\" stroke=\"#188038\" stroke-dasharray=\"6 4\"/>\n";
  out << "  <circle cx=\"" << num(sx(world.goal_cg.x())) << "\" cy=\""
      << num(sy(world.goal_cg.y()))
      << "\" r=\"4\" fill=\"#188038\" stroke=\"none\"/>\n";

  // Box footprints: the start state plus one per committed step.
  out << "  <polygon points=\"" << polygon_points(box_corners(world.start))
      << "\" fill=\"#d2e3fc\" stroke=\"#1a73e8\" stroke-width=\"1.5\"/>\n";
  for (const StepRecord& step : report.steps) {
    out << "  <polygon points=\""
        << polygon_points(box_corners(step.post_state))
        << "\" fill=\"none\" stroke=\"#202124\" stroke-width=\"1\"/>\n";
  }

  // cg trajectory.
  out << "  <polyline points=\"" << point(world.start.cg);
  for (const StepRecord& step : report.steps) {
    out << ' ' << point(step.post_state.cg);
  }
  out << "\" fill=\"none\" stroke=\"#d93025\" stroke-width=\"1.5\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace boxplan
