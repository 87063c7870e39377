#include "boxplan/map_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace boxplan {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok.front() == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

double parse_number(const std::string& tok, int line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw MapParseError(line, "expected a number, got '" + tok + "'");
  }
  if (used != tok.size() || !std::isfinite(value)) {
    throw MapParseError(line, "expected a finite number, got '" + tok + "'");
  }
  return value;
}

void expect_arity(const std::vector<std::string>& tokens, std::size_t n,
                  int line) {
  if (tokens.size() != n) {
    throw MapParseError(line, "directive '" + tokens.front() + "' takes " +
                                  std::to_string(n - 1) + " arguments, got " +
                                  std::to_string(tokens.size() - 1));
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

WorldMap parse_map(const std::string& text) {
  WorldMap world;
  bool have_workspace = false, have_box = false, have_goal = false;
  int box_line = 0, goal_line = 0;
  double box_cg_x = 0, box_cg_y = 0, box_theta = 0, box_length = 0,
         box_width = 0;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens.front();

    auto num = [&](std::size_t i) { return parse_number(tokens[i], lineno); };

    if (directive == "workspace") {
      expect_arity(tokens, 5, lineno);
      world.workspace = {Vec2(num(1), num(2)), Vec2(num(3), num(4))};
      if (world.workspace.min.x() >= world.workspace.max.x() ||
          world.workspace.min.y() >= world.workspace.max.y()) {
        throw MapParseError(lineno, "workspace must have positive extent");
      }
      have_workspace = true;
    } else if (directive == "box") {
      expect_arity(tokens, 6, lineno);
      box_cg_x = num(1);
      box_cg_y = num(2);
      box_theta = num(3);
      box_length = num(4);
      box_width = num(5);
      if (box_length <= 0 || box_width <= 0) {
        throw MapParseError(lineno, "box dimensions must be positive");
      }
      have_box = true;
      box_line = lineno;
    } else if (directive == "mass") {
      expect_arity(tokens, 2, lineno);
      world.params.mass = num(1);
      if (world.params.mass <= 0) {
        throw MapParseError(lineno, "mass must be positive");
      }
    } else if (directive == "inertia") {
      expect_arity(tokens, 2, lineno);
      world.params.inertia = num(1);
      if (world.params.inertia <= 0) {
        throw MapParseError(lineno, "inertia must be positive");
      }
    } else if (directive == "goal") {
      expect_arity(tokens, 3, lineno);
      world.goal_cg = Vec2(num(1), num(2));
      have_goal = true;
      goal_line = lineno;
    } else if (directive == "epsilon") {
      expect_arity(tokens, 2, lineno);
      world.params.epsilon = num(1);
      if (world.params.epsilon <= 0) {
        throw MapParseError(lineno, "epsilon must be positive");
      }
    } else if (directive == "obstacle") {
      if (tokens.size() < 2) {
        throw MapParseError(lineno, "obstacle requires a shape (rect|circle)");
      }
      if (tokens[1] == "rect") {
        expect_arity(tokens, 6, lineno);
        const Vec2 corner(num(2), num(3));
        const double w = num(4), h = num(5);
        if (w <= 0 || h <= 0) {
          throw MapParseError(lineno, "obstacle rect needs positive size");
        }
        world.obstacles.push_back(Rect{corner, corner + Vec2(w, h)});
      } else if (tokens[1] == "circle") {
        expect_arity(tokens, 5, lineno);
        const double r = num(4);
        if (r <= 0) {
          throw MapParseError(lineno, "obstacle circle needs positive radius");
        }
        world.obstacles.push_back(Circle{Vec2(num(2), num(3)), r});
      } else {
        throw MapParseError(lineno, "unknown obstacle shape '" + tokens[1] +
                                        "' (rect|circle)");
      }
    } else if (directive == "constants") {
      expect_arity(tokens, 5, lineno);
      world.params.k = num(1);
      world.params.k1 = num(2);
      world.params.k2 = num(3);
      world.params.clearance_cap = num(4);
      if (world.params.k <= 0 || world.params.k1 <= 0 ||
          world.params.k2 <= 0 || world.params.clearance_cap <= 0) {
        throw MapParseError(lineno, "constants must be positive");
      }
    } else if (directive == "bounds") {
      expect_arity(tokens, 4, lineno);
      const std::string& which = tokens[1];
      const double lo = num(2), hi = num(3);
      if (lo >= hi) {
        throw MapParseError(lineno, "bounds require lo < hi");
      }
      if (which == "f") {
        if (lo <= 0) {
          throw MapParseError(lineno, "force lower bound must be positive");
        }
        world.params.force_min = lo;
        world.params.force_max = hi;
      } else if (which == "d") {
        if (lo != 0) {
          throw MapParseError(lineno, "distance lower bound must be 0");
        }
        world.params.distance_max = hi;
      } else if (which == "alpha") {
        if (lo != -hi) {
          throw MapParseError(lineno, "alpha bounds must be symmetric");
        }
        world.params.alpha_max = hi;
      } else {
        throw MapParseError(lineno,
                            "unknown bounds key '" + which + "' (f|d|alpha)");
      }
    } else {
      throw MapParseError(lineno, "unknown directive '" + directive + "'");
    }
  }

  if (!have_workspace) throw MapParseError(0, "missing 'workspace' directive");
  if (!have_box) throw MapParseError(0, "missing 'box' directive");
  if (!have_goal) throw MapParseError(0, "missing 'goal' directive");

  world.start = make_box_state(Vec2(box_cg_x, box_cg_y), box_theta, box_length,
                               box_width);
  WorldMap no_obstacles = world;
  no_obstacles.obstacles.clear();
  if (!footprint_feasible(world.start, no_obstacles)) {
    throw MapParseError(box_line, "start box leaves the workspace");
  }
  if (!footprint_feasible(world.start, world)) {
    throw MapParseError(box_line, "start box overlaps an obstacle");
  }
  if (!world.workspace.contains(world.goal_cg)) {
    throw MapParseError(goal_line, "goal lies outside the workspace");
  }
  return world;
}

WorldMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read map file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_map(buffer.str());
}

std::string write_map(const WorldMap& world) {
  std::ostringstream out;
  const PhysicalParams& pp = world.params;
  out << "workspace " << fmt(world.workspace.min.x()) << ' '
      << fmt(world.workspace.min.y()) << ' ' << fmt(world.workspace.max.x())
      << ' ' << fmt(world.workspace.max.y()) << '\n';
  out << "box " << fmt(world.start.cg.x()) << ' ' << fmt(world.start.cg.y())
      << ' ' << fmt(world.start.theta) << ' ' << fmt(world.start.length) << ' '
      << fmt(world.start.width) << '\n';
  out << "mass " << fmt(pp.mass) << '\n';
  out << "inertia " << fmt(pp.inertia) << '\n';
  out << "goal " << fmt(world.goal_cg.x()) << ' ' << fmt(world.goal_cg.y())
      << '\n';
  out << "epsilon " << fmt(pp.epsilon) << '\n';
  out << "constants " << fmt(pp.k) << ' ' << fmt(pp.k1) << ' ' << fmt(pp.k2)
      << ' ' << fmt(pp.clearance_cap) << '\n';
  out << "bounds f " << fmt(pp.force_min) << ' ' << fmt(pp.force_max) << '\n';
  out << "bounds d 0 " << fmt(pp.distance_max) << '\n';
  out << "bounds alpha " << fmt(-pp.alpha_max) << ' ' << fmt(pp.alpha_max)
      << '\n';
  for (const Obstacle& obstacle : world.obstacles) {
    if (const auto* rect = std::get_if<Rect>(&obstacle)) {
      out << "obstacle rect " << fmt(rect->min.x()) << ' ' << fmt(rect->min.y())
          << ' ' << fmt(rect->max.x() - rect->min.x()) << ' '
          << fmt(rect->max.y() - rect->min.y()) << '\n';
    } else {
      const auto& circle = std::get<Circle>(obstacle);
      out << "obstacle circle " << fmt(circle.center.x()) << ' '
          << fmt(circle.center.y()) << ' ' << fmt(circle.radius) << '\n';
    }
  }
  return out.str();
}

}  // namespace boxplan
