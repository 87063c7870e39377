#include "boxplan/box_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace boxplan {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double normalize_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a > kPi) {
    a -= 2.0 * kPi;
  } else if (a <= -kPi) {
    a += 2.0 * kPi;
  }
  return a;
}

Vec2 heading(const BoxState& state) {
  return {std::cos(state.theta), std::sin(state.theta)};
}

Quad box_corners(const BoxState& state) {
  const Vec2 u = heading(state);
  const Vec2 v(-u.y(), u.x());
  const Vec2 half_l = 0.5 * state.length * u;
  const Vec2 half_w = 0.5 * state.width * v;
  return {state.cg + half_l + half_w, state.cg - half_l + half_w,
          state.cg - half_l - half_w, state.cg + half_l - half_w};
}

BoxState make_box_state(const Vec2& cg, double theta, double length,
                        double width) {
  BoxState state;
  state.cg = cg;
  state.theta = normalize_angle(theta);
  state.length = length;
  state.width = width;
  const Vec2 u = heading(state);
  const Vec2 v(-u.y(), u.x());
  const Vec2 rear = cg - 0.5 * length * u;
  state.contact_e = rear + 0.25 * width * v;
  state.contact_f = rear - 0.25 * width * v;
  return state;
}

std::string check_box_state(const BoxState& state) {
  constexpr double tol = 1e-9;
  if (state.length <= 0 || state.width <= 0) {
    return "box dimensions must be positive";
  }
  if ((state.contact_e - state.contact_f).norm() <= 0) {
    return "contact points E and F coincide";
  }
  const Vec2 u = heading(state);
  const Vec2 v(-u.y(), u.x());
  const Vec2 rear = state.cg - 0.5 * state.length * u;
  for (const Vec2* contact : {&state.contact_e, &state.contact_f}) {
    const Vec2 r = *contact - rear;
    if (std::abs(r.dot(u)) > tol) return "contact point off the rear face";
    if (std::abs(r.dot(v)) > 0.5 * state.width + tol) {
      return "contact point outside the rear face segment";
    }
  }
  return {};
}

Vec2 rotate_point(const Vec2& p, const Vec2& pivot, double alpha) {
  if (alpha == 0.0) return p;  // null rotation is an exact identity
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const Vec2 r = p - pivot;
  return {pivot.x() + r.x() * c - r.y() * s,
          pivot.y() + r.x() * s + r.y() * c};
}

BoxState apply_rotation(const BoxState& state, const Vec2& pivot,
                        double alpha) {
  BoxState next = state;
  next.cg = rotate_point(state.cg, pivot, alpha);
  next.contact_e = rotate_point(state.contact_e, pivot, alpha);
  next.contact_f = rotate_point(state.contact_f, pivot, alpha);
  next.theta = normalize_angle(state.theta + alpha);
  return next;
}

BoxState apply_translation(const BoxState& state, double d) {
  BoxState next = state;
  const Vec2 shift = d * heading(state);
  next.cg += shift;
  next.contact_e += shift;
  next.contact_f += shift;
  return next;
}

double rotation_time(double alpha, double inertia, double f1r, double d1) {
  if (alpha == 0.0) return 0.0;
  const double torque = 2.0 * f1r * d1;
  if (torque <= 0.0) {
    throw std::domain_error("rotation_time: zero torque with nonzero angle");
  }
  return std::sqrt(2.0 * std::abs(alpha) * inertia / torque);
}

double translation_time(double mass, double d, double f1t) {
  if (d == 0.0) return 0.0;
  if (f1t <= 0.0) {
    throw std::domain_error(
        "translation_time: zero force with nonzero distance");
  }
  return std::sqrt(2.0 * mass * d / (2.0 * f1t));
}

double remaining_distance(const Vec2& next_cg, const Vec2& goal_cg) {
  return (next_cg - goal_cg).norm();
}

double secondary_time(double s, double k) { return k * std::sqrt(s); }

double rotation_energy(double f1r, double d1, double alpha) {
  return 2.0 * f1r * d1 * std::abs(alpha);
}

double translation_energy(double f1t, double d) { return 2.0 * f1t * d; }

double secondary_energy(double s, double k1) { return k1 * s; }

double clearance(const BoxState& state, const WorldMap& world) {
  const Quad corners = box_corners(state);
  const Rect& ws = world.workspace;
  double cx = std::numeric_limits<double>::infinity();
  double cy = std::numeric_limits<double>::infinity();
  for (const Vec2& c : corners) {
    cx = std::min({cx, c.x() - ws.min.x(), ws.max.x() - c.x()});
    cy = std::min({cy, c.y() - ws.min.y(), ws.max.y() - c.y()});
  }
  cx = std::max(cx, 0.0);
  cy = std::max(cy, 0.0);
  double cobs = world.params.clearance_cap;
  for (const Obstacle& obstacle : world.obstacles) {
    cobs = std::min(cobs, obstacle_distance(corners, obstacle));
  }
  return cx + cy + cobs;
}

double penalty(double d2, double k2) { return k2 * std::exp2(-d2); }

bool footprint_feasible(const BoxState& state, const WorldMap& world) {
  const Quad corners = box_corners(state);
  for (const Vec2& c : corners) {
    if (!world.workspace.contains(c)) return false;
  }
  for (const Obstacle& obstacle : world.obstacles) {
    if (obstacle_distance(corners, obstacle) <= 0.0) return false;
  }
  return true;
}

BoxState apply_decision(const BoxState& state,
                        const DecisionVector& decision) {
  const Vec2 pivot = project_onto_segment(decision.pivot, state.contact_e,
                                          state.contact_f);
  const BoxState rotated = apply_rotation(state, pivot, decision.turn_angle);
  return apply_translation(rotated, decision.travel_distance);
}

ObjectiveBreakdown evaluate(const DecisionVector& decision,
                            const BoxState& state, const WorldMap& world) {
  const BoxState next = apply_decision(state, decision);
  ObjectiveBreakdown out;
  if (!footprint_feasible(next, world)) {
    out.feasible = false;
    out.f1 = std::numeric_limits<double>::infinity();
    out.f2 = std::numeric_limits<double>::infinity();
    return out;
  }
  const PhysicalParams& pp = world.params;
  out.t1 = rotation_time(decision.turn_angle, pp.inertia,
                         decision.rotation_force, decision.moment_arm);
  out.t2 = translation_time(pp.mass, decision.travel_distance,
                            decision.translation_force);
  out.s_remaining = remaining_distance(next.cg, world.goal_cg);
  out.t3 = secondary_time(out.s_remaining, pp.k);
  out.e1 = rotation_energy(decision.rotation_force, decision.moment_arm,
                           decision.turn_angle);
  out.e2 = translation_energy(decision.translation_force,
                              decision.travel_distance);
  out.e3 = secondary_energy(out.s_remaining, pp.k1);
  out.clearance_d2 = clearance(next, world);
  out.e4 = penalty(out.clearance_d2, pp.k2);
  out.f1 = out.t1 + out.t2 + out.t3;
  out.f2 = out.e1 + out.e2 + out.e3 + out.e4;
  return out;
}

DecisionVector decision_from_vector(const Eigen::VectorXd& x) {
  DecisionVector d;
  d.pivot = Vec2(x[0], x[1]);
  d.rotation_force = x[2];
  d.translation_force = x[3];
  d.moment_arm = x[4];
  d.travel_distance = x[5];
  d.turn_angle = x[6];
  return d;
}

Eigen::VectorXd decision_to_vector(const DecisionVector& d) {
  Eigen::VectorXd x(7);
  x << d.pivot.x(), d.pivot.y(), d.rotation_force, d.translation_force,
      d.moment_arm, d.travel_distance, d.turn_angle;
  return x;
}

Bounds decision_bounds(const BoxState& state, const WorldMap& world) {
  const PhysicalParams& pp = world.params;
  const double ef = (state.contact_e - state.contact_f).norm();
  Bounds b;
  b.lower.resize(7);
  b.upper.resize(7);
  b.lower << world.workspace.min.x(), world.workspace.min.y(), pp.force_min,
      pp.force_min, 0.01 * ef, 0.0, -pp.alpha_max;
  b.upper << world.workspace.max.x(), world.workspace.max.y(), pp.force_max,
      pp.force_max, ef, pp.distance_max, pp.alpha_max;
  return b;
}

}  // namespace boxplan
