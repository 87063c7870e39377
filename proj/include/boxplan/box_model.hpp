#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "boxplan/geometry.hpp"
#include "boxplan/pareto.hpp"

namespace boxplan {

// Rigid box pose plus the two robot contact points on its rear face. theta is
// the orientation of the length axis against the x-axis; the box is pushed
// along +theta.
struct BoxState {
  Vec2 cg;
  double theta = 0.0;
  double length = 8.0;
  double width = 4.0;
  Vec2 contact_e;
  Vec2 contact_f;
};

// One step's unknowns: rotation pivot I, per-robot force magnitudes for
// rotation and translation, moment arm, travel distance, signed turn angle
// (counterclockwise positive).
struct DecisionVector {
  Vec2 pivot;
  double rotation_force = 0.0;     // newtons
  double translation_force = 0.0;  // newtons
  double moment_arm = 0.0;         // meters, perpendicular to the force lines
  double travel_distance = 0.0;    // meters
  double turn_angle = 0.0;         // radians
};

struct PhysicalParams {
  double mass = 50.0;               // kg
  double inertia = 1000.0 / 3.0;    // kg m^2 (uniform 8x4 rectangle at 50 kg)
  double k = 1.0;                   // s m^(-1/2), secondary time scale
  double k1 = 10.0;                 // J/m, secondary energy scale
  double k2 = 1000.0;               // J, penalty scale
  double epsilon = 2.0;             // m, goal tolerance
  double force_min = 1.0;           // N
  double force_max = 100.0;         // N
  double distance_max = 10.0;       // m per step
  double alpha_max = 1.5707963267948966;  // rad per step
  double clearance_cap = 20.0;      // m, obstacle-clearance cap
};

struct WorldMap {
  Rect workspace{Vec2(0, 0), Vec2(100, 100)};
  std::vector<Obstacle> obstacles;
  BoxState start;
  Vec2 goal_cg;
  PhysicalParams params;
};

// Per-step objective values and their components. f1 = t1 + t2 + t3 (s),
// f2 = e1 + e2 + e3 + e4 (J). An infeasible decision reports non-finite f1/f2.
struct ObjectiveBreakdown {
  double t1 = 0, t2 = 0, t3 = 0;
  double e1 = 0, e2 = 0, e3 = 0, e4 = 0;
  double f1 = 0, f2 = 0;
  double s_remaining = 0;
  double clearance_d2 = 0;
  bool feasible = true;
};

// Normalizes an angle to (-pi, pi].
double normalize_angle(double a);

// Heading unit vector (cos theta, sin theta).
Vec2 heading(const BoxState& state);

// Counterclockwise corners of the box footprint.
Quad box_corners(const BoxState& state);

// Box with contact points at the rear-face quarter points (|EF| = width/2).
BoxState make_box_state(const Vec2& cg, double theta, double length,
                        double width);

// Checks the BoxState invariants (contacts on the rear face, proper
// rectangle). Returns an empty string when valid, else a description.
std::string check_box_state(const BoxState& state);

// Counterclockwise rotation of p about pivot by alpha.
Vec2 rotate_point(const Vec2& p, const Vec2& pivot, double alpha);

// Rotates cg and both contacts about the pivot; theta advances by alpha.
BoxState apply_rotation(const BoxState& state, const Vec2& pivot, double alpha);

// Shifts cg and both contacts by d along the current heading.
BoxState apply_translation(const BoxState& state, double d);

// t1 = sqrt(2 |alpha| J / T) with torque T = 2 f1r d1. Throws
// std::domain_error when alpha != 0 and the torque vanishes.
double rotation_time(double alpha, double inertia, double f1r, double d1);

// t2 = sqrt(2 m d / (2 f1t)); both robots translate with equal force. Throws
// std::domain_error when d > 0 and f1t = 0.
double translation_time(double mass, double d, double f1t);

// Euclidean distance from the next cg to the goal cg.
double remaining_distance(const Vec2& next_cg, const Vec2& goal_cg);

// t3 = k sqrt(S)
double secondary_time(double s, double k);

// E1 = 2 f1r d1 |alpha|
double rotation_energy(double f1r, double d1, double alpha);

// E2 = 2 f1t d
double translation_energy(double f1t, double d);

// E3 = k1 S
double secondary_energy(double s, double k1);

// d2 = (nearest vertical-wall clearance over the corners)
//    + (nearest horizontal-wall clearance over the corners)
//    + (nearest obstacle boundary clearance, capped at clearance_cap and
//       equal to the cap when no obstacles exist).
double clearance(const BoxState& state, const WorldMap& world);

// E4 = k2 * 2^(-d2)
double penalty(double d2, double k2);

// True when every corner lies inside the workspace and the footprint is
// disjoint from all obstacles.
bool footprint_feasible(const BoxState& state, const WorldMap& world);

// Pivot projected onto segment EF, then rotation by the turn angle followed
// by translation along the new heading. The planner commits exactly this.
BoxState apply_decision(const BoxState& state, const DecisionVector& decision);

// Simulates the decision and fills the full breakdown. A footprint that
// leaves the workspace or hits an obstacle yields the infeasible marker
// (f1 = f2 = +inf) rather than an exception.
ObjectiveBreakdown evaluate(const DecisionVector& decision,
                            const BoxState& state, const WorldMap& world);

// Flat layout of a decision in the 7-D search space:
// [pivot_x, pivot_y, f1r, f1t, d1, d, alpha].
DecisionVector decision_from_vector(const Eigen::VectorXd& x);
Eigen::VectorXd decision_to_vector(const DecisionVector& decision);

// Search-space box for one step from the given state: pivot anywhere in the
// workspace, forces in [force_min, force_max], moment arm in
// [0.01 |EF|, |EF|], distance in [0, distance_max], angle in +-alpha_max.
Bounds decision_bounds(const BoxState& state, const WorldMap& world);

}  // namespace boxplan
