#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "boxplan/box_model.hpp"
#include "boxplan/rng.hpp"

using namespace boxplan;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

WorldMap open_world() {
  WorldMap world;
  world.workspace = {Vec2(0, 0), Vec2(100, 100)};
  world.start = make_box_state(Vec2(10, 10), 0.0, 8, 4);
  world.goal_cg = Vec2(80, 80);
  return world;
}

BoxState random_state(Rng& rng) {
  return make_box_state(Vec2(rng.uniform(10, 90), rng.uniform(10, 90)),
                        rng.uniform(-kPi, kPi), rng.uniform(2, 10),
                        rng.uniform(1, 6));
}

}  // namespace

TEST_CASE("rotate_point: quarter turn about the origin") {
  const Vec2 p = rotate_point(Vec2(2, 0), Vec2(0, 0), kPi / 2);
  CHECK(p.x() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p.y() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("rotate_point: zero angle is the identity") {
  const Vec2 p = rotate_point(Vec2(3.7, -1.2), Vec2(5, 5), 0.0);
  CHECK(p == Vec2(3.7, -1.2));
}

TEST_CASE("rotate_point: full turn returns within 1e-9") {
  const Vec2 p(7.3, 2.9);
  const Vec2 q = rotate_point(p, Vec2(-1, 4), 2 * kPi);
  CHECK((p - q).norm() < 1e-9);
}

TEST_CASE("apply_rotation: hand-checked quarter turn of cg and contacts") {
  BoxState state = make_box_state(Vec2(1, 0), 0.0, 2, 4);
  state.cg = Vec2(1, 0);
  state.contact_e = Vec2(0, -1);
  state.contact_f = Vec2(0, 1);
  const BoxState next = apply_rotation(state, Vec2(0, 0), kPi / 2);
  CHECK((next.cg - Vec2(0, 1)).norm() < 1e-12);
  CHECK((next.contact_e - Vec2(1, 0)).norm() < 1e-12);
  CHECK((next.contact_f - Vec2(-1, 0)).norm() < 1e-12);
  CHECK(next.theta == doctest::Approx(kPi / 2));
}

TEST_CASE("apply_rotation: zero angle leaves the state unchanged") {
  const BoxState state = make_box_state(Vec2(4, 9), 0.3, 8, 4);
  const BoxState next = apply_rotation(state, Vec2(1, 1), 0.0);
  CHECK(next.cg == state.cg);
  CHECK(next.contact_e == state.contact_e);
  CHECK(next.contact_f == state.contact_f);
  CHECK(next.theta == state.theta);
}

TEST_CASE("apply_rotation: rigidity of all pairwise distances") {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const BoxState state = random_state(rng);
    const Vec2 pivot(rng.uniform(0, 100), rng.uniform(0, 100));
    const double alpha = rng.uniform(-kPi, kPi);
    const BoxState next = apply_rotation(state, pivot, alpha);

    const Quad c0 = box_corners(state);
    const Quad c1 = box_corners(next);
    std::vector<Vec2> before{state.cg, state.contact_e, state.contact_f};
    std::vector<Vec2> after{next.cg, next.contact_e, next.contact_f};
    before.insert(before.end(), c0.begin(), c0.end());
    after.insert(after.end(), c1.begin(), c1.end());
    for (std::size_t i = 0; i < before.size(); ++i) {
      for (std::size_t j = i + 1; j < before.size(); ++j) {
        const double d0 = (before[i] - before[j]).norm();
        const double d1 = (after[i] - after[j]).norm();
        CHECK(std::abs(d0 - d1) < 1e-9);
      }
    }
  }
}

TEST_CASE("apply_rotation: composition with the inverse is the identity") {
  Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const BoxState state = random_state(rng);
    const Vec2 pivot(rng.uniform(0, 100), rng.uniform(0, 100));
    const double alpha = rng.uniform(-kPi, kPi);
    const BoxState back =
        apply_rotation(apply_rotation(state, pivot, alpha), pivot, -alpha);
    CHECK((back.cg - state.cg).norm() < 1e-9);
    CHECK((back.contact_e - state.contact_e).norm() < 1e-9);
    CHECK((back.contact_f - state.contact_f).norm() < 1e-9);
  }
}

TEST_CASE("apply_translation: along the x axis") {
  BoxState state = make_box_state(Vec2(0, 0), 0.0, 8, 4);
  const BoxState next = apply_translation(state, 2.0);
  CHECK((next.cg - Vec2(2, 0)).norm() < 1e-12);
}

TEST_CASE("apply_translation: zero distance is the identity") {
  const BoxState state = make_box_state(Vec2(3, 4), 1.1, 8, 4);
  const BoxState next = apply_translation(state, 0.0);
  CHECK(next.cg == state.cg);
  CHECK(next.contact_e == state.contact_e);
}

TEST_CASE("apply_translation: diagonal move matches direct substitution") {
  const BoxState state = make_box_state(Vec2(1, 1), kPi / 4, 8, 4);
  const BoxState next = apply_translation(state, std::sqrt(2.0));
  CHECK(next.cg.x() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(next.cg.y() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("apply_translation: cg moves exactly d along the heading") {
  Rng rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    const BoxState state = random_state(rng);
    const double d = rng.uniform(0, 10);
    const BoxState next = apply_translation(state, d);
    const Vec2 expect = state.cg + d * Vec2(std::cos(state.theta),
                                            std::sin(state.theta));
    CHECK(std::abs(next.cg.x() - expect.x()) < 1e-12);
    CHECK(std::abs(next.cg.y() - expect.y()) < 1e-12);
  }
}

TEST_CASE("rotation_time: zero angle costs nothing") {
  CHECK(rotation_time(0.0, 100, 10, 1) == 0.0);
}

TEST_CASE("rotation_time: frozen oracle value") {
  CHECK(rotation_time(kPi / 2, 100, 10, 1) ==
        doctest::Approx(3.963327297606011).epsilon(1e-9));
}

TEST_CASE("rotation_time: doubling the torque scales time by 1/sqrt(2)") {
  const double t = rotation_time(1.0, 100, 10, 1);
  const double t2 = rotation_time(1.0, 100, 20, 1);
  CHECK(t2 == doctest::Approx(t / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("rotation_time: clockwise turns cost the same as counterclockwise") {
  CHECK(rotation_time(-0.7, 100, 10, 1) ==
        doctest::Approx(rotation_time(0.7, 100, 10, 1)));
}

TEST_CASE("rotation_time: vanishing torque with a turn is infeasible") {
  CHECK_THROWS_AS(rotation_time(0.5, 100, 0, 1), std::domain_error);
  CHECK_THROWS_AS(rotation_time(0.5, 100, 10, 0), std::domain_error);
}

TEST_CASE("translation_time: zero distance costs nothing") {
  CHECK(translation_time(50, 0, 10) == 0.0);
}

TEST_CASE("translation_time: frozen oracle value sqrt(10)") {
  CHECK(translation_time(50, 2, 10) ==
        doctest::Approx(3.1622776601683795).epsilon(1e-9));
}

TEST_CASE("translation_time: quadrupling the distance doubles the time") {
  CHECK(translation_time(50, 8, 10) ==
        doctest::Approx(2.0 * translation_time(50, 2, 10)).epsilon(1e-12));
}

TEST_CASE("translation_time: zero force with a move is infeasible") {
  CHECK_THROWS_AS(translation_time(50, 1, 0), std::domain_error);
}

TEST_CASE("remaining_distance: 3-4-5 triangle and degenerate cases") {
  CHECK(remaining_distance(Vec2(3, 4), Vec2(0, 0)) == doctest::Approx(5.0));
  CHECK(remaining_distance(Vec2(2, 2), Vec2(2, 2)) == 0.0);
  CHECK(remaining_distance(Vec2(1, 1), Vec2(4, 5)) == doctest::Approx(5.0));
}

TEST_CASE("secondary_time: k sqrt(S)") {
  CHECK(secondary_time(0, 1) == 0.0);
  CHECK(secondary_time(5, 1) == doctest::Approx(2.23606797749979).epsilon(1e-9));
  CHECK(secondary_time(4, 2) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("rotation_energy: frozen oracle value 10 pi") {
  CHECK(rotation_energy(10, 1, 0) == 0.0);
  CHECK(rotation_energy(10, 1, kPi / 2) ==
        doctest::Approx(31.41592653589793).epsilon(1e-9));
  CHECK(rotation_energy(20, 3, 0.5) ==
        doctest::Approx(2 * rotation_energy(10, 3, 0.5)).epsilon(1e-12));
}

TEST_CASE("translation_energy: 2 f d") {
  CHECK(translation_energy(10, 0) == 0.0);
  CHECK(translation_energy(10, 2) == doctest::Approx(40.0));
  CHECK(translation_energy(7.5, 4) == doctest::Approx(60.0));
}

TEST_CASE("secondary_energy: k1 S") {
  CHECK(secondary_energy(0, 10) == 0.0);
  CHECK(secondary_energy(5, 10) == doctest::Approx(50.0));
  CHECK(secondary_energy(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("clearance: axis-aligned box in an empty workspace") {
  WorldMap world = open_world();
  const BoxState state = make_box_state(Vec2(10, 10), 0.0, 8, 4);
  // Corners (6,8),(14,8),(14,12),(6,12): 6 to the left wall, 8 to the bottom,
  // no obstacles so the capped term contributes 20.
  CHECK(clearance(state, world) == doctest::Approx(34.0).epsilon(1e-12));
}

TEST_CASE("clearance: circle obstacle enters through the capped term") {
  WorldMap world = open_world();
  world.obstacles.push_back(Circle{Vec2(20, 10), 2.0});
  const BoxState state = make_box_state(Vec2(10, 10), 0.0, 8, 4);
  CHECK(clearance(state, world) == doctest::Approx(18.0).epsilon(1e-9));
}

TEST_CASE("clearance: rect obstacle boundary-to-boundary distance") {
  WorldMap world = open_world();
  world.obstacles.push_back(Rect{Vec2(20, 8), Vec2(30, 12)});
  const BoxState state = make_box_state(Vec2(10, 10), 0.0, 8, 4);
  CHECK(clearance(state, world) == doctest::Approx(6.0 + 8.0 + 6.0));
}

TEST_CASE("clearance: touching the left wall zeroes that component") {
  WorldMap world = open_world();
  const BoxState state = make_box_state(Vec2(4, 10), 0.0, 8, 4);
  CHECK(clearance(state, world) == doctest::Approx(0.0 + 8.0 + 20.0));
}

TEST_CASE("penalty: boundary values and the frozen oracle") {
  CHECK(penalty(0, 1000) == doctest::Approx(1000.0));
  CHECK(penalty(10, 1000) == doctest::Approx(0.9765625).epsilon(1e-9));
  CHECK(penalty(60, 1000) < 1e-12);
  CHECK(penalty(60, 1000) > 0.0);
}

TEST_CASE("penalty: strictly decreasing in the clearance") {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(0, 50);
    const double b = a + rng.uniform(1e-9, 10);
    CHECK(penalty(a, 1000) > penalty(b, 1000));
  }
}

TEST_CASE("evaluate: null move leaves only the secondary terms") {
  WorldMap world = open_world();
  DecisionVector d;
  d.pivot = world.start.contact_e;
  d.rotation_force = 10;
  d.translation_force = 10;
  d.moment_arm = 1;
  d.travel_distance = 0;
  d.turn_angle = 0;
  const ObjectiveBreakdown out = evaluate(d, world.start, world);
  CHECK(out.feasible);
  CHECK(out.t1 == 0.0);
  CHECK(out.t2 == 0.0);
  CHECK(out.e1 == 0.0);
  CHECK(out.e2 == 0.0);
  CHECK(out.f1 == doctest::Approx(out.t3));
  CHECK(out.f2 == doctest::Approx(out.e3 + out.e4));
}

TEST_CASE("evaluate: components compose additively from the unit oracles") {
  WorldMap world = open_world();
  const BoxState state = make_box_state(Vec2(30, 30), 0.2, 8, 4);
  DecisionVector d;
  d.pivot = state.contact_e;  // on the rear face, so projection is a no-op
  d.rotation_force = 12;
  d.translation_force = 9;
  d.moment_arm = 1.5;
  d.travel_distance = 4;
  d.turn_angle = 0.4;
  const ObjectiveBreakdown out = evaluate(d, state, world);
  REQUIRE(out.feasible);

  const BoxState next = apply_decision(state, d);
  const double s = remaining_distance(next.cg, world.goal_cg);
  const PhysicalParams& pp = world.params;
  CHECK(out.t1 == doctest::Approx(rotation_time(0.4, pp.inertia, 12, 1.5))
                      .epsilon(1e-12));
  CHECK(out.t2 ==
        doctest::Approx(translation_time(pp.mass, 4, 9)).epsilon(1e-12));
  CHECK(out.t3 == doctest::Approx(secondary_time(s, pp.k)).epsilon(1e-12));
  CHECK(out.e1 ==
        doctest::Approx(rotation_energy(12, 1.5, 0.4)).epsilon(1e-12));
  CHECK(out.e2 == doctest::Approx(translation_energy(9, 4)).epsilon(1e-12));
  CHECK(out.e3 == doctest::Approx(secondary_energy(s, pp.k1)).epsilon(1e-12));
  CHECK(out.e4 ==
        doctest::Approx(penalty(clearance(next, world), pp.k2)).epsilon(1e-12));
  CHECK(out.f1 == doctest::Approx(out.t1 + out.t2 + out.t3));
  CHECK(out.f2 == doctest::Approx(out.e1 + out.e2 + out.e3 + out.e4));
  CHECK(out.s_remaining == doctest::Approx(s));
}

TEST_CASE("evaluate: pushing through an obstacle yields the infeasible marker") {
  WorldMap world = open_world();
  world.obstacles.push_back(Rect{Vec2(16, 5), Vec2(24, 15)});
  DecisionVector d;
  d.pivot = world.start.contact_e;
  d.rotation_force = 10;
  d.translation_force = 10;
  d.moment_arm = 1;
  d.travel_distance = 8;  // drives the box straight into the block
  d.turn_angle = 0;
  const ObjectiveBreakdown out = evaluate(d, world.start, world);
  CHECK_FALSE(out.feasible);
  CHECK(std::isinf(out.f1));
  CHECK(std::isinf(out.f2));
}

TEST_CASE("evaluate: leaving the workspace yields the infeasible marker") {
  WorldMap world = open_world();
  DecisionVector d;
  d.pivot = world.start.contact_e;
  d.rotation_force = 10;
  d.translation_force = 10;
  d.moment_arm = 1;
  d.travel_distance = 0;
  d.turn_angle = 0;
  BoxState near_wall = make_box_state(Vec2(4.4, 50), 0.0, 8, 4);
  d.travel_distance = 0;
  d.turn_angle = -kPi / 2;  // swings the footprint across the left wall
  const ObjectiveBreakdown out = evaluate(d, near_wall, world);
  CHECK_FALSE(out.feasible);
}

TEST_CASE("evaluate: time falls and drive energy rises with force") {
  WorldMap world = open_world();
  const BoxState state = make_box_state(Vec2(30, 30), 0.2, 8, 4);
  DecisionVector lo, hi;
  lo.pivot = hi.pivot = state.contact_e;
  lo.moment_arm = hi.moment_arm = 1.5;
  lo.travel_distance = hi.travel_distance = 5;
  lo.turn_angle = hi.turn_angle = 0.3;
  lo.rotation_force = lo.translation_force = 10;
  hi.rotation_force = hi.translation_force = 40;
  const ObjectiveBreakdown a = evaluate(lo, state, world);
  const ObjectiveBreakdown b = evaluate(hi, state, world);
  CHECK(b.f1 < a.f1);
  CHECK(b.e1 + b.e2 > a.e1 + a.e2);
}

TEST_CASE("breakdown components are non-negative for feasible decisions") {
  WorldMap world = open_world();
  Rng rng(41);
  int feasible_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const BoxState state = random_state(rng);
    const Bounds b = decision_bounds(state, world);
    Eigen::VectorXd x(7);
    for (int i = 0; i < 7; ++i) x[i] = rng.uniform(b.lower[i], b.upper[i]);
    const ObjectiveBreakdown out =
        evaluate(decision_from_vector(x), state, world);
    if (!out.feasible) continue;
    ++feasible_seen;
    for (double v : {out.t1, out.t2, out.t3, out.e1, out.e2, out.e3, out.e4}) {
      CHECK(v >= 0.0);
    }
    CHECK(out.f1 == doctest::Approx(out.t1 + out.t2 + out.t3));
    CHECK(out.f2 == doctest::Approx(out.e1 + out.e2 + out.e3 + out.e4));
  }
  CHECK(feasible_seen > 100);
}

TEST_CASE("make_box_state: contacts sit on the rear face and validate") {
  const BoxState state = make_box_state(Vec2(10, 20), 0.7, 8, 4);
  CHECK(check_box_state(state).empty());
  CHECK((state.contact_e - state.contact_f).norm() == doctest::Approx(2.0));
  BoxState broken = state;
  broken.contact_e = state.cg;  // cg is not on the rear face
  CHECK_FALSE(check_box_state(broken).empty());
}

TEST_CASE("decision vector round-trips through its flat layout") {
  DecisionVector d;
  d.pivot = Vec2(1.5, -2.5);
  d.rotation_force = 3;
  d.translation_force = 4;
  d.moment_arm = 0.5;
  d.travel_distance = 6;
  d.turn_angle = -0.25;
  const DecisionVector back = decision_from_vector(decision_to_vector(d));
  CHECK(back.pivot == d.pivot);
  CHECK(back.rotation_force == d.rotation_force);
  CHECK(back.translation_force == d.translation_force);
  CHECK(back.moment_arm == d.moment_arm);
  CHECK(back.travel_distance == d.travel_distance);
  CHECK(back.turn_angle == d.turn_angle);
}

TEST_CASE("decision_bounds: moment arm tracks |EF| and angles are symmetric") {
  const WorldMap world = open_world();
  const Bounds b = decision_bounds(world.start, world);
  REQUIRE(b.dimension() == 7);
  CHECK(b.upper[4] == doctest::Approx(2.0));   // |EF| = width / 2
  CHECK(b.lower[4] == doctest::Approx(0.02));  // 0.01 |EF|
  CHECK(b.lower[6] == doctest::Approx(-world.params.alpha_max));
  CHECK(b.upper[6] == doctest::Approx(world.params.alpha_max));
  CHECK(b.lower[0] == 0.0);
  CHECK(b.upper[1] == 100.0);
}
