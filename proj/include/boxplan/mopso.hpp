#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "boxplan/archive.hpp"
#include "boxplan/pareto.hpp"
#include "boxplan/rng.hpp"

namespace boxplan {

struct Particle {
  Eigen::VectorXd position;
  Eigen::VectorXd velocity;
  ObjectiveVector objectives;
  Eigen::VectorXd pbest_position;
  ObjectiveVector pbest_objectives;
};

struct MopsoConfig {
  int population = 60;
  int iterations = 60;
  double inertia = 0.4;
  std::size_t archive_capacity = 100;
  int grid_divisions = 30;
  double mutation_rate = 1.0;  // in (0, 1]; schedule exponent is 5/mutation_rate
  Bounds bounds;
  std::uint64_t seed = 0;
};

struct MopsoDiagnostics {
  std::size_t infeasible_evaluations = 0;  // evaluator returned non-finite
  std::size_t leaderless_updates = 0;      // archive was empty, pbest used
};

struct MopsoResult {
  Archive archive;
  MopsoDiagnostics diagnostics;
};

using ObjectiveFn = std::function<ObjectiveVector(const Eigen::VectorXd&)>;

// Called after each iteration's archive/grid/pbest updates.
using IterationObserver = std::function<void(int iteration, const Archive&)>;

// vel' = w*vel + R1*(pbest - pos) + R2*(gbest - pos); R1, R2 are scalar,
// drawn fresh and uniform on (0,1), one per call, applied to the whole vector.
template <UniformSampler R>
Eigen::VectorXd update_velocity(const Particle& p,
                                const Eigen::VectorXd& gbest, double w,
                                R& rng) {
  const double r1 = rng.uniform01();
  const double r2 = rng.uniform01();
  return w * p.velocity + r1 * (p.pbest_position - p.position) +
         r2 * (gbest - p.position);
}

// position += velocity; a dimension leaving its bounds is clamped to the
// violated bound and its velocity component negated.
void advance_position(Particle& p, const Bounds& bounds);

// Dominance-based personal-best update; a mutual non-dominated tie is broken
// uniformly at random. Non-finite current objectives never replace the pbest;
// a finite candidate always replaces a non-finite pbest.
template <UniformSampler R>
void update_pbest(Particle& p, R& rng) {
  const bool current_ok = all_finite(p.objectives);
  const bool pbest_ok = all_finite(p.pbest_objectives);
  if (!current_ok) return;
  bool take = false;
  if (!pbest_ok) {
    take = true;
  } else if (dominates(p.objectives, p.pbest_objectives)) {
    take = true;
  } else if (!dominates(p.pbest_objectives, p.objectives)) {
    take = rng.uniform01() < 0.5;
  }
  if (take) {
    p.pbest_position = p.position;
    p.pbest_objectives = p.objectives;
  }
}

// Decay schedule shared by the mutation probability and mutation range.
inline double mutation_decay(int current_gen, int tot_gen, double mut_rate) {
  const double base = 1.0 - static_cast<double>(current_gen) / tot_gen;
  return std::pow(base, 5.0 / mut_rate);
}

// With probability (1 - g/tot)^(5/mut_rate), one uniformly chosen dimension
// is resampled uniformly on [pos - mutrange, pos + mutrange] clipped to its
// bounds, where mutrange = (ub - lb) * (1 - g/tot)^(5/mut_rate).
template <UniformSampler R>
void mutate(Particle& p, int current_gen, int tot_gen, double mut_rate,
            const Bounds& bounds, R& rng) {
  const double decay = mutation_decay(current_gen, tot_gen, mut_rate);
  if (!(rng.uniform01() < decay)) return;
  const auto dim = static_cast<Eigen::Index>(
      rng.uniform_index(static_cast<std::size_t>(p.position.size())));
  const double range = (bounds.upper[dim] - bounds.lower[dim]) * decay;
  const double lo = std::max(p.position[dim] - range, bounds.lower[dim]);
  const double hi = std::min(p.position[dim] + range, bounds.upper[dim]);
  p.position[dim] = rng.uniform(lo, hi);
}

// Full archive-guided swarm loop. Deterministic per seed: equal seeds and
// configs give element-for-element equal archives. Non-finite evaluations are
// kept out of the archive and counted in diagnostics.
MopsoResult run_mopso(const ObjectiveFn& problem, const MopsoConfig& config);
MopsoResult run_mopso(const ObjectiveFn& problem, const MopsoConfig& config,
                      const IterationObserver& observer);

}  // namespace boxplan
