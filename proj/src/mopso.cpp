#include "boxplan/mopso.hpp"

#include <stdexcept>
#include <utility>

namespace boxplan {

void advance_position(Particle& p, const Bounds& bounds) {
  p.position += p.velocity;
  for (Eigen::Index i = 0; i < p.position.size(); ++i) {
    if (p.position[i] < bounds.lower[i]) {
      p.position[i] = bounds.lower[i];
      p.velocity[i] = -p.velocity[i];
    } else if (p.position[i] > bounds.upper[i]) {
      p.position[i] = bounds.upper[i];
      p.velocity[i] = -p.velocity[i];
    }
  }
}

MopsoResult run_mopso(const ObjectiveFn& problem, const MopsoConfig& config) {
  return run_mopso(problem, config, IterationObserver{});
}

MopsoResult run_mopso(const ObjectiveFn& problem, const MopsoConfig& config,
                      const IterationObserver& observer) {
  const Eigen::Index dim = config.bounds.dimension();
  if (dim == 0 || config.population <= 0 || config.iterations <= 0 ||
      config.inertia < 0.0 || config.archive_capacity == 0 ||
      config.grid_divisions < 1 || config.mutation_rate <= 0.0 ||
      config.mutation_rate > 1.0 || config.bounds.upper.size() != dim) {
    throw std::invalid_argument("run_mopso: invalid configuration");
  }
  for (Eigen::Index d = 0; d < dim; ++d) {
    if (!(config.bounds.lower[d] < config.bounds.upper[d])) {
      throw std::invalid_argument("run_mopso: bounds require lower < upper");
    }
  }

  Rng rng(config.seed);
  MopsoResult result;
  result.archive.capacity = config.archive_capacity;

  auto evaluate = [&](const Eigen::VectorXd& x) {
    ObjectiveVector f = problem(x);
    if (!all_finite(f)) ++result.diagnostics.infeasible_evaluations;
    return f;
  };

  std::vector<Particle> swarm(static_cast<std::size_t>(config.population));
  for (auto& p : swarm) {
    p.position.resize(dim);
    for (Eigen::Index d = 0; d < dim; ++d) {
      p.position[d] =
          rng.uniform(config.bounds.lower[d], config.bounds.upper[d]);
    }
    p.velocity = Eigen::VectorXd::Zero(dim);
    p.objectives = evaluate(p.position);
    p.pbest_position = p.position;
    p.pbest_objectives = p.objectives;
    if (all_finite(p.objectives)) {
      insert_archive({p.position, p.objectives}, result.archive,
                     config.grid_divisions, rng);
    }
  }
  Grid grid = result.archive.empty()
                  ? Grid{}
                  : build_grid(result.archive, config.grid_divisions);

  for (int iter = 0; iter < config.iterations; ++iter) {
    for (auto& p : swarm) {
      Eigen::VectorXd gbest;
      if (!result.archive.empty()) {
        gbest = select_leader(result.archive, grid, rng);
      } else {
        gbest = p.pbest_position;
        ++result.diagnostics.leaderless_updates;
      }
      p.velocity = update_velocity(p, gbest, config.inertia, rng);
      advance_position(p, config.bounds);
      mutate(p, iter, config.iterations, config.mutation_rate, config.bounds,
             rng);
    }
    for (auto& p : swarm) {
      p.objectives = evaluate(p.position);
      if (all_finite(p.objectives)) {
        insert_archive({p.position, p.objectives}, result.archive,
                       config.grid_divisions, rng);
      }
    }
    if (!result.archive.empty()) {
      grid = build_grid(result.archive, config.grid_divisions);
    }
    for (auto& p : swarm) {
      update_pbest(p, rng);
    }
    if (observer) observer(iter, result.archive);
  }
  return result;
}

}  // namespace boxplan
