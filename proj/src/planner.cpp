#include "boxplan/planner.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

#include "boxplan/rng.hpp"

namespace boxplan {

std::string to_string(Algorithm algo) {
  return algo == Algorithm::mopso ? "mopso" : "nsga2";
}

std::string to_string(Termination reason) {
  switch (reason) {
    case Termination::goal_reached:
      return "goal-reached";
    case Termination::step_limit:
      return "step-limit";
    case Termination::stalled:
      return "stalled";
  }
  return "unknown";
}

std::size_t select_solution(const std::vector<CandidateSolution>& members) {
  if (members.empty()) {
    throw std::invalid_argument("select_solution: no candidate solutions");
  }
  const Eigen::Index k = members.front().objectives.size();
  ObjectiveVector lo = members.front().objectives;
  ObjectiveVector hi = members.front().objectives;
  for (const auto& m : members) {
    lo = lo.cwiseMin(m.objectives);
    hi = hi.cwiseMax(m.objectives);
  }
  std::size_t best = 0;
  double best_sum = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < members.size(); ++i) {
    double sum = 0.0;
    for (Eigen::Index m = 0; m < k; ++m) {
      const double range = hi[m] - lo[m];
      if (range > 0.0) sum += (members[i].objectives[m] - lo[m]) / range;
    }
    const auto& cur = members[i].objectives;
    const auto& win = members[best].objectives;
    const bool better =
        sum < best_sum ||
        (sum == best_sum &&
         (cur[0] < win[0] || (cur[0] == win[0] && cur[1] < win[1])));
    if (i == 0 || better) {
      best = i;
      best_sum = sum;
    }
  }
  return best;
}

std::optional<StepRecord> plan_step(const BoxState& state,
                                    const WorldMap& world,
                                    const OptimizerSettings& settings,
                                    std::uint64_t seed) {
  const Bounds bounds = decision_bounds(state, world);
  const ObjectiveFn problem = [&](const Eigen::VectorXd& x) {
    const ObjectiveBreakdown b = evaluate(decision_from_vector(x), state, world);
    ObjectiveVector f(2);
    f << b.f1, b.f2;
    return f;
  };

  const auto started = std::chrono::steady_clock::now();
  std::vector<CandidateSolution> candidates;
  if (settings.algorithm == Algorithm::mopso) {
    MopsoConfig config;
    config.population = settings.population;
    config.iterations = settings.iterations;
    config.inertia = settings.inertia;
    config.archive_capacity = settings.archive_capacity;
    config.grid_divisions = settings.grid_divisions;
    config.mutation_rate = settings.mutation_rate;
    config.bounds = bounds;
    config.seed = seed;
    const MopsoResult result = run_mopso(problem, config);
    for (const auto& m : result.archive.members) {
      candidates.push_back({m.position, m.objectives});
    }
  } else {
    Nsga2Config config;
    config.population = settings.population;
    config.generations = settings.iterations;
    config.crossover_prob = settings.crossover_prob;
    config.sbx_eta = settings.sbx_eta;
    config.mutation_eta = settings.mutation_eta;
    config.bounds = bounds;
    config.seed = seed;
    for (const auto& ind : run_nsga2(problem, config)) {
      candidates.push_back({ind.position, ind.objectives});
    }
  }
  const auto finished = std::chrono::steady_clock::now();

  if (candidates.empty()) return std::nullopt;

  const std::size_t chosen = select_solution(candidates);
  StepRecord record;
  record.decision = decision_from_vector(candidates[chosen].position);
  record.objectives = evaluate(record.decision, state, world);
  record.pre_state = state;
  record.post_state = apply_decision(state, record.decision);
  record.archive_size = candidates.size();
  record.optimizer_ms =
      std::chrono::duration<double, std::milli>(finished - started).count();
  return record;
}

RunReport run_planner(const WorldMap& world, const PlannerConfig& config,
                      std::uint64_t seed) {
  RunReport report;
  report.seed = seed;
  report.algorithm = config.optimizer.algorithm;

  BoxState state = world.start;
  const double eps = world.params.epsilon;
  int step = 0;
  while (true) {
    if (remaining_distance(state.cg, world.goal_cg) <= eps) {
      report.termination = Termination::goal_reached;
      break;
    }
    if (step >= config.max_steps) {
      report.termination = Termination::step_limit;
      break;
    }
    std::optional<StepRecord> record =
        plan_step(state, world, config.optimizer, mix_seed(seed, step));
    if (!record) {
      // One retry with a reseeded optimizer, then give up.
      record = plan_step(state, world, config.optimizer,
                         mix_seed(mix_seed(seed, step), 1));
    }
    if (!record) {
      report.termination = Termination::stalled;
      break;
    }
    record->index = step;
    state = record->post_state;
    report.total_time_s += record->objectives.f1;
    report.total_energy_j += record->objectives.f2;
    report.steps.push_back(std::move(*record));
    ++step;
  }
  report.step_count = static_cast<int>(report.steps.size());
  return report;
}

}  // namespace boxplan
