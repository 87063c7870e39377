#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxplan/box_model.hpp"
#include "boxplan/mopso.hpp"
#include "boxplan/nsga2.hpp"

namespace boxplan {

enum class Algorithm { mopso, nsga2 };

std::string to_string(Algorithm algo);

// Per-step optimizer budget and parameters, shared so the two algorithms run
// with equal evaluation budgets (population x iterations).
struct OptimizerSettings {
  Algorithm algorithm = Algorithm::mopso;
  int population = 60;
  int iterations = 60;
  // MOPSO
  double inertia = 0.4;
  std::size_t archive_capacity = 100;
  int grid_divisions = 30;
  double mutation_rate = 1.0;
  // NSGA-II
  double crossover_prob = 0.9;
  double sbx_eta = 20.0;
  double mutation_eta = 20.0;
};

struct PlannerConfig {
  OptimizerSettings optimizer;
  int max_steps = 50;
};

struct StepRecord {
  int index = 0;
  DecisionVector decision;
  ObjectiveBreakdown objectives;
  BoxState pre_state;
  BoxState post_state;
  std::size_t archive_size = 0;
  double optimizer_ms = 0.0;  // diagnostic only, never written to artifacts
};

enum class Termination { goal_reached, step_limit, stalled };

std::string to_string(Termination reason);

struct RunReport {
  std::vector<StepRecord> steps;
  double total_energy_j = 0.0;
  double total_time_s = 0.0;
  int step_count = 0;
  Termination termination = Termination::goal_reached;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::mopso;
};

// Candidate solutions as the optimizers hand them to the selection rule.
struct CandidateSolution {
  Eigen::VectorXd position;
  ObjectiveVector objectives;
};

// Picks the member minimizing the sum of min-max normalized objectives (a
// zero objective range normalizes to 0). Ties break by lower f1, then lower
// f2, then lowest insertion order. Throws std::invalid_argument when empty.
std::size_t select_solution(const std::vector<CandidateSolution>& members);

// One receding-horizon step: builds the 7-D problem around the current state,
// runs the configured optimizer, applies the selection rule, and commits the
// move. Returns std::nullopt when the optimizer produced no feasible member.
std::optional<StepRecord> plan_step(const BoxState& state,
                                    const WorldMap& world,
                                    const OptimizerSettings& settings,
                                    std::uint64_t seed);

// Repeats plan_step with per-step derived seeds until the cg is within the
// goal tolerance, the step limit is hit, or a step stalls twice in a row
// (one reseeded retry per step).
RunReport run_planner(const WorldMap& world, const PlannerConfig& config,
                      std::uint64_t seed);

}  // namespace boxplan
