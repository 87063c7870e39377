#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "boxplan/mopso.hpp"
#include "boxplan/pareto.hpp"

namespace boxplan {

struct RankedIndividual {
  Eigen::VectorXd position;
  ObjectiveVector objectives;
  int rank = 0;
  double crowding = 0.0;
};

struct Nsga2Config {
  int population = 100;
  int generations = 100;
  double crossover_prob = 0.9;
  double sbx_eta = 20.0;
  double mutation_prob = -1.0;  // < 0 means 1/n
  double mutation_eta = 20.0;
  Bounds bounds;
  std::uint64_t seed = 0;
};

// Partition into fronts F0, F1, ... where F0 is the non-dominated set and
// each later front is non-dominated once the earlier ones are removed.
// Throws std::invalid_argument on an empty population.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    const std::vector<ObjectiveVector>& objectives);

// Crowding values for one front: boundary individuals per objective get
// +infinity, interior ones the sum of normalized neighbor gaps (a zero
// objective range contributes 0).
std::vector<double> crowding_distance(
    const std::vector<ObjectiveVector>& front);

// Elitist (mu + lambda) NSGA-II with binary tournament on (rank, crowding),
// simulated binary crossover and polynomial mutation. Returns the rank-0
// front of the final population (non-finite members excluded). Deterministic
// per seed.
std::vector<RankedIndividual> run_nsga2(const ObjectiveFn& problem,
                                        const Nsga2Config& config);

}  // namespace boxplan
