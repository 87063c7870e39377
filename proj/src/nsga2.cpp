#include "boxplan/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "boxplan/rng.hpp"

namespace boxplan {

std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    const std::vector<ObjectiveVector>& objectives) {
  if (objectives.empty()) {
    throw std::invalid_argument("fast_nondominated_sort: empty population");
  }
  const std::size_t n = objectives.size();
  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<int> domination_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(objectives[i], objectives[j])) {
        dominated_by[i].push_back(j);
        ++domination_count[j];
      } else if (dominates(objectives[j], objectives[i])) {
        dominated_by[j].push_back(i);
        ++domination_count[i];
      }
    }
  }
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    if (domination_count[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    fronts.push_back(current);
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      for (std::size_t j : dominated_by[i]) {
        if (--domination_count[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(
    const std::vector<ObjectiveVector>& front) {
  if (front.empty()) {
    throw std::invalid_argument("crowding_distance: empty front");
  }
  const std::size_t n = front.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> crowding(n, 0.0);
  if (n <= 2) {
    std::fill(crowding.begin(), crowding.end(), inf);
    return crowding;
  }
  const Eigen::Index k = front.front().size();
  std::vector<std::size_t> order(n);
  for (Eigen::Index m = 0; m < k; ++m) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                     std::size_t b) {
      return front[a][m] < front[b][m];
    });
    crowding[order.front()] = inf;
    crowding[order.back()] = inf;
    const double range = front[order.back()][m] - front[order.front()][m];
    if (range == 0.0 || !std::isfinite(range)) continue;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double gap = front[order[i + 1]][m] - front[order[i - 1]][m];
      if (std::isfinite(gap)) crowding[order[i]] += gap / range;
    }
  }
  return crowding;
}

namespace {

struct Individual {
  Eigen::VectorXd position;
  ObjectiveVector objectives;
  int rank = 0;
  double crowding = 0.0;
};

void rank_population(std::vector<Individual>& pop) {
  std::vector<ObjectiveVector> objectives;
  objectives.reserve(pop.size());
  for (const auto& ind : pop) objectives.push_back(ind.objectives);
  const auto fronts = fast_nondominated_sort(objectives);
  for (std::size_t f = 0; f < fronts.size(); ++f) {
    std::vector<ObjectiveVector> front_objs;
    front_objs.reserve(fronts[f].size());
    for (std::size_t i : fronts[f]) front_objs.push_back(objectives[i]);
    const auto crowd = crowding_distance(front_objs);
    for (std::size_t i = 0; i < fronts[f].size(); ++i) {
      pop[fronts[f][i]].rank = static_cast<int>(f);
      pop[fronts[f][i]].crowding = crowd[i];
    }
  }
}

// Lower rank wins; equal ranks prefer the larger crowding distance.
const Individual& tournament(const Individual& a, const Individual& b) {
  if (a.rank != b.rank) return a.rank < b.rank ? a : b;
  return a.crowding >= b.crowding ? a : b;
}

void sbx_crossover(Eigen::VectorXd& a, Eigen::VectorXd& b, const Bounds& bounds,
                   double eta, Rng& rng) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (rng.uniform01() >= 0.5) continue;
    if (std::abs(a[i] - b[i]) < 1e-14) continue;
    const double u = rng.uniform01();
    const double beta = u <= 0.5
                            ? std::pow(2.0 * u, 1.0 / (eta + 1.0))
                            : std::pow(1.0 / (2.0 * (1.0 - u)),
                                       1.0 / (eta + 1.0));
    const double c1 = 0.5 * ((1.0 + beta) * a[i] + (1.0 - beta) * b[i]);
    const double c2 = 0.5 * ((1.0 - beta) * a[i] + (1.0 + beta) * b[i]);
    a[i] = std::clamp(c1, bounds.lower[i], bounds.upper[i]);
    b[i] = std::clamp(c2, bounds.lower[i], bounds.upper[i]);
  }
}

void polynomial_mutation(Eigen::VectorXd& x, const Bounds& bounds, double prob,
                         double eta, Rng& rng) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (rng.uniform01() >= prob) continue;
    const double lo = bounds.lower[i];
    const double hi = bounds.upper[i];
    const double span = hi - lo;
    if (span <= 0.0) continue;
    const double u = rng.uniform01();
    double delta;
    if (u < 0.5) {
      const double d1 = (x[i] - lo) / span;
      delta = std::pow(2.0 * u + (1.0 - 2.0 * u) *
                                     std::pow(1.0 - d1, eta + 1.0),
                       1.0 / (eta + 1.0)) -
              1.0;
    } else {
      const double d2 = (hi - x[i]) / span;
      delta = 1.0 - std::pow(2.0 * (1.0 - u) + 2.0 * (u - 0.5) *
                                                   std::pow(1.0 - d2,
                                                            eta + 1.0),
                             1.0 / (eta + 1.0));
    }
    x[i] = std::clamp(x[i] + delta * span, lo, hi);
  }
}

}  // namespace

std::vector<RankedIndividual> run_nsga2(const ObjectiveFn& problem,
                                        const Nsga2Config& config) {
  const Eigen::Index dim = config.bounds.dimension();
  if (dim == 0 || config.population <= 0 || config.generations <= 0 ||
      config.crossover_prob < 0.0 || config.crossover_prob > 1.0 ||
      config.bounds.upper.size() != dim) {
    throw std::invalid_argument("run_nsga2: invalid configuration");
  }
  for (Eigen::Index d = 0; d < dim; ++d) {
    if (!(config.bounds.lower[d] < config.bounds.upper[d])) {
      throw std::invalid_argument("run_nsga2: bounds require lower < upper");
    }
  }
  const std::size_t n = static_cast<std::size_t>(config.population);
  const double mutation_prob = config.mutation_prob < 0.0
                                   ? 1.0 / static_cast<double>(dim)
                                   : config.mutation_prob;
  Rng rng(config.seed);

  auto evaluate = [&](const Eigen::VectorXd& x) {
    ObjectiveVector f = problem(x);
    // NaN would poison the dominance comparisons; map it to +inf.
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      if (std::isnan(f[i])) f[i] = std::numeric_limits<double>::infinity();
    }
    return f;
  };

  std::vector<Individual> pop(n);
  for (auto& ind : pop) {
    ind.position.resize(dim);
    for (Eigen::Index d = 0; d < dim; ++d) {
      ind.position[d] =
          rng.uniform(config.bounds.lower[d], config.bounds.upper[d]);
    }
    ind.objectives = evaluate(ind.position);
  }
  rank_population(pop);

  for (int gen = 0; gen < config.generations; ++gen) {
    std::vector<Individual> offspring;
    offspring.reserve(n);
    while (offspring.size() < n) {
      const Individual& p1 =
          tournament(pop[rng.uniform_index(n)], pop[rng.uniform_index(n)]);
      const Individual& p2 =
          tournament(pop[rng.uniform_index(n)], pop[rng.uniform_index(n)]);
      Eigen::VectorXd c1 = p1.position;
      Eigen::VectorXd c2 = p2.position;
      if (rng.uniform01() < config.crossover_prob) {
        sbx_crossover(c1, c2, config.bounds, config.sbx_eta, rng);
      }
      polynomial_mutation(c1, config.bounds, mutation_prob,
                          config.mutation_eta, rng);
      polynomial_mutation(c2, config.bounds, mutation_prob,
                          config.mutation_eta, rng);
      ObjectiveVector f1 = evaluate(c1);
      offspring.push_back({std::move(c1), std::move(f1)});
      if (offspring.size() < n) {
        ObjectiveVector f2 = evaluate(c2);
        offspring.push_back({std::move(c2), std::move(f2)});
      }
    }

    std::vector<Individual> combined;
    combined.reserve(2 * n);
    for (auto& ind : pop) combined.push_back(std::move(ind));
    for (auto& ind : offspring) combined.push_back(std::move(ind));
    rank_population(combined);

    // Fill by rank; truncate the split front by descending crowding, stable
    // by index so equal crowding keeps a deterministic order.
    std::vector<std::size_t> order(combined.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       if (combined[a].rank != combined[b].rank) {
                         return combined[a].rank < combined[b].rank;
                       }
                       return combined[a].crowding > combined[b].crowding;
                     });
    std::vector<Individual> next;
    next.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      next.push_back(std::move(combined[order[i]]));
    }
    pop = std::move(next);
    rank_population(pop);
  }

  std::vector<RankedIndividual> front;
  for (const auto& ind : pop) {
    if (ind.rank == 0 && all_finite(ind.objectives)) {
      front.push_back({ind.position, ind.objectives, ind.rank, ind.crowding});
    }
  }
  return front;
}

}  // namespace boxplan
