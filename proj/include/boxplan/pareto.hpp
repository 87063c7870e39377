#pragma once

#include <Eigen/Core>
#include <vector>

namespace boxplan {

// Objective vectors are minimized component-wise. k is fixed per problem
// instance (2 for the box-pushing objectives).
using ObjectiveVector = Eigen::VectorXd;

// Per-dimension box constraints of a search space.
struct Bounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  Eigen::Index dimension() const { return lower.size(); }
};

bool all_finite(const ObjectiveVector& v);

// Pareto dominance (minimization): u_i <= v_i for all i and u_i < v_i for at
// least one i. Throws std::invalid_argument on length mismatch.
bool dominates(const ObjectiveVector& u, const ObjectiveVector& v);

// Indices of the points dominated by no other point in the list. Duplicates
// of a non-dominated vector are all retained. Throws std::invalid_argument on
// empty input.
std::vector<std::size_t> nondominated_filter(
    const std::vector<ObjectiveVector>& points);

}  // namespace boxplan
