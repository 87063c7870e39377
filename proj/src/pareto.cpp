#include "boxplan/pareto.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace boxplan {

bool all_finite(const ObjectiveVector& v) { return v.allFinite(); }

bool dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("dominates: objective vectors differ in length");
  }
  bool strict = false;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
    if (u[i] < v[i]) strict = true;
  }
  return strict;
}

namespace {

// Two-objective case: sort by (f1, f2) and sweep. A point survives iff it has
// the smallest f2 within its f1 group and beats the best f2 seen at any
// strictly smaller f1.
std::vector<std::size_t> filter_biobjective(
    const std::vector<ObjectiveVector>& points) {
  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a][0] != points[b][0]) return points[a][0] < points[b][0];
    return points[a][1] < points[b][1];
  });

  std::vector<std::size_t> keep;
  double best_f2 = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    const double f1 = points[order[i]][0];
    const double group_min_f2 = points[order[i]][1];
    while (j < n && points[order[j]][0] == f1) {
      if (points[order[j]][1] == group_min_f2 && group_min_f2 < best_f2) {
        keep.push_back(order[j]);
      }
      ++j;
    }
    best_f2 = std::min(best_f2, group_min_f2);
    i = j;
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

// General case: incremental archive filter. Survivors after all insertions
// are exactly the non-dominated points.
std::vector<std::size_t> filter_general(
    const std::vector<ObjectiveVector>& points) {
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    std::vector<std::size_t> next;
    next.reserve(survivors.size() + 1);
    for (std::size_t s : survivors) {
      if (dominates(points[s], points[i])) dominated = true;
      if (!dominates(points[i], points[s])) next.push_back(s);
    }
    if (!dominated) next.push_back(i);
    survivors = std::move(next);
  }
  std::sort(survivors.begin(), survivors.end());
  return survivors;
}

}  // namespace

std::vector<std::size_t> nondominated_filter(
    const std::vector<ObjectiveVector>& points) {
  if (points.empty()) {
    throw std::invalid_argument("nondominated_filter: empty input");
  }
  const Eigen::Index k = points.front().size();
  for (const auto& p : points) {
    if (p.size() != k) {
      throw std::invalid_argument(
          "nondominated_filter: inconsistent objective lengths");
    }
  }
  if (k == 2) return filter_biobjective(points);
  return filter_general(points);
}

}  // namespace boxplan
