#pragma once

#include <Eigen/Core>
#include <map>
#include <vector>

#include "boxplan/pareto.hpp"
#include "boxplan/rng.hpp"

namespace boxplan {

struct ArchiveMember {
  Eigen::VectorXd position;
  ObjectiveVector objectives;
};

// External repository of non-dominated solutions. Members are kept in
// insertion order; no member's objectives ever dominate another's, and the
// size never exceeds capacity.
struct Archive {
  std::vector<ArchiveMember> members;
  std::size_t capacity = 100;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
};

// Equal-width hypercube partition of objective space, bounds tracking the
// current archive. cells maps a per-objective index tuple to the archive
// member indices it contains (std::map keeps tuples in lexicographic order,
// which fixes the deterministic eviction tie-break).
struct Grid {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  int divisions = 7;
  std::map<std::vector<int>, std::vector<std::size_t>> cells;
};

// Index tuple of an objective vector under the grid's bounds:
// index_i = min(floor((value_i - lo_i) / cube_width_i), divisions - 1).
std::vector<int> grid_cell_index(const Grid& grid, const ObjectiveVector& v);

// Rebuilds the partition from the archive. Per-objective bounds are the
// [min, max] over members; a degenerate objective (min == max) widens to a
// unit interval centered on the value so indexing stays total.
Grid build_grid(const Archive& archive, int divisions);

// Roulette-wheel selection of a hypercube with per-cube fitness 10/count,
// then a uniform pick among that cube's members. Returns the leader (GBEST)
// position.
template <UniformSampler R>
const Eigen::VectorXd& select_leader(const Archive& archive, const Grid& grid,
                                     R& rng) {
  double total = 0.0;
  for (const auto& [index, members] : grid.cells) {
    total += 10.0 / static_cast<double>(members.size());
  }
  double pick = rng.uniform(0.0, total);
  for (const auto& [index, members] : grid.cells) {
    pick -= 10.0 / static_cast<double>(members.size());
    if (pick < 0.0) {
      return archive.members[members[rng.uniform_index(members.size())]]
          .position;
    }
  }
  // Rounding may leave pick at ~0; fall back to the last cube.
  const auto& last = grid.cells.rbegin()->second;
  return archive.members[last[rng.uniform_index(last.size())]].position;
}

// Inserts a candidate, preserving non-domination and capacity. Rejected iff a
// member dominates it or duplicates its objectives; members it dominates are
// removed. On capacity overflow one member of the most crowded hypercube
// (lexicographically first among ties) is evicted uniformly at random, with
// the grid rebuilt beforehand. Returns whether the candidate was accepted.
template <UniformSampler R>
bool insert_archive(ArchiveMember candidate, Archive& archive,
                    int grid_divisions, R& rng) {
  for (const auto& m : archive.members) {
    if (m.objectives == candidate.objectives ||
        dominates(m.objectives, candidate.objectives)) {
      return false;
    }
  }
  std::erase_if(archive.members, [&](const ArchiveMember& m) {
    return dominates(candidate.objectives, m.objectives);
  });
  archive.members.push_back(std::move(candidate));

  if (archive.members.size() > archive.capacity) {
    const Grid grid = build_grid(archive, grid_divisions);
    const std::vector<std::size_t>* crowded = nullptr;
    for (const auto& [index, members] : grid.cells) {
      if (crowded == nullptr || members.size() > crowded->size()) {
        crowded = &members;
      }
    }
    const std::size_t victim = (*crowded)[rng.uniform_index(crowded->size())];
    archive.members.erase(archive.members.begin() +
                          static_cast<std::ptrdiff_t>(victim));
  }
  return true;
}

}  // namespace boxplan
