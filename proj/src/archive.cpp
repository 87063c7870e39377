#include "boxplan/archive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boxplan {

std::vector<int> grid_cell_index(const Grid& grid, const ObjectiveVector& v) {
  std::vector<int> index(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double width = (grid.upper[i] - grid.lower[i]) / grid.divisions;
    const int raw = static_cast<int>(std::floor((v[i] - grid.lower[i]) / width));
    index[static_cast<std::size_t>(i)] =
        std::clamp(raw, 0, grid.divisions - 1);
  }
  return index;
}

Grid build_grid(const Archive& archive, int divisions) {
  if (archive.empty()) {
    throw std::invalid_argument("build_grid: archive is empty");
  }
  const Eigen::Index k = archive.members.front().objectives.size();
  Grid grid;
  grid.divisions = divisions;
  grid.lower = archive.members.front().objectives;
  grid.upper = archive.members.front().objectives;
  for (const auto& m : archive.members) {
    grid.lower = grid.lower.cwiseMin(m.objectives);
    grid.upper = grid.upper.cwiseMax(m.objectives);
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    if (grid.lower[i] == grid.upper[i]) {
      grid.lower[i] -= 0.5;
      grid.upper[i] += 0.5;
    }
  }
  for (std::size_t m = 0; m < archive.members.size(); ++m) {
    grid.cells[grid_cell_index(grid, archive.members[m].objectives)]
        .push_back(m);
  }
  return grid;
}

}  // namespace boxplan
