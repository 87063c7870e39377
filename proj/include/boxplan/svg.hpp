#pragma once

#include <string>

#include "boxplan/planner.hpp"

namespace boxplan {

// Standalone SVG of a run: workspace border, obstacles, the box footprint at
// the start (highlighted) and after every step, the goal marker with its
// tolerance circle, and the cg polyline. Deterministic output for equal
// inputs.
std::string render_svg(const RunReport& report, const WorldMap& world);

}  // namespace boxplan
