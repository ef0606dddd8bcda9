#pragma once

#include <string>
#include <vector>

#include "nms/gluing.hpp"
#include "nms/simulator.hpp"

namespace nms {

// Seed fan used when the caller does not supply seeds: off-axis repeller
// points spread over heights (n=2) or over a direction ring (n>=3).
[[nodiscard]] std::vector<ChartPoint> default_portrait_seeds(const ModelFlow& f);

// Phase portrait of a surface flow (dim 2 only) as a self-contained SVG of
// the unit-square fundamental picture: x is the height coordinate, the
// middle band is the repeller chart, the outer band the attractor chart,
// periodic orbits are the three horizontal core lines (the outer two are one
// circle). Edge identification markers show the left/right gluing, flipped
// for the nonorientable handle.
[[nodiscard]] std::string render_surface_portrait(
    const ModelFlow& f, const std::vector<ChartPoint>& seeds, double horizon,
    double dt);

}  // namespace nms
