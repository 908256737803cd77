#pragma once

#include "cbsg/body.hpp"
#include "cbsg/lattice_cone.hpp"

#include <string>
#include <vector>

namespace cbsg {

struct PlotInput {
    ConvexBody2 body;
    std::int64_t dilations = 3;
    std::int64_t norm_bound = 20;
    std::vector<IntVec2> members;    // semigroup points to mark
    std::vector<IntVec2> generators; // highlighted on top
    ConeAnalysis rays;
};

// Standalone SVG 1.1. The root carries data-lattice-points and
// data-generators with the number of markers of each class ("pt", "gen").
std::string render_svg(const PlotInput& in);

} // namespace cbsg
