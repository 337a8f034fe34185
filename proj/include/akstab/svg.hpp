#pragma once

#include <string>
#include <vector>

#include "akstab/walls.hpp"

namespace akstab {

// Marked points 0, Z_1, Z_1 + Z_2, ... and one straight segment per stable
// class [P_ij], joining the (i-1)-th and j-th points.
std::string svg_condition(const StabilityCondition& S);

// One layer per polygon vertex of the charge loop, plus wall-hit markers.
std::string svg_loop(const std::vector<GaussianRational>& start, const std::vector<std::vector<GaussianRational>>& vertices,
                     const std::vector<WallEvent>& events);

}  // namespace akstab
