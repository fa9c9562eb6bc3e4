#pragma once

#include <string>
#include <vector>

#include "tourlab/rational.hpp"

namespace tourlab {

// A finite set of pairwise distinct points in the plane.
struct Instance {
    std::string id;
    std::vector<Point> points;

    int n() const { return static_cast<int>(points.size()); }
};

// Throws std::invalid_argument on duplicate points.
void validate_instance(const Instance& inst);

}  // namespace tourlab
