#pragma once

#include "tourlab/tour.hpp"

namespace tourlab {

// A bundled instance together with an optimal tour t and a 2-optimal tour s.
// For pair42 the optimal tour is supplied, not certified (n is beyond the
// exact solver); every inequality checked downstream only needs t simple.
struct PairFixture {
    Instance instance;
    Tour t;
    Tour s;
    bool t_certified_optimal = false;
};

// 12 points; the tours cross in exactly three points.
PairFixture pair12();

// 42 points; the tours are crossing-free.
PairFixture pair42();

// Throws std::invalid_argument for unknown names ("pair12", "pair42").
PairFixture fixture_by_name(const std::string& name);

}  // namespace tourlab
