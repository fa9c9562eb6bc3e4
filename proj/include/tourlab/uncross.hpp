#pragma once

#include <vector>

#include "tourlab/tour.hpp"

namespace tourlab {

// A crossing of tour edges, identified by the edge positions in each tour.
struct Crossing {
    int t_edge = -1;
    int s_edge = -1;
    Point where;
};

struct CrossingReport {
    std::vector<Crossing> crossings;
    int count() const { return static_cast<int>(crossings.size()); }
};

// All points where an edge of t and an edge of s intersect in exactly one
// point interior to both segments. Exact coordinates.
CrossingReport enumerate_crossings(const Instance& inst, const Tour& t, const Tour& s);

bool is_crossing_free(const Instance& inst, const Tour& t, const Tour& s);

// The instance extended by the crossing points, with both tours re-threaded
// through them. Original vertices keep their indices; crossing points are
// appended ordered by (t-edge, position along the edge).
struct SubdividedPair {
    Instance v_prime;
    Tour t_prime;
    Tour s_prime;
    int original_n = 0;
    int crossing_count = 0;

    int n_prime() const { return v_prime.n(); }
};

// Requires simple input tours. Throws CoincidentPoint when a crossing point
// equals an instance point (degenerate input to resolve upstream).
SubdividedPair subdivide_pair(const Instance& inst, const Tour& t, const Tour& s);

}  // namespace tourlab
