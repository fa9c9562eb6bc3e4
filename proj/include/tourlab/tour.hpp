#pragma once

#include <utility>
#include <vector>

#include "tourlab/geometry.hpp"
#include "tourlab/instance.hpp"

namespace tourlab {

// An oriented tour: a cyclic sequence of vertex indices of an instance.
// Doubles as a polygon (point sequence) and as a directed cycle.
struct Tour {
    std::vector<int> order;

    int n() const { return static_cast<int>(order.size()); }
    int at(int pos) const {
        int m = n();
        return order[((pos % m) + m) % m];
    }
};

// Throws std::invalid_argument unless t is a permutation of 0..n-1, n >= 3.
void validate_tour(const Instance& inst, const Tour& t);

double edge_length(const Instance& inst, int u, int v);

// Sum of edge lengths in a fixed order: starting at the lowest vertex index,
// walking toward its smaller-indexed neighbor. Invariant under rotations and
// reversals of the stored order, bit for bit.
double tour_length(const Instance& inst, const Tour& t);

// Rotates to start at the lowest vertex index and orients the tour so the
// second vertex is the smaller-indexed of the start's two neighbors.
Tour canonical_form(const Tour& t);

Tour reversed(const Tour& t);

// Directed edges (tail, head) in tour order.
std::vector<std::pair<int, int>> tour_edges(const Tour& t);

Segment edge_segment(const Instance& inst, int u, int v);

std::vector<Point> tour_polygon(const Instance& inst, const Tour& t);

}  // namespace tourlab
