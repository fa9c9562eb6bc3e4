#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tourlab/tour.hpp"

namespace tourlab {

struct DirectedEdge {
    int tail = -1;
    int head = -1;
    bool operator==(const DirectedEdge& o) const { return tail == o.tail && head == o.head; }
};

// Edges of s classified against the polygon of t: open segment strictly
// inside, strictly outside, or the edge is (as a set) part of the polygon.
struct EdgeClasses {
    std::vector<DirectedEdge> interior;
    std::vector<DirectedEdge> exterior;
    std::vector<DirectedEdge> on_tour;
};

// Requires a crossing-free pair of simple tours. In that case every s edge
// on the polygon of t shares both endpoints with a t edge, and no midpoint
// can sit on the polygon boundary; a Boundary midpoint raises MixedEdge.
EdgeClasses classify_edges(const Instance& inst, const Tour& t, const Tour& s);

struct AnchorPath {
    DirectedEdge anchor;     // (x0, y0), directed as traversed by s
    std::vector<int> path;   // vertices from x0 to y0 along t, the side holding
                             // the endpoints of all other edges of the set
};

// Scans the edges in the order given and returns the first whose opposite
// side along t is free of other edges' endpoints. Requires >= 2 edges.
AnchorPath choose_anchor(const Tour& t, std::span<const DirectedEdge> edges);

// Splits into edges running with the anchor path (tail before head) and
// against it. The anchor edge itself always lands in the first set.
std::pair<std::vector<DirectedEdge>, std::vector<DirectedEdge>> split_compatible(
    const AnchorPath& ap, std::span<const DirectedEdge> edges);

struct EdgePartition {
    std::vector<DirectedEdge> interior;   // strictly inside the polygon of t
    std::vector<DirectedEdge> exterior;   // strictly outside
    std::vector<DirectedEdge> on_tour;    // coincide with t edges

    std::vector<DirectedEdge> interior_forward;
    std::vector<DirectedEdge> interior_backward;
    std::vector<DirectedEdge> exterior_forward;
    std::vector<DirectedEdge> exterior_backward;

    std::optional<DirectedEdge> interior_anchor;
    std::vector<int> interior_path;
    std::optional<DirectedEdge> exterior_anchor;
    std::vector<int> exterior_path;
};

// Full five-set partition; the exterior side runs the same procedure with
// the roles of inside and outside exchanged. Sets with fewer than two edges
// are left unsplit (forward = whole set, path empty).
EdgePartition partition_all(const Instance& inst, const Tour& t, const Tour& s);

}  // namespace tourlab
