#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tourlab/rational.hpp"

namespace tourlab {

enum class Orientation { kClockwise, kCounterClockwise, kCollinear };

// Sign of the cross product (q - p) x (r - p), exact.
Orientation orientation(const Point& p, const Point& q, const Point& r);

struct Segment {
    Point a;
    Point b;
    Segment(Point pa, Point pb);  // throws std::invalid_argument when pa == pb
};

// The unique intersection point when the open interiors of s and t meet in
// exactly one point. Disjoint, endpoint-touching and collinear-overlap
// configurations yield nothing.
std::optional<Point> proper_crossing(const Segment& s, const Segment& t);

// p lies on the closed segment s.
bool point_on_segment(const Point& p, const Segment& s);

// p lies on s strictly between the endpoints.
bool point_in_segment_interior(const Point& p, const Segment& s);

// The segments intersect in a point interior to at least one of them
// (proper crossings, T-configurations, collinear overlaps).
bool segments_share_interior_point(const Segment& s, const Segment& t);

// Squared-length-scaled parameter of p along s: (p - a) . (b - a).
// Monotone in the distance from s.a for points on the segment.
Rat param_along(const Segment& s, const Point& p);

enum class Containment { kInterior, kExterior, kBoundary };

bool polygon_is_simple(std::span<const Point> poly);

// Exact classification against a simple polygon given in cyclic order.
// Throws std::invalid_argument for non-simple input.
Containment point_in_polygon(const Point& p, std::span<const Point> poly);

// Same, skipping the simplicity validation (for callers that validated the
// polygon once and query it many times).
Containment point_in_polygon_unchecked(const Point& p, std::span<const Point> poly);

bool all_collinear(std::span<const Point> points);

}  // namespace tourlab
