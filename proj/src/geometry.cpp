#include "tourlab/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace tourlab {

int64_t rat_num_i64(const Rat& q) {
    if (!q.get_num().fits_slong_p()) throw std::range_error("rational numerator exceeds int64");
    return q.get_num().get_si();
}

int64_t rat_den_i64(const Rat& q) {
    if (!q.get_den().fits_slong_p()) throw std::range_error("rational denominator exceeds int64");
    return q.get_den().get_si();
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

double point_distance(const Point& a, const Point& b) {
    double dx = rat_to_double(a.x - b.x);
    double dy = rat_to_double(a.y - b.y);
    return std::sqrt(dx * dx + dy * dy);
}

std::string point_to_string(const Point& p) {
    return "(" + rat_to_string(p.x) + ", " + rat_to_string(p.y) + ")";
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    int s = rat_sign(cross);
    if (s > 0) return Orientation::kCounterClockwise;
    if (s < 0) return Orientation::kClockwise;
    return Orientation::kCollinear;
}

Segment::Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {
    if (a == b) throw std::invalid_argument("degenerate segment");
}

std::optional<Point> proper_crossing(const Segment& s, const Segment& t) {
    Orientation o1 = orientation(s.a, s.b, t.a);
    Orientation o2 = orientation(s.a, s.b, t.b);
    Orientation o3 = orientation(t.a, t.b, s.a);
    Orientation o4 = orientation(t.a, t.b, s.b);
    if (o1 == Orientation::kCollinear || o2 == Orientation::kCollinear ||
        o3 == Orientation::kCollinear || o4 == Orientation::kCollinear) {
        return std::nullopt;
    }
    if (o1 == o2 || o3 == o4) return std::nullopt;

    // Strictly opposite orientations on both sides: the supporting lines are
    // not parallel and the intersection is interior to both segments.
    Rat dsx = s.b.x - s.a.x, dsy = s.b.y - s.a.y;
    Rat dtx = t.b.x - t.a.x, dty = t.b.y - t.a.y;
    Rat denom = dsx * dty - dsy * dtx;
    Rat tau = ((t.a.x - s.a.x) * dty - (t.a.y - s.a.y) * dtx) / denom;
    return Point(s.a.x + tau * dsx, s.a.y + tau * dsy);
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != Orientation::kCollinear) return false;
    Rat dot = param_along(s, p);
    if (rat_sign(dot) < 0) return false;
    Rat len2 = (s.b.x - s.a.x) * (s.b.x - s.a.x) + (s.b.y - s.a.y) * (s.b.y - s.a.y);
    return dot <= len2;
}

bool point_in_segment_interior(const Point& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != Orientation::kCollinear) return false;
    Rat dot = param_along(s, p);
    if (rat_sign(dot) <= 0) return false;
    Rat len2 = (s.b.x - s.a.x) * (s.b.x - s.a.x) + (s.b.y - s.a.y) * (s.b.y - s.a.y);
    return dot < len2;
}

bool segments_share_interior_point(const Segment& s, const Segment& t) {
    if (proper_crossing(s, t)) return true;
    if (point_in_segment_interior(t.a, s) || point_in_segment_interior(t.b, s)) return true;
    if (point_in_segment_interior(s.a, t) || point_in_segment_interior(s.b, t)) return true;

    // Collinear segments overlapping in more than one point share interior
    // points of at least one of them.
    if (orientation(s.a, s.b, t.a) == Orientation::kCollinear &&
        orientation(s.a, s.b, t.b) == Orientation::kCollinear) {
        Rat lo_t = param_along(s, t.a), hi_t = param_along(s, t.b);
        if (lo_t > hi_t) std::swap(lo_t, hi_t);
        Rat len2 = (s.b.x - s.a.x) * (s.b.x - s.a.x) + (s.b.y - s.a.y) * (s.b.y - s.a.y);
        Rat lo = lo_t > Rat(0) ? lo_t : Rat(0);
        Rat hi = hi_t < len2 ? hi_t : len2;
        if (lo < hi) return true;
    }
    return false;
}

Rat param_along(const Segment& s, const Point& p) {
    return (p.x - s.a.x) * (s.b.x - s.a.x) + (p.y - s.a.y) * (s.b.y - s.a.y);
}

bool polygon_is_simple(std::span<const Point> poly) {
    size_t m = poly.size();
    if (m < 3) return false;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            if (poly[i] == poly[j]) return false;
        }
    }
    for (size_t i = 0; i < m; ++i) {
        Segment ei(poly[i], poly[(i + 1) % m]);
        for (size_t j = i + 1; j < m; ++j) {
            Segment ej(poly[j], poly[(j + 1) % m]);
            if (segments_share_interior_point(ei, ej)) return false;
        }
    }
    return true;
}

Containment point_in_polygon_unchecked(const Point& p, std::span<const Point> poly) {
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        if (p == poly[i]) return Containment::kBoundary;
        Segment e(poly[i], poly[(i + 1) % m]);
        if (point_in_segment_interior(p, e)) return Containment::kBoundary;
    }
    // Parity of crossings with the horizontal ray to the right of p, with the
    // half-open rule on edge endpoints.
    int crossings = 0;
    for (size_t i = 0; i < m; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % m];
        bool a_below = a.y <= p.y;
        bool b_below = b.y <= p.y;
        if (a_below == b_below) continue;
        Orientation o = orientation(a, b, p);
        if (a_below && o == Orientation::kCounterClockwise) ++crossings;   // upward edge, p left
        if (!a_below && o == Orientation::kClockwise) ++crossings;         // downward edge, p right
    }
    return (crossings % 2 == 1) ? Containment::kInterior : Containment::kExterior;
}

Containment point_in_polygon(const Point& p, std::span<const Point> poly) {
    if (!polygon_is_simple(poly)) throw std::invalid_argument("point_in_polygon: polygon is not simple");
    return point_in_polygon_unchecked(p, poly);
}

bool all_collinear(std::span<const Point> points) {
    if (points.size() <= 2) return true;
    for (size_t i = 2; i < points.size(); ++i) {
        if (orientation(points[0], points[1], points[i]) != Orientation::kCollinear) return false;
    }
    return true;
}

}  // namespace tourlab
