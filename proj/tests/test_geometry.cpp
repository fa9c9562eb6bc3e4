#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "tourlab/fixtures.hpp"
#include "tourlab/generator.hpp"
#include "tourlab/geometry.hpp"

using namespace tourlab;

namespace {

std::vector<Point> unit_square() {
    return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
}

Orientation flip(Orientation o) {
    if (o == Orientation::kClockwise) return Orientation::kCounterClockwise;
    if (o == Orientation::kCounterClockwise) return Orientation::kClockwise;
    return Orientation::kCollinear;
}

}  // namespace

TEST_CASE("rational helpers") {
    Rat q = rat(59, 6);
    CHECK(rat_to_string(q) == "59/6");
    CHECK(rat_num_i64(q) == 59);
    CHECK(rat_den_i64(q) == 6);
    CHECK(rat_to_double(q) == doctest::Approx(59.0 / 6.0).epsilon(1e-12));
    CHECK(rat(4, 8) == rat(1, 2));
    CHECK(rat_is_integer(rat(8, 4)));
    CHECK_FALSE(rat_is_integer(rat(1, 3)));
}

TEST_CASE("orientation basics") {
    CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == Orientation::kCollinear);
    CHECK(orientation({0, 0}, {1, 0}, {1, 1}) == Orientation::kCounterClockwise);
    // Cross product by hand: (q-p) x (r-p) = (0,-8) x (3,1) = 0*1 - (-8)*3 = 24 > 0.
    CHECK(orientation({11, 12}, {11, 4}, {14, 13}) == Orientation::kCounterClockwise);
    CHECK(orientation({0, 0}, {1, 1}, {2, 0}) == Orientation::kClockwise);
}

TEST_CASE("orientation is antisymmetric in its last two arguments") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        Point p(sample_int(rng, -20, 20), sample_int(rng, -20, 20));
        Point q(sample_int(rng, -20, 20), sample_int(rng, -20, 20));
        Point r(sample_int(rng, -20, 20), sample_int(rng, -20, 20));
        CHECK(orientation(p, q, r) == flip(orientation(p, r, q)));
    }
}

TEST_CASE("proper crossing on the bundled 12-point coordinates") {
    Segment s1({11, 12}, {11, 4}), t1({14, 13}, {10, 5});
    auto p1 = proper_crossing(s1, t1);
    REQUIRE(p1.has_value());
    CHECK(*p1 == Point(11, 7));

    Segment s2({6, 9}, {12, 14}), t2({5, 13}, {11, 12});
    auto p2 = proper_crossing(s2, t2);
    REQUIRE(p2.has_value());
    CHECK(p2->x == rat(59, 6));
    CHECK(p2->y == rat(439, 36));

    Segment s3({0, 7}, {10, 5}), t3({9, 3}, {6, 9});
    auto p3 = proper_crossing(s3, t3);
    REQUIRE(p3.has_value());
    CHECK(p3->x == rat(70, 9));
    CHECK(p3->y == rat(49, 9));
}

TEST_CASE("shared endpoints, touches and overlaps are not proper crossings") {
    CHECK_FALSE(proper_crossing(Segment({0, 0}, {1, 0}), Segment({1, 0}, {2, 1})).has_value());
    // T-configuration: endpoint in the other segment's interior.
    CHECK_FALSE(proper_crossing(Segment({0, 0}, {2, 0}), Segment({1, 0}, {1, 5})).has_value());
    // Collinear overlap.
    CHECK_FALSE(proper_crossing(Segment({0, 0}, {3, 0}), Segment({1, 0}, {5, 0})).has_value());
    // Disjoint.
    CHECK_FALSE(proper_crossing(Segment({0, 0}, {1, 0}), Segment({0, 1}, {1, 1})).has_value());
}

TEST_CASE("proper crossing is symmetric and returns a point on both segments") {
    std::mt19937_64 rng(11);
    int found = 0;
    for (int iter = 0; iter < 2000; ++iter) {
        Point a(sample_int(rng, 0, 30), sample_int(rng, 0, 30));
        Point b(sample_int(rng, 0, 30), sample_int(rng, 0, 30));
        Point c(sample_int(rng, 0, 30), sample_int(rng, 0, 30));
        Point d(sample_int(rng, 0, 30), sample_int(rng, 0, 30));
        if (a == b || c == d) continue;
        Segment s(a, b), t(c, d);
        auto st = proper_crossing(s, t);
        auto ts = proper_crossing(t, s);
        CHECK(st.has_value() == ts.has_value());
        if (st) {
            ++found;
            CHECK(*st == *ts);
            CHECK(orientation(s.a, s.b, *st) == Orientation::kCollinear);
            CHECK(point_in_segment_interior(*st, s));
            CHECK(point_in_segment_interior(*st, t));
        }
    }
    CHECK(found > 100);
}

TEST_CASE("proper crossing agrees with a floating-point oracle away from endpoints") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 4000; ++iter) {
        double ax = sample_int(rng, 0, 1000), ay = sample_int(rng, 0, 1000);
        double bx = sample_int(rng, 0, 1000), by = sample_int(rng, 0, 1000);
        double cx = sample_int(rng, 0, 1000), cy = sample_int(rng, 0, 1000);
        double dx = sample_int(rng, 0, 1000), dy = sample_int(rng, 0, 1000);
        if ((ax == bx && ay == by) || (cx == dx && cy == dy)) continue;

        double det = (bx - ax) * (dy - cy) - (by - ay) * (dx - cx);
        if (std::fabs(det) < 1e-9) continue;
        double tau = ((cx - ax) * (dy - cy) - (cy - ay) * (dx - cx)) / det;
        double sig = ((cx - ax) * (by - ay) - (cy - ay) * (bx - ax)) / det;
        double ix = ax + tau * (bx - ax), iy = ay + tau * (by - ay);
        auto d2 = [&](double px, double py, double qx, double qy) {
            return std::hypot(px - qx, py - qy);
        };
        double endpoint_gap = std::min({d2(ix, iy, ax, ay), d2(ix, iy, bx, by),
                                        d2(ix, iy, cx, cy), d2(ix, iy, dx, dy)});
        if (endpoint_gap <= 1e-6) continue;

        bool oracle = tau > 0.0 && tau < 1.0 && sig > 0.0 && sig < 1.0;
        auto exact = proper_crossing(
            Segment(Point(static_cast<long long>(ax), static_cast<long long>(ay)),
                    Point(static_cast<long long>(bx), static_cast<long long>(by))),
            Segment(Point(static_cast<long long>(cx), static_cast<long long>(cy)),
                    Point(static_cast<long long>(dx), static_cast<long long>(dy))));
        CHECK(exact.has_value() == oracle);
        if (exact && oracle) {
            CHECK(rat_to_double(exact->x) == doctest::Approx(ix).epsilon(1e-6));
            CHECK(rat_to_double(exact->y) == doctest::Approx(iy).epsilon(1e-6));
        }
    }
}

TEST_CASE("point in polygon on the unit square") {
    auto sq = unit_square();
    CHECK(point_in_polygon(Point(rat(1, 2), rat(1, 2)), sq) == Containment::kInterior);
    CHECK(point_in_polygon(Point(2, 2), sq) == Containment::kExterior);
    CHECK(point_in_polygon(Point(rat(1, 2), rat(0)), sq) == Containment::kBoundary);
    CHECK(point_in_polygon(Point(0, 0), sq) == Containment::kBoundary);
    CHECK(point_in_polygon(Point(-1, 1), sq) == Containment::kExterior);
    CHECK(point_in_polygon(Point(rat(-1), rat(1, 2)), sq) == Containment::kExterior);
}

TEST_CASE("point in polygon rejects non-simple polygons") {
    std::vector<Point> bowtie = {{0, 0}, {2, 2}, {2, 0}, {0, 2}};
    CHECK_FALSE(polygon_is_simple(bowtie));
    CHECK_THROWS_AS(point_in_polygon(Point(1, 1), bowtie), std::invalid_argument);
    CHECK(polygon_is_simple(unit_square()));
}

TEST_CASE("point in polygon on a concave polygon with exact rational queries") {
    // A square with a notch cut to the center.
    std::vector<Point> poly = {{0, 0}, {4, 0}, {4, 4}, {2, 2}, {0, 4}};
    REQUIRE(polygon_is_simple(poly));
    CHECK(point_in_polygon(Point(2, 1), poly) == Containment::kInterior);
    CHECK(point_in_polygon(Point(2, 3), poly) == Containment::kExterior);   // inside the notch
    CHECK(point_in_polygon(Point(rat(3), rat(3)), poly) == Containment::kBoundary);
    CHECK(point_in_polygon(Point(rat(5, 2), rat(5, 2)), poly) == Containment::kBoundary);
}

TEST_CASE("all_collinear") {
    std::vector<Point> line = {{0, 0}, {1, 1}, {2, 2}};
    CHECK(all_collinear(line));
    std::vector<Point> bent = {{0, 0}, {1, 1}, {2, 0}};
    CHECK_FALSE(all_collinear(bent));
    std::vector<Point> single = {{3, 4}};
    CHECK(all_collinear(single));
}

TEST_CASE("the bundled 12-point instance is not degenerate") {
    CHECK_FALSE(all_collinear(pair12().instance.points));
}

TEST_CASE("segment interior sharing covers overlap and touch cases") {
    CHECK(segments_share_interior_point(Segment({0, 0}, {2, 0}), Segment({1, 0}, {1, 2})));
    CHECK(segments_share_interior_point(Segment({0, 0}, {3, 0}), Segment({1, 0}, {5, 0})));
    CHECK(segments_share_interior_point(Segment({0, 0}, {2, 2}), Segment({0, 2}, {2, 0})));
    // End-to-end collinear touch at a shared endpoint is fine.
    CHECK_FALSE(segments_share_interior_point(Segment({0, 0}, {1, 0}), Segment({1, 0}, {2, 0})));
    CHECK_FALSE(segments_share_interior_point(Segment({0, 0}, {1, 0}), Segment({1, 0}, {1, 2})));
    CHECK_FALSE(segments_share_interior_point(Segment({0, 0}, {1, 0}), Segment({0, 1}, {1, 1})));
}

TEST_CASE("degenerate segments are rejected") {
    CHECK_THROWS_AS(Segment(Point(1, 1), Point(1, 1)), std::invalid_argument);
}
