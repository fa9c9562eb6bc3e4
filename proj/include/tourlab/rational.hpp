#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tourlab {

// Exact rational scalar. Combinatorial predicates are evaluated over Rat;
// metric quantities (lengths) are evaluated in double.
using Rat = mpq_class;

inline Rat rat(long long num, long long den = 1) {
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline int rat_sign(const Rat& q) { return sgn(q); }

// Numerator/denominator as int64, for JSON output. Throws std::range_error
// when the value does not fit (cannot happen at desk scale).
int64_t rat_num_i64(const Rat& q);
int64_t rat_den_i64(const Rat& q);

std::string rat_to_string(const Rat& q);

struct Point {
    Rat x;
    Rat y;

    Point() = default;
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    Point(long long px, long long py) : x(rat(px)), y(rat(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Point midpoint(const Point& a, const Point& b) {
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2);
}

// Euclidean distance, evaluated in double from the exact difference.
double point_distance(const Point& a, const Point& b);

std::string point_to_string(const Point& p);

}  // namespace tourlab
