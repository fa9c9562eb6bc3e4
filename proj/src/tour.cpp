#include "tourlab/tour.hpp"

#include <algorithm>
#include <stdexcept>

namespace tourlab {

void validate_tour(const Instance& inst, const Tour& t) {
    int n = inst.n();
    if (n < 3) throw std::invalid_argument("tour operations need at least 3 points");
    if (t.n() != n) throw std::invalid_argument("tour visits " + std::to_string(t.n()) +
                                                " of " + std::to_string(n) + " vertices");
    std::vector<char> seen(n, 0);
    for (int v : t.order) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("tour is not a permutation");
        seen[v] = 1;
    }
}

double edge_length(const Instance& inst, int u, int v) {
    return point_distance(inst.points[u], inst.points[v]);
}

Tour canonical_form(const Tour& t) {
    int n = t.n();
    int start = 0;
    for (int i = 1; i < n; ++i) {
        if (t.order[i] < t.order[start]) start = i;
    }
    int next = t.at(start + 1);
    int prev = t.at(start - 1);
    Tour out;
    out.order.reserve(n);
    int step = (next < prev) ? 1 : -1;
    for (int i = 0; i < n; ++i) out.order.push_back(t.at(start + step * i));
    return out;
}

double tour_length(const Instance& inst, const Tour& t) {
    Tour c = canonical_form(t);
    double total = 0.0;
    for (int i = 0; i < c.n(); ++i) total += edge_length(inst, c.at(i), c.at(i + 1));
    return total;
}

Tour reversed(const Tour& t) {
    Tour out = t;
    std::reverse(out.order.begin(), out.order.end());
    return out;
}

std::vector<std::pair<int, int>> tour_edges(const Tour& t) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.n());
    for (int i = 0; i < t.n(); ++i) edges.emplace_back(t.at(i), t.at(i + 1));
    return edges;
}

Segment edge_segment(const Instance& inst, int u, int v) {
    return Segment(inst.points[u], inst.points[v]);
}

std::vector<Point> tour_polygon(const Instance& inst, const Tour& t) {
    std::vector<Point> poly;
    poly.reserve(t.n());
    for (int v : t.order) poly.push_back(inst.points[v]);
    return poly;
}

}  // namespace tourlab
