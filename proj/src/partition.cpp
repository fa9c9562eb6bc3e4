#include "tourlab/partition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tourlab/errors.hpp"
#include "tourlab/two_opt.hpp"
#include "tourlab/uncross.hpp"

namespace tourlab {

EdgeClasses classify_edges(const Instance& inst, const Tour& t, const Tour& s) {
    if (!is_simple(inst, t) || !is_simple(inst, s)) {
        throw std::invalid_argument("classify_edges requires simple tours");
    }
    if (!is_crossing_free(inst, t, s)) {
        throw std::invalid_argument("classify_edges requires a crossing-free pair");
    }

    std::set<std::pair<int, int>> t_edge_set;
    for (auto [u, v] : tour_edges(t)) t_edge_set.insert(std::minmax(u, v));

    std::vector<Point> poly = tour_polygon(inst, t);

    EdgeClasses classes;
    for (auto [u, v] : tour_edges(s)) {
        DirectedEdge e{u, v};
        if (t_edge_set.count(std::minmax(u, v))) {
            classes.on_tour.push_back(e);
            continue;
        }
        Point mid = midpoint(inst.points[u], inst.points[v]);
        switch (point_in_polygon_unchecked(mid, poly)) {
            case Containment::kInterior: classes.interior.push_back(e); break;
            case Containment::kExterior: classes.exterior.push_back(e); break;
            case Containment::kBoundary:
                throw MixedEdge("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") touches the polygon without being a tour edge; "
                                "the pair was not subdivided");
        }
    }
    return classes;
}

AnchorPath choose_anchor(const Tour& t, std::span<const DirectedEdge> edges) {
    if (edges.size() < 2) throw std::invalid_argument("choose_anchor needs at least 2 edges");
    int n = t.n();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[t.order[i]] = i;

    std::vector<char> is_endpoint(n, 0);
    for (const DirectedEdge& e : edges) {
        if (pos[e.tail] < 0 || pos[e.head] < 0) throw std::invalid_argument("edge endpoint not on tour");
        is_endpoint[e.tail] = 1;
        is_endpoint[e.head] = 1;
    }

    for (const DirectedEdge& e : edges) {
        int p = pos[e.tail];
        int q = pos[e.head];
        // Interior vertices of the forward arc p -> q along t.
        bool forward_clear = true;
        for (int i = (p + 1) % n; i != q; i = (i + 1) % n) {
            if (is_endpoint[t.order[i]]) {
                forward_clear = false;
                break;
            }
        }
        bool backward_clear = true;
        for (int i = (q + 1) % n; i != p; i = (i + 1) % n) {
            if (is_endpoint[t.order[i]]) {
                backward_clear = false;
                break;
            }
        }
        if (!forward_clear && !backward_clear) continue;

        AnchorPath ap;
        ap.anchor = e;
        // The spanning path is the side that holds the other endpoints.
        if (forward_clear) {
            for (int i = p; i != q; i = (i - 1 + n) % n) ap.path.push_back(t.order[i]);
        } else {
            for (int i = p; i != q; i = (i + 1) % n) ap.path.push_back(t.order[i]);
        }
        ap.path.push_back(e.head);
        return ap;
    }
    throw NoAnchor("no edge has an endpoint-free side; inputs corrupted upstream");
}

std::pair<std::vector<DirectedEdge>, std::vector<DirectedEdge>> split_compatible(
    const AnchorPath& ap, std::span<const DirectedEdge> edges) {
    std::vector<int> phi;
    int max_vertex = 0;
    for (int v : ap.path) max_vertex = std::max(max_vertex, v);
    for (const DirectedEdge& e : edges) max_vertex = std::max({max_vertex, e.tail, e.head});
    phi.assign(max_vertex + 1, -1);
    for (size_t i = 0; i < ap.path.size(); ++i) phi[ap.path[i]] = static_cast<int>(i);

    std::vector<DirectedEdge> forward, backward;
    for (const DirectedEdge& e : edges) {
        if (phi[e.tail] < 0 || phi[e.head] < 0) {
            throw std::invalid_argument("edge endpoint off the anchor path");
        }
        (phi[e.tail] < phi[e.head] ? forward : backward).push_back(e);
    }
    return {forward, backward};
}

EdgePartition partition_all(const Instance& inst, const Tour& t, const Tour& s) {
    EdgeClasses classes = classify_edges(inst, t, s);

    EdgePartition part;
    part.interior = classes.interior;
    part.exterior = classes.exterior;
    part.on_tour = classes.on_tour;

    auto split_side = [&](const std::vector<DirectedEdge>& edges,
                          std::vector<DirectedEdge>& forward, std::vector<DirectedEdge>& backward,
                          std::optional<DirectedEdge>& anchor, std::vector<int>& path) {
        if (edges.size() < 2) {
            forward = edges;
            backward.clear();
            if (!edges.empty()) anchor = edges.front();
            return;
        }
        AnchorPath ap = choose_anchor(t, edges);
        std::tie(forward, backward) = split_compatible(ap, edges);
        anchor = ap.anchor;
        path = std::move(ap.path);
    };

    split_side(part.interior, part.interior_forward, part.interior_backward,
               part.interior_anchor, part.interior_path);
    split_side(part.exterior, part.exterior_forward, part.exterior_backward,
               part.exterior_anchor, part.exterior_path);
    return part;
}

}  // namespace tourlab
