#include "tourlab/uncross.hpp"

#include <algorithm>
#include <map>

#include "tourlab/errors.hpp"
#include "tourlab/two_opt.hpp"

namespace tourlab {

CrossingReport enumerate_crossings(const Instance& inst, const Tour& t, const Tour& s) {
    validate_tour(inst, t);
    validate_tour(inst, s);
    CrossingReport report;
    int n = t.n();
    std::vector<Segment> t_segs, s_segs;
    t_segs.reserve(n);
    s_segs.reserve(n);
    for (int i = 0; i < n; ++i) {
        t_segs.push_back(edge_segment(inst, t.at(i), t.at(i + 1)));
        s_segs.push_back(edge_segment(inst, s.at(i), s.at(i + 1)));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (auto p = proper_crossing(t_segs[i], s_segs[j])) {
                report.crossings.push_back({i, j, *p});
            }
        }
    }
    return report;
}

bool is_crossing_free(const Instance& inst, const Tour& t, const Tour& s) {
    return enumerate_crossings(inst, t, s).count() == 0;
}

SubdividedPair subdivide_pair(const Instance& inst, const Tour& t, const Tour& s) {
    CrossingReport report = enumerate_crossings(inst, t, s);
    for (const Crossing& c : report.crossings) {
        for (const Point& p : inst.points) {
            if (p == c.where) {
                throw CoincidentPoint("crossing point " + point_to_string(p) +
                                      " coincides with an instance point");
            }
        }
    }
    if (!is_simple(inst, t) || !is_simple(inst, s)) {
        throw std::invalid_argument("subdivide_pair requires simple tours");
    }

    SubdividedPair out;
    out.original_n = inst.n();
    out.crossing_count = report.count();
    out.v_prime.id = inst.id + "-subdivided";
    out.v_prime.points = inst.points;

    // Deterministic vertex numbering: crossings sorted along t.
    std::vector<Crossing> ordered = report.crossings;
    std::sort(ordered.begin(), ordered.end(), [&](const Crossing& a, const Crossing& b) {
        if (a.t_edge != b.t_edge) return a.t_edge < b.t_edge;
        Segment seg = edge_segment(inst, t.at(a.t_edge), t.at(a.t_edge + 1));
        return param_along(seg, a.where) < param_along(seg, b.where);
    });

    std::vector<int> new_index(ordered.size());
    for (size_t c = 0; c < ordered.size(); ++c) {
        // Distinct crossings of simple tours never coincide with each other.
        new_index[c] = out.v_prime.n();
        out.v_prime.points.push_back(ordered[c].where);
    }

    // Re-thread a tour: after each original edge, insert that edge's crossing
    // points ordered by the exact parameter along the edge.
    auto rethread = [&](const Tour& tour, auto edge_of) {
        std::map<int, std::vector<int>> per_edge;  // edge position -> crossing ids
        for (size_t c = 0; c < ordered.size(); ++c) per_edge[edge_of(ordered[c])].push_back(static_cast<int>(c));
        Tour result;
        result.order.reserve(out.v_prime.n());
        for (int i = 0; i < tour.n(); ++i) {
            result.order.push_back(tour.at(i));
            auto it = per_edge.find(i);
            if (it == per_edge.end()) continue;
            Segment seg = edge_segment(inst, tour.at(i), tour.at(i + 1));
            std::vector<int>& ids = it->second;
            std::sort(ids.begin(), ids.end(), [&](int a, int b) {
                return param_along(seg, ordered[a].where) < param_along(seg, ordered[b].where);
            });
            for (int id : ids) result.order.push_back(new_index[id]);
        }
        return result;
    };

    out.t_prime = rethread(t, [](const Crossing& c) { return c.t_edge; });
    out.s_prime = rethread(s, [](const Crossing& c) { return c.s_edge; });
    return out;
}

}  // namespace tourlab
