#include "tourlab/two_opt.hpp"

#include <cmath>
#include <stdexcept>

#include "tourlab/errors.hpp"

namespace tourlab {

namespace {

struct FlatCoords {
    std::vector<double> x, y;
    explicit FlatCoords(const Instance& inst) {
        x.reserve(inst.points.size());
        y.reserve(inst.points.size());
        for (const Point& p : inst.points) {
            x.push_back(rat_to_double(p.x));
            y.push_back(rat_to_double(p.y));
        }
    }
    double dist(int u, int v) const {
        double dx = x[u] - x[v];
        double dy = y[u] - y[v];
        return std::sqrt(dx * dx + dy * dy);
    }
};

bool adjacent_positions(int i, int j, int n) {
    return j == i + 1 || (i == 0 && j == n - 1);
}

TwoMove make_move(const Tour& t, const FlatCoords& c, int i, int j) {
    TwoMove m;
    m.pos_ab = i;
    m.pos_xy = j;
    m.edge_ab = {t.at(i), t.at(i + 1)};
    m.edge_xy = {t.at(j), t.at(j + 1)};
    m.delta = c.dist(m.edge_ab.first, m.edge_xy.first) + c.dist(m.edge_ab.second, m.edge_xy.second) -
              c.dist(m.edge_ab.first, m.edge_ab.second) - c.dist(m.edge_xy.first, m.edge_xy.second);
    return m;
}

}  // namespace

std::string pivot_name(PivotPolicy p) {
    return p == PivotPolicy::kFirstImprovement ? "first-improvement" : "best-improvement";
}

PivotPolicy pivot_from_name(const std::string& name) {
    if (name == "first-improvement" || name == "first") return PivotPolicy::kFirstImprovement;
    if (name == "best-improvement" || name == "best") return PivotPolicy::kBestImprovement;
    throw std::invalid_argument("unknown pivot policy '" + name + "'");
}

std::optional<TwoMove> find_improving_move(const Instance& inst, const Tour& t, PivotPolicy policy) {
    validate_tour(inst, t);
    FlatCoords coords(inst);
    int n = t.n();
    std::optional<TwoMove> best;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adjacent_positions(i, j, n)) continue;
            TwoMove m = make_move(t, coords, i, j);
            if (m.delta < -kMoveEpsilon) {
                if (policy == PivotPolicy::kFirstImprovement) return m;
                if (!best || m.delta < best->delta) best = m;
            }
        }
    }
    return best;
}

Tour apply_move(const Instance& inst, const Tour& t, const TwoMove& m) {
    validate_tour(inst, t);
    int n = t.n();
    if (m.pos_ab < 0 || m.pos_xy >= n || m.pos_ab >= m.pos_xy ||
        adjacent_positions(m.pos_ab, m.pos_xy, n) ||
        t.at(m.pos_ab) != m.edge_ab.first || t.at(m.pos_ab + 1) != m.edge_ab.second ||
        t.at(m.pos_xy) != m.edge_xy.first || t.at(m.pos_xy + 1) != m.edge_xy.second) {
        throw InvalidMove("move edges are not edges of the tour");
    }

    Tour out = t;
    int inner_len = m.pos_xy - m.pos_ab;
    if (inner_len <= n - inner_len) {
        std::reverse(out.order.begin() + m.pos_ab + 1, out.order.begin() + m.pos_xy + 1);
    } else {
        // Reverse the complementary segment (wraps around the end); same
        // undirected tour, fewer element swaps.
        int p = (m.pos_xy + 1) % n;
        int q = m.pos_ab;
        for (int k = 0; k < (n - inner_len) / 2; ++k) {
            std::swap(out.order[p], out.order[q]);
            p = (p + 1) % n;
            q = (q - 1 + n) % n;
        }
    }
    return out;
}

std::pair<Tour, RunStats> run_two_opt(const Instance& inst, const Tour& start,
                                      PivotPolicy policy, int max_iters) {
    validate_tour(inst, start);
    RunStats stats;
    stats.policy = policy;
    stats.start_length = tour_length(inst, start);

    Tour cur = start;
    stats.natural_termination = false;
    while (stats.iterations < max_iters) {
        std::optional<TwoMove> m = find_improving_move(inst, cur, policy);
        if (!m) {
            stats.natural_termination = true;
            break;
        }
        cur = apply_move(inst, cur, *m);
        ++stats.iterations;
    }
    if (stats.iterations >= max_iters && !stats.natural_termination &&
        !find_improving_move(inst, cur, policy)) {
        stats.natural_termination = true;
    }

    cur = canonical_form(cur);
    stats.final_length = tour_length(inst, cur);
    return {cur, stats};
}

std::pair<bool, std::optional<EdgePairWitness>> is_two_optimal(const Instance& inst, const Tour& t) {
    validate_tour(inst, t);
    FlatCoords coords(inst);
    int n = t.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adjacent_positions(i, j, n)) continue;
            TwoMove m = make_move(t, coords, i, j);
            if (m.delta < -kMoveEpsilon) {
                return {false, EdgePairWitness{m.edge_ab, m.edge_xy}};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_simple(const Instance& inst, const Tour& t) {
    validate_tour(inst, t);
    int n = t.n();
    std::vector<Segment> segs;
    segs.reserve(n);
    for (int i = 0; i < n; ++i) segs.push_back(edge_segment(inst, t.at(i), t.at(i + 1)));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (segments_share_interior_point(segs[i], segs[j])) return false;
        }
    }
    return true;
}

}  // namespace tourlab
