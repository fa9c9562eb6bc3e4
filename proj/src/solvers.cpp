#include "tourlab/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tourlab/errors.hpp"

namespace tourlab {

namespace {

std::vector<double> distance_matrix(const Instance& inst) {
    int n = inst.n();
    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double v = edge_length(inst, i, j);
            d[static_cast<size_t>(i) * n + j] = v;
            d[static_cast<size_t>(j) * n + i] = v;
        }
    }
    return d;
}

}  // namespace

Tour exact_optimum(const Instance& inst, int limit) {
    int n = inst.n();
    if (n < 3) throw std::invalid_argument("exact_optimum needs n >= 3");
    if (n > limit) {
        throw InstanceTooLarge("exact_optimum: n = " + std::to_string(n) +
                               " exceeds limit " + std::to_string(limit));
    }
    validate_instance(inst);

    const std::vector<double> d = distance_matrix(inst);
    auto dist = [&](int u, int v) { return d[static_cast<size_t>(u) * n + v]; };

    // f[mask][j] = shortest path that starts at vertex j+1, visits exactly the
    // vertices of mask (bit i <-> vertex i+1), and ends at vertex 0.
    int m = n - 1;
    size_t masks = size_t(1) << m;
    std::vector<double> f(masks * m, 0.0);
    for (int j = 0; j < m; ++j) f[j] = dist(j + 1, 0);
    for (size_t mask = 1; mask < masks; ++mask) {
        for (int j = 0; j < m; ++j) {
            if (mask & (size_t(1) << j)) continue;
            double best = std::numeric_limits<double>::infinity();
            for (int k = 0; k < m; ++k) {
                if (!(mask & (size_t(1) << k))) continue;
                double cand = dist(j + 1, k + 1) + f[(mask ^ (size_t(1) << k)) * m + k];
                if (cand < best) best = cand;
            }
            f[mask * m + j] = best;
        }
    }

    // Greedy reconstruction from vertex 0, preferring the smallest next vertex
    // on exact ties. Yields the lexicographically smallest optimal sequence.
    Tour t;
    t.order.reserve(n);
    t.order.push_back(0);
    size_t remaining = masks - 1;
    int cur = 0;
    while (remaining) {
        int pick = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < m; ++k) {
            if (!(remaining & (size_t(1) << k))) continue;
            double cand = dist(cur, k + 1) + f[(remaining ^ (size_t(1) << k)) * m + k];
            if (cand < best) {
                best = cand;
                pick = k;
            }
        }
        t.order.push_back(pick + 1);
        remaining ^= size_t(1) << pick;
        cur = pick + 1;
    }
    return canonical_form(t);
}

Tour brute_force_optimum(const Instance& inst) {
    int n = inst.n();
    if (n < 3) throw std::invalid_argument("brute_force_optimum needs n >= 3");
    if (n > kBruteForceLimit) {
        throw InstanceTooLarge("brute_force_optimum: n = " + std::to_string(n) +
                               " exceeds limit " + std::to_string(kBruteForceLimit));
    }
    validate_instance(inst);

    const std::vector<double> d = distance_matrix(inst);
    auto dist = [&](int u, int v) { return d[static_cast<size_t>(u) * n + v]; };

    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> best_perm;
    double best = std::numeric_limits<double>::infinity();
    do {
        // One representative per undirected tour: canonical orientation has
        // the second vertex smaller than the last.
        if (perm.front() > perm.back()) continue;
        double len = dist(0, perm.front());
        for (size_t i = 0; i + 1 < perm.size(); ++i) len += dist(perm[i], perm[i + 1]);
        len += dist(perm.back(), 0);
        // Lexicographic enumeration keeps the smallest sequence on ties.
        if (len < best) {
            best = len;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Tour t;
    t.order.reserve(n);
    t.order.push_back(0);
    t.order.insert(t.order.end(), best_perm.begin(), best_perm.end());
    return t;
}

}  // namespace tourlab
