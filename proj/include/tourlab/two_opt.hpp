#pragma once

#include <optional>
#include <utility>

#include "tourlab/tour.hpp"

namespace tourlab {

// Deltas within this absolute margin of zero are treated as non-improving,
// so floating-point noise on symmetric exchanges cannot loop forever.
inline constexpr double kMoveEpsilon = 1e-12;

enum class PivotPolicy { kFirstImprovement, kBestImprovement };

std::string pivot_name(PivotPolicy p);
PivotPolicy pivot_from_name(const std::string& name);

// Exchange of the directed tour edges (a,b) and (x,y) for (a,x) and (b,y).
// pos_ab/pos_xy are the tour positions of the two edges, pos_ab < pos_xy.
struct TwoMove {
    int pos_ab = -1;
    int pos_xy = -1;
    std::pair<int, int> edge_ab;
    std::pair<int, int> edge_xy;
    double delta = 0.0;  // negative = improving
};

// Scans non-adjacent edge pairs in lexicographic position order and returns a
// move with delta < -kMoveEpsilon: the first one (FirstImprovement) or the
// globally best one with ties to the earliest pair (BestImprovement).
std::optional<TwoMove> find_improving_move(const Instance& inst, const Tour& t, PivotPolicy policy);

// Applies the exchange, reversing the shorter of the two tour segments.
// Throws InvalidMove when the move's edges are not edges of t.
Tour apply_move(const Instance& inst, const Tour& t, const TwoMove& m);

struct RunStats {
    int iterations = 0;
    double start_length = 0.0;
    double final_length = 0.0;
    PivotPolicy policy = PivotPolicy::kFirstImprovement;
    bool natural_termination = true;  // false when the iteration budget ran out
};

std::pair<Tour, RunStats> run_two_opt(const Instance& inst, const Tour& start,
                                      PivotPolicy policy, int max_iters = 1000000);

// Witness: the first pair of directed edges violating the exchange condition.
using EdgePairWitness = std::pair<std::pair<int, int>, std::pair<int, int>>;

std::pair<bool, std::optional<EdgePairWitness>> is_two_optimal(const Instance& inst, const Tour& t);

// No two tour edges meet in a point interior to either segment.
bool is_simple(const Instance& inst, const Tour& t);

}  // namespace tourlab
