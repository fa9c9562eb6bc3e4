#pragma once

#include "tourlab/tour.hpp"

namespace tourlab {

inline constexpr int kHeldKarpDefaultLimit = 18;
inline constexpr int kBruteForceLimit = 9;

// Minimum-length tour by dynamic programming over vertex subsets. Ties are
// broken toward the lexicographically smallest vertex sequence starting at
// vertex 0 in canonical orientation. Throws InstanceTooLarge when n > limit.
Tour exact_optimum(const Instance& inst, int limit = kHeldKarpDefaultLimit);

// Exhaustive minimum over all cyclic orders; same tie-break. n <= 9.
Tour brute_force_optimum(const Instance& inst);

}  // namespace tourlab
