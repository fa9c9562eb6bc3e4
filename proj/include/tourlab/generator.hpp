#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tourlab/instance.hpp"

namespace tourlab {

enum class Family { kUniformBox, kGrid, kCollinear };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Deterministic for a fixed (seed, n, family, scale). UniformBox samples
// distinct integer points in [0, scale]^2, Grid jitters lattice points within
// disjoint cells, Collinear emits distinct integer points on one line.
// Requires n >= 3 and scale >= n.
Instance generate_instance(uint64_t seed, int n, Family family, int scale);

// Uniform integer in [lo, hi]. mt19937_64 output is pinned by the standard,
// so sampled values are stable across platforms (std::uniform_int_distribution
// is not).
inline int sample_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

}  // namespace tourlab
