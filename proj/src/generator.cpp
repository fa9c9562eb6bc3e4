#include "tourlab/generator.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace tourlab {

std::string family_name(Family f) {
    switch (f) {
        case Family::kUniformBox: return "uniform";
        case Family::kGrid: return "grid";
        case Family::kCollinear: return "collinear";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "uniform") return Family::kUniformBox;
    if (name == "grid") return Family::kGrid;
    if (name == "collinear") return Family::kCollinear;
    throw std::invalid_argument("unknown family '" + name + "'");
}

Instance generate_instance(uint64_t seed, int n, Family family, int scale) {
    if (n < 3) throw std::invalid_argument("generate_instance needs n >= 3");
    if (scale < n) throw std::invalid_argument("generate_instance needs scale >= n");

    std::mt19937_64 rng(seed);
    Instance inst;
    inst.id = "seed" + std::to_string(seed) + "-n" + std::to_string(n) + "-" +
              family_name(family) + "-s" + std::to_string(scale);

    switch (family) {
        case Family::kUniformBox: {
            std::set<std::pair<int, int>> used;
            while (static_cast<int>(used.size()) < n) {
                int x = sample_int(rng, 0, scale);
                int y = sample_int(rng, 0, scale);
                if (used.insert({x, y}).second) inst.points.emplace_back(x, y);
            }
            break;
        }
        case Family::kGrid: {
            int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
            int cell = std::max(2, scale / side);
            for (int k = 0; k < n; ++k) {
                int i = k % side;
                int j = k / side;
                int jx = sample_int(rng, 0, cell - 1);
                int jy = sample_int(rng, 0, cell - 1);
                inst.points.emplace_back(i * cell + jx, j * cell + jy);
            }
            break;
        }
        case Family::kCollinear: {
            int slope = sample_int(rng, -2, 2);
            int intercept = sample_int(rng, 0, scale);
            std::set<int> used;
            while (static_cast<int>(used.size()) < n) {
                int t = sample_int(rng, 0, scale);
                if (used.insert(t).second) inst.points.emplace_back(t, slope * t + intercept);
            }
            break;
        }
    }
    return inst;
}

}  // namespace tourlab
