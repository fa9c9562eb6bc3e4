#include "tourlab/instance.hpp"

#include <stdexcept>

namespace tourlab {

void validate_instance(const Instance& inst) {
    int n = inst.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (inst.points[i] == inst.points[j]) {
                throw std::invalid_argument("instance '" + inst.id + "' repeats point " +
                                            point_to_string(inst.points[i]));
            }
        }
    }
}

}  // namespace tourlab
