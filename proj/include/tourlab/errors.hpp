#pragma once

#include <stdexcept>
#include <string>

namespace tourlab {

struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidMove : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A crossing point of the two tours coincides with an instance point; the
// configuration has to be resolved upstream (perturb the input).
struct CoincidentPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An edge is neither interior, exterior, nor a whole tour edge. Indicates a
// pair that was not subdivided (or is not simple/crossing-free).
struct MixedEdge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoAnchor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CrossingChords : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An arborescence edge escaped every set of the certificate cover. Cannot
// happen when the combined inequalities hold; signals an implementation bug.
struct CoverGap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wraps a module error with the pipeline stage that raised it.
struct StageError : std::runtime_error {
    std::string stage;
    StageError(const std::string& stage_name, const std::string& message)
        : std::runtime_error(stage_name + ": " + message), stage(stage_name) {}
};

}  // namespace tourlab
