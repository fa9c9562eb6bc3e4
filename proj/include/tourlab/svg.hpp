#pragma once

#include <string>

#include "tourlab/pipeline.hpp"

namespace tourlab {

enum class SvgStage { kTours, kPartition, kArborescence };

// Deterministic SVG 1.1 document in a 1000x1000 viewport. Tours stage shows
// both tours; Partition styles the 2-optimal tour's edges by class;
// Arborescence overlays the dual trees on top of the partition.
std::string render_svg(SvgStage stage, const PipelineArtifacts& art);

}  // namespace tourlab
