#pragma once

#include <json.hpp>

#include <optional>

#include "tourlab/arborescence.hpp"
#include "tourlab/generator.hpp"
#include "tourlab/solvers.hpp"
#include "tourlab/two_opt.hpp"
#include "tourlab/uncross.hpp"

namespace tourlab {

struct ExperimentConfig {
    uint64_t seed = 1;
    int n = 10;
    Family family = Family::kUniformBox;
    int scale = 0;  // 0: max(100, 10 * n)
    PivotPolicy policy = PivotPolicy::kFirstImprovement;
    int starts = 1;  // first start is the index-order tour, further ones are seeded shuffles

    enum class Mode { kExactOpt, kAssumedOpt } mode = Mode::kExactOpt;
    double tolerance = kLemmaTolerance;
    int max_iters = 1000000;

    std::optional<Instance> instance;    // overrides generation
    std::optional<Tour> supplied_t;      // required for kAssumedOpt
    std::optional<Tour> supplied_s;      // used verbatim when present

    int effective_scale() const { return scale > 0 ? scale : std::max(100, 10 * n); }
};

struct SetSummary {
    std::string label;
    int size = 0;
    double c_sum = 0.0;
};

struct ArbSummary {
    std::string label;
    int vertices = 0;
    int edge_count = 0;
    double c_total = 0.0;
    double w_total = 0.0;
    double k = 0.0;
    LemmaReport triangle;
    LemmaReport exchange;
    LemmaReport subtree;
    LemmaReport max_child;
    EdgeSetReport heavy;  // at k = c/w
    BoundCertificate certificate;
    double conservation_slack = 0.0;  // sum w + root boundary - tour length
    bool conservation_ok = true;

    bool all_ok() const {
        return triangle.holds && exchange.holds && subtree.holds && max_child.holds &&
               heavy.report.holds && certificate.all_ok() && conservation_ok;
    }
};

struct PipelineReport {
    std::string instance_id;
    std::string mode;
    int n = 0;
    int n_prime = 0;
    int crossings = 0;
    double len_t = 0.0;      // optimal (or assumed-optimal) tour
    double len_s = 0.0;      // 2-optimal tour
    double ratio = 0.0;      // len_s / len_t
    bool ratio_ok = true;    // >= 1 - tol in exact mode
    bool lengths_preserved = true;  // subdivision kept both lengths
    bool s_two_optimal = true;
    bool s_simple = true;
    bool pair_crossing_free = true;

    std::vector<SetSummary> sets;   // the five partition classes
    double five_set_sum = 0.0;
    bool five_set_ok = true;        // decomposes len_s
    bool on_tour_bound_ok = true;   // c(on_tour) <= len_t + tol

    std::vector<ArbSummary> arbs;
    double runtime_ms = 0.0;  // console only, never serialized

    bool all_checks_pass() const;
};

// Everything the pipeline built, for rendering and serialization.
struct PipelineArtifacts {
    Instance original;
    Tour t0, s0;
    SubdividedPair sub;
    EdgePartition partition;
    PipelineArborescences arbs;
};

struct PipelineResult {
    PipelineReport report;
    PipelineArtifacts artifacts;
};

// generate/load -> t -> s -> subdivide -> partition -> arborescences -> checks.
// Deterministic for a fixed config. Module errors surface as StageError.
PipelineResult run_pipeline(const ExperimentConfig& cfg);

// Serialized forms exclude runtime_ms so identical configs produce identical
// bytes.
nlohmann::json report_to_json(const PipelineReport& rep);
std::string sweep_csv_header();
std::string report_csv_row(uint64_t seed, const ExperimentConfig& cfg, const PipelineReport& rep);

}  // namespace tourlab
