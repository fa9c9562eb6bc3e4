#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tourlab/partition.hpp"
#include "tourlab/tour.hpp"

namespace tourlab {

inline constexpr double kLemmaTolerance = 1e-9;  // relative

// Faces of the plane graph formed by a tour polygon and a set of pairwise
// non-crossing chords whose endpoints lie on one anchor path. Chords map to
// position intervals along the path; the nesting of those intervals is the
// face structure, so no planar-subdivision machinery is needed.
struct RegionTree {
    struct Region {
        std::vector<int> chord_ids;    // chords bounding this region
        std::vector<int> path_edges;   // path edge positions on the boundary (ascending)
        bool touches_complement = false;
    };
    int root = 0;  // the region bounded by the complement arc (and outermost chords)
    std::vector<Region> regions;
    std::vector<int> chord_outer;  // per chord: region on the root side
    std::vector<int> chord_inner;  // per chord: region on the far side
};

struct ChordSpan {
    int lo = 0;
    int hi = 0;  // positions along the path, lo < hi
};

// Throws CrossingChords when two spans interleave.
RegionTree build_regions(int path_vertex_count, std::span<const ChordSpan> chords);

// Rooted out-tree with two positive weights per edge: c is the length of the
// chord dual to the edge, w the total tour length on the child region's
// boundary.
struct Arborescence {
    struct Edge {
        int from = -1;
        int to = -1;
        double c = 0.0;
        double w = 0.0;
    };
    int root = 0;
    int vertex_count = 0;
    std::vector<Edge> edges;

    std::vector<std::vector<int>> out_edges;  // per vertex: edge ids
    std::vector<int> in_edge;                 // per vertex: edge id or -1

    double c_total() const;
    double w_total() const;
};

// Validates tree shape (unique root, in-degree one elsewhere) and positive
// weights; throws std::invalid_argument otherwise.
Arborescence make_arborescence(int root, int vertex_count, std::vector<Arborescence::Edge> edges);

Arborescence build_arborescence(const RegionTree& rt, std::span<const double> chord_lengths,
                                std::span<const double> path_edge_lengths);

// Region tree and weighted arborescence for one chord set of a tour pair.
struct DualBuild {
    RegionTree regions;
    Arborescence arb;
    double root_tour_boundary = 0.0;  // tour length on the root region's boundary
    std::vector<DirectedEdge> chords;  // chord id -> original edge
};

// chords must have both endpoints on path (the anchor path of their set).
DualBuild build_dual_arborescence(const Instance& inst, const Tour& t,
                                  std::span<const DirectedEdge> chords, std::span<const int> path);

struct LemmaReport {
    std::string condition;
    bool holds = true;
    double worst_slack = 0.0;  // min over checked inequalities of RHS - LHS
    int checked = 0;
    std::optional<int> witness_edge;
};

// c(e) <= w(e) + sum of c over the child edges of e's head.
LemmaReport check_combined_triangle(const Arborescence& a, double tol = kLemmaTolerance);

// c(e) + c(g) <= w(e) + sum of c over the other child edges, for every
// parent-child edge pair (e, g).
LemmaReport check_combined_two_opt(const Arborescence& a, double tol = kLemmaTolerance);

// c(e) <= total w of the sub-arborescence hanging from e.
LemmaReport check_weight_bound(const Arborescence& a, double tol = kLemmaTolerance);

// 2 * max child c <= w(e) - c(e) + sum of child c, for edges with children.
LemmaReport check_max_bound(const Arborescence& a, double tol = kLemmaTolerance);

struct EdgeSetReport {
    std::vector<int> edges;
    double c_sum = 0.0;
    LemmaReport report;
};

// Edges whose largest child c exceeds c(e)/k; their c-sum is bounded by
// (k/2) * w(A).
EdgeSetReport heavy_child_set(const Arborescence& a, double k, double tol = kLemmaTolerance);

// Edges with r < c(e) <= (k/4) * r whose children all have c <= c(e)/k;
// their c-sum is bounded by 2 * w(A).
EdgeSetReport band_set(const Arborescence& a, double k, double r, double tol = kLemmaTolerance);

struct BoundCertificate {
    double k = 0.0;        // c(A) / w(A)
    double c_total = 0.0;
    double w_total = 0.0;
    bool small_k = true;   // k < 18: the ratio bound is immediate
    std::vector<double> radii;
    std::vector<EdgeSetReport> band_reports;
    EdgeSetReport heavy_report;
    bool cover_ok = true;
    bool size_bound_ok = true;   // |E(A)| >= (k/6)^(k/6)
    double ratio_bound = 0.0;    // 12 * log|E| / log log|E| (natural log)
    bool ratio_bound_ok = true;  // c(A) <= ratio_bound * w(A)
    bool log_base_mismatch = false;  // base-2 evaluation would flip the verdict

    bool all_ok() const { return cover_ok && size_bound_ok && ratio_bound_ok; }
};

// Throws CoverGap if an edge escapes every set of the cover (cannot happen
// when the combined inequalities hold).
BoundCertificate bound_certificate(const Arborescence& a, double tol = kLemmaTolerance);

// Random arborescence satisfying the combined inequalities by construction:
// out-degrees <= 4, depth <= 6, w log-uniform, c assigned children-first up
// to the largest feasible value.
Arborescence synthetic_arborescence(uint64_t seed);

// One arborescence per orientation class of the partition that has at least
// two chords, all sharing the construction above.
struct PipelineArborescences {
    struct Entry {
        std::string label;
        DualBuild build;
    };
    std::vector<Entry> entries;
};

PipelineArborescences pipeline_arborescences(const Instance& inst, const Tour& t, const Tour& s,
                                             const EdgePartition& part);

}  // namespace tourlab
