#include "tourlab/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "tourlab/errors.hpp"

namespace tourlab {

namespace {

double sum_edges(const Instance& inst, const std::vector<DirectedEdge>& edges) {
    double s = 0.0;
    for (const DirectedEdge& e : edges) s += edge_length(inst, e.tail, e.head);
    return s;
}

bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

Tour shuffled_tour(int n, uint64_t seed) {
    Tour t;
    t.order.resize(n);
    std::iota(t.order.begin(), t.order.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = sample_int(rng, 0, i);
        std::swap(t.order[i], t.order[j]);
    }
    return t;
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

bool PipelineReport::all_checks_pass() const {
    bool ok = ratio_ok && lengths_preserved && s_two_optimal && s_simple && pair_crossing_free &&
              five_set_ok && on_tour_bound_ok;
    for (const ArbSummary& a : arbs) ok = ok && a.all_ok();
    return ok;
}

PipelineResult run_pipeline(const ExperimentConfig& cfg) {
    auto t_start = std::chrono::steady_clock::now();
    PipelineResult result;
    PipelineArtifacts& art = result.artifacts;
    PipelineReport& rep = result.report;
    double tol = cfg.tolerance;

    art.original = stage("generate", [&] {
        Instance inst = cfg.instance ? *cfg.instance
                                     : generate_instance(cfg.seed, cfg.n, cfg.family,
                                                         cfg.effective_scale());
        validate_instance(inst);
        if (all_collinear(inst.points)) {
            // On a line every tour doubles back over itself; the crossing
            // machinery downstream needs a non-degenerate instance.
            throw std::invalid_argument("instance '" + inst.id + "' is degenerate (one line)");
        }
        return inst;
    });
    const Instance& inst = art.original;
    rep.instance_id = inst.id;
    rep.n = inst.n();
    rep.mode = cfg.mode == ExperimentConfig::Mode::kExactOpt ? "exact-opt" : "assumed-opt";

    art.t0 = stage("solve", [&] {
        if (cfg.mode == ExperimentConfig::Mode::kAssumedOpt) {
            if (!cfg.supplied_t) throw std::invalid_argument("assumed-opt mode needs a supplied tour");
            validate_tour(inst, *cfg.supplied_t);
            return *cfg.supplied_t;
        }
        return exact_optimum(inst);
    });

    art.s0 = stage("two-opt", [&] {
        if (cfg.supplied_s) {
            validate_tour(inst, *cfg.supplied_s);
            return *cfg.supplied_s;
        }
        Tour best;
        double best_len = 0.0;
        for (int attempt = 0; attempt < std::max(1, cfg.starts); ++attempt) {
            Tour start;
            if (attempt == 0) {
                start.order.resize(inst.n());
                std::iota(start.order.begin(), start.order.end(), 0);
            } else {
                start = shuffled_tour(inst.n(), cfg.seed * 1000003ULL + attempt);
            }
            auto [tour, stats] = run_two_opt(inst, start, cfg.policy, cfg.max_iters);
            double len = stats.final_length;
            if (attempt == 0 || len < best_len) {
                best = tour;
                best_len = len;
            }
        }
        return best;
    });

    rep.len_t = tour_length(inst, art.t0);
    rep.len_s = tour_length(inst, art.s0);
    rep.ratio = rep.len_s / rep.len_t;
    if (cfg.mode == ExperimentConfig::Mode::kExactOpt) {
        rep.ratio_ok = rep.ratio >= 1.0 - tol;
    }
    rep.s_two_optimal = is_two_optimal(inst, art.s0).first;
    rep.s_simple = is_simple(inst, art.s0);

    art.sub = stage("uncross", [&] { return subdivide_pair(inst, art.t0, art.s0); });
    rep.crossings = art.sub.crossing_count;
    rep.n_prime = art.sub.n_prime();
    const Instance& vp = art.sub.v_prime;
    double len_t_sub = tour_length(vp, art.sub.t_prime);
    double len_s_sub = tour_length(vp, art.sub.s_prime);
    rep.lengths_preserved = close_rel(len_t_sub, rep.len_t, tol) && close_rel(len_s_sub, rep.len_s, tol);
    rep.pair_crossing_free = is_crossing_free(vp, art.sub.t_prime, art.sub.s_prime);

    art.partition = stage("partition", [&] { return partition_all(vp, art.sub.t_prime, art.sub.s_prime); });
    const EdgePartition& part = art.partition;

    rep.sets = {
        {"interior-forward", static_cast<int>(part.interior_forward.size()), sum_edges(vp, part.interior_forward)},
        {"interior-backward", static_cast<int>(part.interior_backward.size()), sum_edges(vp, part.interior_backward)},
        {"exterior-forward", static_cast<int>(part.exterior_forward.size()), sum_edges(vp, part.exterior_forward)},
        {"exterior-backward", static_cast<int>(part.exterior_backward.size()), sum_edges(vp, part.exterior_backward)},
        {"on-tour", static_cast<int>(part.on_tour.size()), sum_edges(vp, part.on_tour)},
    };
    rep.five_set_sum = 0.0;
    for (const SetSummary& s : rep.sets) rep.five_set_sum += s.c_sum;
    rep.five_set_ok = close_rel(rep.five_set_sum, len_s_sub, tol);
    rep.on_tour_bound_ok = rep.sets[4].c_sum <= len_t_sub + tol * std::max(1.0, len_t_sub);

    art.arbs = stage("arborescence", [&] {
        return pipeline_arborescences(vp, art.sub.t_prime, art.sub.s_prime, part);
    });

    stage("verify", [&] {
        for (const auto& entry : art.arbs.entries) {
            const Arborescence& a = entry.build.arb;
            ArbSummary sum;
            sum.label = entry.label;
            sum.vertices = a.vertex_count;
            sum.edge_count = static_cast<int>(a.edges.size());
            sum.c_total = a.c_total();
            sum.w_total = a.w_total();
            sum.k = sum.c_total / sum.w_total;
            sum.triangle = check_combined_triangle(a, tol);
            sum.exchange = check_combined_two_opt(a, tol);
            sum.subtree = check_weight_bound(a, tol);
            sum.max_child = check_max_bound(a, tol);
            sum.heavy = heavy_child_set(a, sum.k, tol);
            sum.certificate = bound_certificate(a, tol);
            double boundary_total = sum.w_total + entry.build.root_tour_boundary;
            sum.conservation_slack = boundary_total - len_t_sub;
            sum.conservation_ok = close_rel(boundary_total, len_t_sub, tol);
            rep.arbs.push_back(std::move(sum));
        }
        return 0;
    });

    rep.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t_start).count();
    return result;
}

namespace {

nlohmann::json lemma_to_json(const LemmaReport& r) {
    nlohmann::json j{{"condition", r.condition}, {"holds", r.holds},
                     {"worst_slack", r.worst_slack}, {"checked", r.checked}};
    if (r.witness_edge) j["witness_edge"] = *r.witness_edge;
    return j;
}

}  // namespace

nlohmann::json report_to_json(const PipelineReport& rep) {
    nlohmann::json j;
    j["instance"] = rep.instance_id;
    j["mode"] = rep.mode;
    j["n"] = rep.n;
    j["n_prime"] = rep.n_prime;
    j["crossings"] = rep.crossings;
    j["len_t"] = rep.len_t;
    j["len_s"] = rep.len_s;
    j["ratio"] = rep.ratio;
    j["ratio_ok"] = rep.ratio_ok;
    j["lengths_preserved"] = rep.lengths_preserved;
    j["s_two_optimal"] = rep.s_two_optimal;
    j["s_simple"] = rep.s_simple;
    j["pair_crossing_free"] = rep.pair_crossing_free;
    j["five_set_sum"] = rep.five_set_sum;
    j["five_set_ok"] = rep.five_set_ok;
    j["on_tour_bound_ok"] = rep.on_tour_bound_ok;
    j["all_checks_pass"] = rep.all_checks_pass();
    nlohmann::json sets = nlohmann::json::array();
    for (const SetSummary& s : rep.sets) {
        sets.push_back({{"label", s.label}, {"size", s.size}, {"c", s.c_sum}});
    }
    j["sets"] = sets;
    nlohmann::json arbs = nlohmann::json::array();
    for (const ArbSummary& a : rep.arbs) {
        nlohmann::json ja;
        ja["label"] = a.label;
        ja["vertices"] = a.vertices;
        ja["edges"] = a.edge_count;
        ja["c_total"] = a.c_total;
        ja["w_total"] = a.w_total;
        ja["k"] = a.k;
        ja["checks"] = {lemma_to_json(a.triangle), lemma_to_json(a.exchange),
                        lemma_to_json(a.subtree), lemma_to_json(a.max_child),
                        lemma_to_json(a.heavy.report)};
        ja["certificate"] = {{"k", a.certificate.k},
                             {"small_k", a.certificate.small_k},
                             {"cover_ok", a.certificate.cover_ok},
                             {"size_bound_ok", a.certificate.size_bound_ok},
                             {"ratio_bound", a.certificate.ratio_bound},
                             {"ratio_bound_ok", a.certificate.ratio_bound_ok},
                             {"log_base_mismatch", a.certificate.log_base_mismatch}};
        ja["conservation_ok"] = a.conservation_ok;
        ja["conservation_slack"] = a.conservation_slack;
        ja["all_ok"] = a.all_ok();
        arbs.push_back(std::move(ja));
    }
    j["arborescences"] = arbs;
    return j;
}

std::string sweep_csv_header() {
    return "# tourlab sweep format v1\n"
           "seed,n,family,policy,instance,crossings,n_prime,len_t,len_s,ratio,"
           "interior_fwd,interior_bwd,exterior_fwd,exterior_bwd,on_tour,"
           "max_k,s_two_optimal,s_simple,checks_pass\n";
}

std::string report_csv_row(uint64_t seed, const ExperimentConfig& cfg, const PipelineReport& rep) {
    double max_k = 0.0;
    for (const ArbSummary& a : rep.arbs) max_k = std::max(max_k, a.k);
    std::string row;
    row += std::to_string(seed) + "," + std::to_string(rep.n) + ",";
    row += family_name(cfg.family) + "," + pivot_name(cfg.policy) + ",";
    row += rep.instance_id + ",";
    row += std::to_string(rep.crossings) + "," + std::to_string(rep.n_prime) + ",";
    row += csv_num(rep.len_t) + "," + csv_num(rep.len_s) + "," + csv_num(rep.ratio) + ",";
    for (int i = 0; i < 5; ++i) row += std::to_string(rep.sets[i].size) + ",";
    row += csv_num(max_k) + ",";
    row += (rep.s_two_optimal ? "1" : "0");
    row += ",";
    row += (rep.s_simple ? "1" : "0");
    row += ",";
    row += (rep.all_checks_pass() ? "1" : "0");
    row += "\n";
    return row;
}

}  // namespace tourlab
