#include "tourlab/cli.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>

#include "tourlab/errors.hpp"
#include "tourlab/fixtures.hpp"
#include "tourlab/json_io.hpp"
#include "tourlab/pipeline.hpp"
#include "tourlab/svg.hpp"

namespace tourlab {

namespace {

struct CommonOpts {
    std::string fixture;
    std::string in_file;
    std::string tour_file;
    std::string s_tour_file;
    std::string out;
    std::string mode;  // "", "exact-opt", "assumed-opt"
    std::string policy = "first-improvement";
    std::string family = "uniform";
    uint64_t seed = 1;
    int n = 10;
    int scale = 0;
    int starts = 1;
    int max_iters = 1000000;
    double tolerance = kLemmaTolerance;
    bool reverse_s = false;
};

void add_instance_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--fixture", o.fixture, "bundled pair: pair12 or pair42");
    cmd->add_option("--in", o.in_file, "instance JSON file");
    cmd->add_option("--seed", o.seed, "generator seed");
    cmd->add_option("--n", o.n, "number of points to generate");
    cmd->add_option("--family", o.family, "uniform | grid | collinear");
    cmd->add_option("--scale", o.scale, "coordinate range (0: automatic)");
}

void add_pair_opts(CLI::App* cmd, CommonOpts& o) {
    add_instance_opts(cmd, o);
    cmd->add_option("--tour", o.tour_file, "tour JSON for the reference tour");
    cmd->add_option("--s-tour", o.s_tour_file, "tour JSON for the 2-optimal tour");
    cmd->add_option("--mode", o.mode, "exact-opt | assumed-opt");
    cmd->add_option("--policy", o.policy, "first-improvement | best-improvement");
    cmd->add_option("--starts", o.starts, "2-opt starts (first is index order)");
    cmd->add_option("--max-iters", o.max_iters, "2-opt iteration budget");
    cmd->add_option("--tolerance", o.tolerance, "relative tolerance for checks");
    cmd->add_flag("--reverse-s", o.reverse_s, "reverse the 2-optimal tour's orientation");
}

Instance resolve_instance(const CommonOpts& o) {
    if (!o.fixture.empty()) return fixture_by_name(o.fixture).instance;
    if (!o.in_file.empty()) return instance_from_json(load_json_file(o.in_file));
    return generate_instance(o.seed, o.n, family_from_name(o.family),
                             o.scale > 0 ? o.scale : std::max(100, 10 * o.n));
}

ExperimentConfig resolve_config(const CommonOpts& o) {
    ExperimentConfig cfg;
    cfg.seed = o.seed;
    cfg.n = o.n;
    cfg.family = family_from_name(o.family);
    cfg.scale = o.scale;
    cfg.policy = pivot_from_name(o.policy);
    cfg.starts = o.starts;
    cfg.max_iters = o.max_iters;
    cfg.tolerance = o.tolerance;

    if (!o.fixture.empty()) {
        PairFixture fx = fixture_by_name(o.fixture);
        cfg.instance = fx.instance;
        cfg.supplied_t = fx.t;
        cfg.supplied_s = fx.s;
    } else if (!o.in_file.empty()) {
        cfg.instance = instance_from_json(load_json_file(o.in_file));
        if (!o.tour_file.empty()) cfg.supplied_t = tour_from_json(load_json_file(o.tour_file));
        if (!o.s_tour_file.empty()) cfg.supplied_s = tour_from_json(load_json_file(o.s_tour_file));
    }
    if (o.reverse_s && cfg.supplied_s) cfg.supplied_s = reversed(*cfg.supplied_s);

    if (o.mode == "exact-opt") {
        cfg.mode = ExperimentConfig::Mode::kExactOpt;
        cfg.supplied_t.reset();
    } else if (o.mode == "assumed-opt") {
        cfg.mode = ExperimentConfig::Mode::kAssumedOpt;
    } else if (o.mode.empty()) {
        cfg.mode = cfg.supplied_t ? ExperimentConfig::Mode::kAssumedOpt
                                  : ExperimentConfig::Mode::kExactOpt;
    } else {
        throw std::invalid_argument("unknown mode '" + o.mode + "'");
    }
    return cfg;
}

void print_lemma(const std::string& scope, const LemmaReport& r) {
    std::printf("  [%s] %-18s %s  (worst slack %.6g over %d checks)\n", scope.c_str(),
                r.condition.c_str(), r.holds ? "PASS" : "FAIL", r.worst_slack, r.checked);
}

bool print_arb_verdicts(const std::string& label, const Arborescence& a, double tol) {
    LemmaReport checks[] = {check_combined_triangle(a, tol), check_combined_two_opt(a, tol),
                            check_weight_bound(a, tol), check_max_bound(a, tol)};
    double k = a.c_total() / a.w_total();
    EdgeSetReport heavy = heavy_child_set(a, k, tol);
    BoundCertificate cert = bound_certificate(a, tol);

    bool ok = true;
    for (const LemmaReport& r : checks) {
        print_lemma(label, r);
        ok = ok && r.holds;
    }
    print_lemma(label, heavy.report);
    ok = ok && heavy.report.holds;
    if (cert.small_k) {
        std::printf("  [%s] certificate          PASS  (small-k regime, k = %.6g < 18)\n",
                    label.c_str(), cert.k);
    } else {
        std::printf("  [%s] certificate          %s  (k = %.6g, cover %s, size %s, ratio bound %.6g %s%s)\n",
                    label.c_str(), cert.all_ok() ? "PASS" : "FAIL", cert.k,
                    cert.cover_ok ? "ok" : "GAP", cert.size_bound_ok ? "ok" : "FAIL",
                    cert.ratio_bound, cert.ratio_bound_ok ? "ok" : "FAIL",
                    cert.log_base_mismatch ? ", base-2 disagrees" : "");
        ok = ok && cert.all_ok();
    }
    return ok;
}

int print_pipeline_summary(const PipelineResult& res) {
    const PipelineReport& rep = res.report;
    std::printf("instance %s  (n = %d, mode %s)\n", rep.instance_id.c_str(), rep.n, rep.mode.c_str());
    std::printf("  len(t) = %.6f  len(s) = %.6f  ratio = %.6f\n", rep.len_t, rep.len_s, rep.ratio);
    std::printf("  crossings = %d  n' = %d  crossing-free after subdivision: %s\n", rep.crossings,
                rep.n_prime, rep.pair_crossing_free ? "yes" : "NO");
    std::printf("  s 2-optimal: %s  s simple: %s  lengths preserved: %s\n",
                rep.s_two_optimal ? "yes" : "NO", rep.s_simple ? "yes" : "NO",
                rep.lengths_preserved ? "yes" : "NO");
    std::printf("  partition sizes:");
    for (const SetSummary& s : rep.sets) std::printf(" %s=%d", s.label.c_str(), s.size);
    std::printf("\n  five-set sum = %.6f (%s), on-tour bound %s\n", rep.five_set_sum,
                rep.five_set_ok ? "ok" : "FAIL", rep.on_tour_bound_ok ? "ok" : "FAIL");
    bool ok = rep.all_checks_pass();
    for (const ArbSummary& a : rep.arbs) {
        print_lemma(a.label, a.triangle);
        print_lemma(a.label, a.exchange);
        print_lemma(a.label, a.subtree);
        print_lemma(a.label, a.max_child);
        print_lemma(a.label, a.heavy.report);
        std::printf("  [%s] |V| = %d, |E| = %d, k = %.6g, conservation %s, certificate %s\n",
                    a.label.c_str(), a.vertices, a.edge_count, a.k,
                    a.conservation_ok ? "ok" : "FAIL",
                    a.certificate.small_k ? "small-k" : (a.certificate.all_ok() ? "ok" : "FAIL"));
    }
    std::printf("result: %s  (%.1f ms)\n", ok ? "ALL CHECKS PASS" : "CHECKS FAILED", rep.runtime_ms);
    return ok ? 0 : 2;
}

void write_pipeline_outputs(const std::string& out_dir, uint64_t seed, const ExperimentConfig& cfg,
                            const PipelineResult& res) {
    namespace fs = std::filesystem;
    fs::path dir(out_dir);
    write_text_file(dir / "report.json", report_to_json(res.report).dump(2) + "\n");
    write_text_file(dir / "report.csv", sweep_csv_header() + report_csv_row(seed, cfg, res.report));
    write_text_file(dir / "subdivided.json", subdivided_to_json(res.artifacts.sub).dump(2) + "\n");
    write_text_file(dir / "tours.svg", render_svg(SvgStage::kTours, res.artifacts));
    write_text_file(dir / "partition.svg", render_svg(SvgStage::kPartition, res.artifacts));
    write_text_file(dir / "arborescence.svg", render_svg(SvgStage::kArborescence, res.artifacts));
}

std::pair<uint64_t, uint64_t> parse_seed_range(const std::string& range) {
    auto dots = range.find("..");
    if (dots == std::string::npos) {
        uint64_t s = std::stoull(range);
        return {s, s};
    }
    return {std::stoull(range.substr(0, dots)), std::stoull(range.substr(dots + 2))};
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"2-opt versus optimal tours: crossing removal, edge partitions and dual arborescence checks"};
    app.require_subcommand(1);

    CommonOpts gen_o, solve_o, twoopt_o, uncross_o, part_o, arbor_o, verify_o, pipe_o, sweep_o;
    std::string verify_arbor_file, sweep_seeds = "1..10", twoopt_start = "canonical";
    int solve_limit = kHeldKarpDefaultLimit;

    CLI::App* gen = app.add_subcommand("gen", "emit an instance as JSON");
    add_instance_opts(gen, gen_o);
    gen->add_option("--out", gen_o.out, "output file (default: stdout)");

    CLI::App* solve = app.add_subcommand("solve", "exact optimal tour");
    add_instance_opts(solve, solve_o);
    solve->add_option("--limit", solve_limit, "dynamic-programming size limit");
    solve->add_option("--out", solve_o.out, "tour output file");

    CLI::App* twoopt = app.add_subcommand("twoopt", "run the 2-opt heuristic");
    add_instance_opts(twoopt, twoopt_o);
    twoopt->add_option("--policy", twoopt_o.policy, "first-improvement | best-improvement");
    twoopt->add_option("--start", twoopt_start, "canonical | random");
    twoopt->add_option("--max-iters", twoopt_o.max_iters, "iteration budget");
    twoopt->add_option("--out", twoopt_o.out, "tour output file");

    CLI::App* uncross = app.add_subcommand("uncross", "subdivide a tour pair at its crossings");
    add_pair_opts(uncross, uncross_o);
    uncross->add_option("--out", uncross_o.out, "subdivided pair output file");

    CLI::App* partition = app.add_subcommand("partition", "partition the 2-optimal tour's edges");
    add_pair_opts(partition, part_o);
    partition->add_option("--out", part_o.out, "partition output file");

    CLI::App* arbor = app.add_subcommand("arbor", "build the dual arborescences");
    add_pair_opts(arbor, arbor_o);
    arbor->add_option("--out", arbor_o.out, "output directory");

    CLI::App* verify = app.add_subcommand("verify", "run the full check suite");
    add_pair_opts(verify, verify_o);
    verify->add_option("--arbor", verify_arbor_file, "check a standalone arborescence JSON");

    CLI::App* pipeline = app.add_subcommand("pipeline", "end-to-end run with report and figures");
    add_pair_opts(pipeline, pipe_o);
    pipeline->add_option("--out", pipe_o.out, "output directory");

    CLI::App* sweep = app.add_subcommand("sweep", "pipeline over a seed range, CSV report");
    add_pair_opts(sweep, sweep_o);
    sweep->add_option("--seeds", sweep_seeds, "seed range, e.g. 1..100");
    sweep->add_option("--out", sweep_o.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(gen)) {
            Instance inst = resolve_instance(gen_o);
            std::string text = instance_to_json(inst).dump(2) + "\n";
            if (gen_o.out.empty()) {
                std::fputs(text.c_str(), stdout);
            } else {
                write_text_file(gen_o.out, text);
            }
            return 0;
        }
        if (app.got_subcommand(solve)) {
            Instance inst = resolve_instance(solve_o);
            Tour t = exact_optimum(inst, solve_limit);
            std::printf("instance %s: optimal length %.6f\n", inst.id.c_str(), tour_length(inst, t));
            if (!solve_o.out.empty()) write_text_file(solve_o.out, tour_to_json(t).dump() + "\n");
            return 0;
        }
        if (app.got_subcommand(twoopt)) {
            Instance inst = resolve_instance(twoopt_o);
            Tour start;
            start.order.resize(inst.n());
            std::iota(start.order.begin(), start.order.end(), 0);
            if (twoopt_start == "random") {
                std::mt19937_64 rng(twoopt_o.seed);
                for (int i = inst.n() - 1; i > 0; --i) {
                    std::swap(start.order[i], start.order[sample_int(rng, 0, i)]);
                }
            } else if (twoopt_start != "canonical") {
                throw std::invalid_argument("unknown start '" + twoopt_start + "'");
            }
            auto [tour, stats] = run_two_opt(inst, start, pivot_from_name(twoopt_o.policy),
                                             twoopt_o.max_iters);
            std::printf("instance %s: %s, %d iterations, length %.6f -> %.6f%s\n", inst.id.c_str(),
                        pivot_name(stats.policy).c_str(), stats.iterations, stats.start_length,
                        stats.final_length, stats.natural_termination ? "" : " (budget exhausted)");
            if (!twoopt_o.out.empty()) write_text_file(twoopt_o.out, tour_to_json(tour).dump() + "\n");
            return 0;
        }
        if (app.got_subcommand(uncross)) {
            ExperimentConfig cfg = resolve_config(uncross_o);
            PipelineResult res = run_pipeline(cfg);
            std::printf("instance %s: %d crossings, n' = %d, crossing-free: %s\n",
                        res.report.instance_id.c_str(), res.report.crossings, res.report.n_prime,
                        res.report.pair_crossing_free ? "yes" : "NO");
            if (!uncross_o.out.empty()) {
                write_text_file(uncross_o.out, subdivided_to_json(res.artifacts.sub).dump(2) + "\n");
            }
            return res.report.pair_crossing_free ? 0 : 2;
        }
        if (app.got_subcommand(partition)) {
            ExperimentConfig cfg = resolve_config(part_o);
            PipelineResult res = run_pipeline(cfg);
            std::printf("instance %s: sizes", res.report.instance_id.c_str());
            for (const SetSummary& s : res.report.sets) std::printf(" %s=%d", s.label.c_str(), s.size);
            std::printf("\n");
            if (!part_o.out.empty()) {
                write_text_file(part_o.out, partition_to_json(res.artifacts.partition).dump(2) + "\n");
            }
            return 0;
        }
        if (app.got_subcommand(arbor)) {
            ExperimentConfig cfg = resolve_config(arbor_o);
            PipelineResult res = run_pipeline(cfg);
            bool ok = true;
            for (const auto& entry : res.artifacts.arbs.entries) {
                ok = print_arb_verdicts(entry.label, entry.build.arb, cfg.tolerance) && ok;
                if (!arbor_o.out.empty()) {
                    write_text_file(std::filesystem::path(arbor_o.out) / ("arbor-" + entry.label + ".json"),
                                    arborescence_to_json(entry.build.arb).dump(2) + "\n");
                }
            }
            if (res.artifacts.arbs.entries.empty()) std::printf("no chord set has two or more edges\n");
            return ok ? 0 : 2;
        }
        if (app.got_subcommand(verify)) {
            if (!verify_arbor_file.empty()) {
                Arborescence a = arborescence_from_json(load_json_file(verify_arbor_file));
                bool ok = print_arb_verdicts("arbor", a, verify_o.tolerance);
                std::printf("result: %s\n", ok ? "ALL CHECKS PASS" : "CHECKS FAILED");
                return ok ? 0 : 2;
            }
            ExperimentConfig cfg = resolve_config(verify_o);
            PipelineResult res = run_pipeline(cfg);
            return print_pipeline_summary(res);
        }
        if (app.got_subcommand(pipeline)) {
            ExperimentConfig cfg = resolve_config(pipe_o);
            PipelineResult res = run_pipeline(cfg);
            if (!pipe_o.out.empty()) write_pipeline_outputs(pipe_o.out, pipe_o.seed, cfg, res);
            return print_pipeline_summary(res);
        }
        if (app.got_subcommand(sweep)) {
            auto [lo, hi] = parse_seed_range(sweep_seeds);
            std::string csv = sweep_csv_header();
            double max_ratio = 0.0;
            uint64_t max_seed = lo;
            int failures = 0, simplicity_violations = 0;
            for (uint64_t s = lo; s <= hi; ++s) {
                CommonOpts o = sweep_o;
                o.seed = s;
                ExperimentConfig cfg = resolve_config(o);
                PipelineResult res = run_pipeline(cfg);
                csv += report_csv_row(s, cfg, res.report);
                if (res.report.ratio > max_ratio) {
                    max_ratio = res.report.ratio;
                    max_seed = s;
                }
                if (!res.report.all_checks_pass()) ++failures;
                if (!res.report.s_simple) ++simplicity_violations;
            }
            if (!sweep_o.out.empty()) {
                write_text_file(std::filesystem::path(sweep_o.out) / "sweep.csv", csv);
            } else {
                std::fputs(csv.c_str(), stdout);
            }
            std::printf("seeds %llu..%llu  n=%d  max ratio %.6f (seed %llu)  "
                        "simplicity violations %d  failures %d\n",
                        static_cast<unsigned long long>(lo), static_cast<unsigned long long>(hi),
                        sweep_o.n, max_ratio, static_cast<unsigned long long>(max_seed),
                        simplicity_violations, failures);
            return failures == 0 ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}

}  // namespace tourlab
