#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "loewner/analysis.hpp"
#include "loewner/curve_metrics.hpp"
#include "loewner/families.hpp"
#include "loewner/loewner.hpp"
#include "loewner/metrics.hpp"
#include "loewner/report.hpp"
#include "loewner/sle.hpp"
#include "loewner/suites.hpp"

using namespace loewner;
using nlohmann::json;

namespace {

ComplexPoint parse_point(const std::string& s) {
    if (s == "inf") return ComplexPoint::infinity();
    std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("point", "expected re,im or inf: " + s);
    return ComplexPoint(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const std::string& out, const std::string& body) {
    if (out.empty() || out == "-") {
        std::cout << body;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for Loewner evolutions"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread count (0 = default)");

    // trace: driving function -> curve
    auto* trace = app.add_subcommand("trace", "Trace the curve of a driving function");
    std::string tr_in, tr_out;
    std::size_t tr_steps = 1000;
    trace->add_option("--in", tr_in, "driving CSV")->required();
    trace->add_option("--out", tr_out, "curve CSV output")->required();
    trace->add_option("--steps", tr_steps, "capacity steps");

    // drive: curve -> driving function
    auto* drive = app.add_subcommand("drive", "Unzip a curve into its driving function");
    std::string dr_in, dr_out, dr_x = "inf";
    drive->add_option("--in", dr_in, "curve CSV")->required();
    drive->add_option("--out", dr_out, "driving CSV output")->required();
    drive->add_option("--x", dr_x, "observation point re,im (or inf)");

    // metric: distance between two curves
    auto* metric = app.add_subcommand("metric", "Evaluate a metric between two curves");
    std::string me_a, me_b, me_name = "d_strong", me_x = "inf", me_out;
    metric->add_option("--a", me_a, "first curve CSV")->required();
    metric->add_option("--b", me_b, "second curve CSV")->required();
    metric->add_option("--metric", me_name,
                       "d_cap_r | d_cap_l | d_f | d_b | d_strong | hausdorff");
    metric->add_option("--x", me_x, "observation point for d_cap metrics");
    metric->add_option("--out", me_out, "output path (default stdout)");

    // sle-sample
    auto* sle = app.add_subcommand("sle-sample", "Sample an SLE driving or trace");
    double sl_kappa = 2.0, sl_rho = 0.0, sl_T = 1.0;
    std::size_t sl_steps = 1000;
    std::uint64_t sl_seed = 0, sl_stream = 0;
    std::string sl_out, sl_emit = "curve", sl_x;
    sle->add_option("--kappa", sl_kappa, "diffusivity");
    sle->add_option("--rho", sl_rho, "force point weight (radial)");
    sle->add_option("--T", sl_T, "capacity horizon");
    sle->add_option("--steps", sl_steps, "trace steps");
    sle->add_option("--seed", sl_seed, "RNG seed");
    sle->add_option("--stream", sl_stream, "RNG stream");
    sle->add_option("--emit", sl_emit, "curve | driving");
    sle->add_option("--x", sl_x, "interior point: radial SLE(kappa;kappa-6) frame");
    sle->add_option("--out", sl_out, "output path")->required();

    // example: family generators
    auto* example = app.add_subcommand("example", "Generate a counterexample-family curve");
    std::string ex_family, ex_variant = "a", ex_out;
    std::size_t ex_j = 1, ex_depth = 2, ex_k = 6;
    bool ex_target = false;
    double ex_loop_scale = 0.12;
    example->add_option("--family", ex_family,
                        "ladder | three_segment | dyadic_loops | hooks | "
                        "figure_eight | half_strip | smooth")
        ->required();
    example->add_option("--j", ex_j, "family index");
    example->add_option("--variant", ex_variant,
                        "a|b (figure_eight), plain|doubled (three_segment), "
                        "forward|backward (figure_eight --target)");
    example->add_option("--depth", ex_depth, "loop recursion depth (dyadic_loops)");
    example->add_option("--k", ex_k, "zigzag count (half_strip)");
    example->add_option("--loop-scale", ex_loop_scale, "loop size (dyadic_loops)");
    example->add_flag("--target", ex_target, "emit the family's limit curve");
    example->add_option("--out", ex_out, "curve CSV output")->required();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Harmonic-measure and convergence diagnostics");
    std::string an_op, an_curve, an_x, an_z, an_a, an_b, an_out;
    double an_s = 0.0, an_t = 0.0, an_eps = 0.02, an_step = 0.02;
    std::size_t an_walkers = 0, an_grid = 24;
    std::uint64_t an_seed = 0;
    analyze->add_option("--op", an_op, "hit | alpha | cara | tsep | sparam")->required();
    analyze->add_option("--curve", an_curve, "curve CSV");
    analyze->add_option("--x", an_x, "observation point re,im");
    analyze->add_option("--z", an_z, "start point re,im");
    analyze->add_option("--a", an_a, "first driving CSV (cara)");
    analyze->add_option("--b", an_b, "second driving CSV (cara)");
    analyze->add_option("--s", an_s, "interval start (capacity time)");
    analyze->add_option("--t", an_t, "interval end / split time");
    analyze->add_option("--eps", an_eps, "resolution parameter");
    analyze->add_option("--walkers", an_walkers, "Monte Carlo walkers (hit: 0 = conformal)");
    analyze->add_option("--step", an_step, "Monte Carlo absorption scale");
    analyze->add_option("--grid", an_grid, "lattice resolution (cara)");
    analyze->add_option("--seed", an_seed, "RNG seed");
    analyze->add_option("--out", an_out, "output path (default stdout)");

    // converge
    auto* converge = app.add_subcommand("converge", "Run an experiment suite from a JSON config");
    std::string cv_config, cv_out, cv_format = "json";
    std::uint64_t cv_seed = 0;
    bool cv_seed_set = false;
    converge->add_option("--config", cv_config, "JSON config file")->required();
    converge->add_option("--out", cv_out, "report output path");
    converge->add_option("--format", cv_format, "csv | json | svg");
    converge->add_option("--seed", cv_seed, "override config seed")
        ->each([&](const std::string&) { cv_seed_set = true; });

    // report
    auto* report = app.add_subcommand("report", "Re-emit a JSON report as csv, json or svg");
    std::string rp_in, rp_out, rp_format = "csv";
    report->add_option("--in", rp_in, "report JSON")->required();
    report->add_option("--format", rp_format, "csv | json | svg");
    report->add_option("--out", rp_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (*trace) {
            DrivingFunction w = read_driving_csv(tr_in);
            Curve c = w.kind == Kind::Radial ? solve_radial_trace(w, tr_steps)
                                             : solve_chordal_trace(w, tr_steps);
            write_curve_csv(c, tr_out);
        } else if (*drive) {
            Curve c = read_curve_csv(dr_in);
            ComplexPoint x = parse_point(dr_x);
            DrivingFunction w = driving_from(c, x);
            write_driving_csv(w, dr_out,
                              x.at_infinity ? std::optional<ComplexPoint>{} : x,
                              curve_hash(c));
        } else if (*metric) {
            Curve a = read_curve_csv(me_a), b = read_curve_csv(me_b);
            json out;
            out["metric"] = me_name;
            if (me_name == "d_cap_r" || me_name == "d_cap_l") {
                ComplexPoint x = parse_point(me_x);
                MetricReport r = me_name == "d_cap_r"
                                     ? d_cap_r(a, b, x)
                                     : d_cap_l(reverse(a), reverse(b), x);
                out["value"] = r.value;
                out["dT"] = r.dT;
                out["sup"] = r.sup;
            } else if (me_name == "d_f" || me_name == "d_b") {
                bool warn = false;
                out["value"] = d_locally_uniform(
                    a, b, me_name == "d_f" ? Direction::Forward : Direction::Backward,
                    0.25, 8, &warn);
                out["short_horizon"] = warn;
            } else if (me_name == "d_strong") {
                out["value"] = uniform_distance(a, b);
            } else if (me_name == "hausdorff") {
                out["value"] = hausdorff_distance(a, b);
            } else {
                throw std::runtime_error("unknown metric " + me_name);
            }
            emit(me_out, out.dump(2) + "\n");
        } else if (*sle) {
            SleConfig sc;
            sc.kappa = sl_kappa;
            sc.rho = sl_rho;
            sc.T = sl_T;
            sc.seed = sl_seed;
            sc.stream = sl_stream;
            if (sl_emit == "driving") {
                DrivingFunction w = sl_rho != 0.0 ? sample_radial_sle_kr(sc).driving
                                                  : sample_chordal_driving(sc);
                write_driving_csv(w, sl_out);
            } else {
                std::optional<ComplexPoint> x;
                if (!sl_x.empty()) x = parse_point(sl_x);
                write_curve_csv(sample_sle_trace(sc, sl_steps, x), sl_out);
            }
        } else if (*example) {
            Curve c;
            if (ex_family == "ladder")
                c = ex_target ? gen_ladder_target(ex_j) : gen_ladder(ex_j);
            else if (ex_family == "three_segment")
                c = ex_target ? gen_three_segment_target()
                              : gen_three_segment(ex_j, ex_variant == "doubled"
                                                            ? ThreeSegmentVariant::Doubled
                                                            : ThreeSegmentVariant::Plain);
            else if (ex_family == "dyadic_loops")
                c = gen_dyadic_loops(ex_depth, gen_smooth_target(), ex_loop_scale);
            else if (ex_family == "hooks")
                c = ex_target ? gen_hooks_limit() : gen_hooks(ex_j);
            else if (ex_family == "figure_eight")
                c = ex_target ? gen_figure_eight_limit(ex_variant == "backward"
                                                           ? LimitDirection::Backward
                                                           : LimitDirection::Forward)
                              : gen_figure_eight(ex_j, ex_variant == "b"
                                                           ? FigureEightVariant::B
                                                           : FigureEightVariant::A);
            else if (ex_family == "half_strip")
                c = gen_half_strip(ex_k);
            else if (ex_family == "smooth")
                c = ex_target ? gen_smooth_target() : gen_smooth_family(ex_j);
            else
                throw std::runtime_error("unknown family " + ex_family);
            write_curve_csv(c, ex_out);
        } else if (*analyze) {
            json out;
            out["op"] = an_op;
            if (an_op == "hit") {
                Curve c = read_curve_csv(an_curve);
                ComplexPoint x = parse_point(an_x);
                if (an_walkers > 0) {
                    out["value"] = hitting_prob_mc(c, x, an_s, an_t, an_walkers,
                                                   an_step, an_seed);
                    out["walkers"] = an_walkers;
                } else {
                    out["value"] = hitting_prob_conformal(c, x, an_s, an_t);
                }
            } else if (an_op == "alpha") {
                Curve c = read_curve_csv(an_curve);
                out["value"] = alpha_left(c, parse_point(an_x), parse_point(an_z));
            } else if (an_op == "cara") {
                DrivingFunction w1 = read_driving_csv(an_a);
                DrivingFunction w2 = read_driving_csv(an_b);
                std::optional<ComplexPoint> x;
                if (!an_x.empty()) x = parse_point(an_x);
                double t = an_t > 0 ? an_t : std::min(w1.horizon(), w2.horizon());
                out["value"] = caratheodory_sup(w1, w2, x, t, an_eps, an_grid);
            } else if (an_op == "tsep") {
                Curve c = read_curve_csv(an_curve);
                out["value"] = time_separation_diag(c, an_t, an_eps);
            } else if (an_op == "sparam") {
                Curve c = read_curve_csv(an_curve);
                out["value"] =
                    harmonic_param_s(c, {{parse_point(an_x), 1.0}}, an_t);
            } else {
                throw std::runtime_error("unknown op " + an_op);
            }
            emit(an_out, out.dump(2) + "\n");
        } else if (*converge) {
            ExperimentConfig cfg = config_from_json(slurp(cv_config));
            if (cv_seed_set) cfg.seed = cv_seed;
            Report rep;
            if (cfg.suite == "convergence")
                rep = run_convergence_suite(cfg);
            else if (cfg.suite == "roundtrip")
                rep = run_roundtrip_suite(cfg);
            else if (cfg.suite == "law")
                rep = run_law_convergence(cfg);
            else
                throw std::runtime_error("unknown suite " + cfg.suite);
            std::string out_path = !cv_out.empty() ? cv_out : cfg.out_path;
            if (!out_path.empty())
                emit_report(rep, cv_format, out_path);
            else if (cv_format == "csv")
                std::cout << report_to_csv(rep);
            else if (cv_format == "svg")
                std::cout << report_to_svg(rep);
            else
                std::cout << report_to_json(rep);
            std::vector<std::string> bad = verdict_mismatches(cfg, rep);
            for (const std::string& msg : bad) std::cerr << "mismatch: " << msg << "\n";
            return bad.empty() ? 0 : 2;
        } else if (*report) {
            Report rep = report_from_json(slurp(rp_in));
            std::string body;
            if (rp_format == "csv")
                body = report_to_csv(rep);
            else if (rp_format == "json")
                body = report_to_json(rep);
            else if (rp_format == "svg")
                body = report_to_svg(rep);
            else
                throw std::runtime_error("unknown format " + rp_format);
            emit(rp_out, body);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
