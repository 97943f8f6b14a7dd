#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "loewner/analysis.hpp"
#include "loewner/curve_metrics.hpp"
#include "loewner/families.hpp"
#include "loewner/loewner.hpp"
#include "loewner/metrics.hpp"
#include "loewner/sle.hpp"
#include "loewner/suites.hpp"

namespace loewner {

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ComplexPoint point_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf")
        return ComplexPoint::infinity();
    return ComplexPoint(j.at(0).get<double>(), j.at(1).get<double>());
}

/// Euclidean distance from p to the sampled curve.
double curve_distance(const Curve& c, const ComplexPoint& p) {
    double best = 1e300;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (!c.points[i].finite() || !c.points[i + 1].finite()) continue;
        Complex a = c.points[i].value(), b = c.points[i + 1].value();
        Complex ab = b - a, ap = p.value() - a;
        double len2 = std::norm(ab);
        double lam = len2 > 0 ? std::clamp((ap.real() * ab.real() + ap.imag() * ab.imag()) / len2, 0.0, 1.0)
                              : 0.0;
        best = std::min(best, std::abs(ap - lam * ab));
    }
    return best;
}

struct FamilySetup {
    std::vector<std::size_t> js;
    std::vector<Curve> curves;  // canonical half-plane frame
    Curve target;
    std::vector<ComplexPoint> psi;
    std::vector<std::string> metrics;
};

Curve canonical_disc(const Curve& c) {
    return transport_to_canonical(c, SourceDomain::Disc, c.points.front(), c.back());
}

FamilySetup make_family(const ExperimentConfig& cfg) {
    FamilySetup f;
    std::size_t j_max = cfg.j_max;
    auto range = [&](std::size_t def_max) {
        if (j_max == 0) j_max = def_max;
        for (std::size_t j = cfg.j_min; j <= j_max; ++j) f.js.push_back(j);
        if (f.js.empty())
            throw std::invalid_argument("convergence suite: empty index range");
    };
    if (cfg.family == "smooth") {
        range(8);
        for (std::size_t j : f.js) f.curves.push_back(gen_smooth_family(j));
        f.target = gen_smooth_target();
        f.psi = {{0.0, 0.35}, {0.3, 0.3},   {-0.3, 0.3}, {0.15, 0.55},
                 {-0.15, 0.55}, {0.45, 0.15}, {-0.45, 0.15}, {0.0, 0.6},
                 {1.6, 0.6},  {-1.5, 0.9}, {0.0, 1.9},  {0.8, 1.7}};
        f.metrics = {"d_cap_r", "d_cap_l", "d_strong", "hausdorff"};
    } else if (cfg.family == "ladder") {
        range(6);
        for (std::size_t j : f.js) f.curves.push_back(gen_ladder(j));
        f.target = gen_ladder_target(f.js.back());
        f.psi = {{0.8, 0.8}, {-0.7, 1.2}, {0.6, 2.3}, {-0.9, 0.5}};
        f.metrics = {"d_cap_r", "d_strong", "hausdorff"};
    } else if (cfg.family == "three_segment") {
        range(6);
        for (std::size_t j : f.js)
            f.curves.push_back(canonical_disc(gen_three_segment(j, ThreeSegmentVariant::Doubled)));
        f.target = canonical_disc(gen_three_segment_target());
        f.metrics = {"d_f", "d_b", "d_strong", "hausdorff"};
    } else if (cfg.family == "hooks") {
        range(7);
        for (std::size_t j : f.js) f.curves.push_back(gen_hooks(j));
        f.target = gen_hooks_limit();
        f.psi = {{0.4, 0.9}, {-0.6, 0.5}, {-0.8, 1.2}, {0.9, 2.2}};
        f.metrics = {"d_cap_r", "d_cap_l", "d_strong", "hausdorff"};
    } else if (cfg.family == "figure_eight") {
        range(6);
        for (std::size_t j : f.js) f.curves.push_back(gen_figure_eight(j, FigureEightVariant::A));
        f.target = gen_figure_eight_limit(LimitDirection::Forward);
        f.psi = {figure_eight_viewpoint()};
        f.metrics = {"d_cap_fwd", "d_cap_fwd_alt", "d_cap_bwd"};
    } else {
        throw std::invalid_argument("convergence suite: unknown family " + cfg.family);
    }
    if (!cfg.psi_grid.empty()) f.psi = cfg.psi_grid;
    if (!cfg.metrics.empty()) f.metrics = cfg.metrics;

    for (std::size_t a = 0; a < f.psi.size(); ++a)
        for (std::size_t b = a + 1; b < f.psi.size(); ++b)
            if (f.psi[a] == f.psi[b])
                throw std::invalid_argument("convergence suite: duplicate viewpoint (" +
                                            num(f.psi[a].re) + "," + num(f.psi[a].im) + ")");
    for (const ComplexPoint& x : f.psi) {
        if (x.at_infinity) continue;
        for (std::size_t i = 0; i < f.js.size(); ++i)
            if (curve_distance(f.curves[i], x) < 1e-3)
                throw std::invalid_argument(
                    "convergence suite: viewpoint (" + num(x.re) + "," + num(x.im) +
                    ") lies on the index-" + std::to_string(f.js[i]) + " curve");
        if (curve_distance(f.target, x) < 1e-3)
            throw std::invalid_argument("convergence suite: viewpoint (" + num(x.re) +
                                        "," + num(x.im) + ") lies on the target curve");
    }
    return f;
}

bool needs_viewpoint(const std::string& m) {
    return m == "d_cap_r" || m == "d_cap_l" || m == "d_cap_fwd" ||
           m == "d_cap_fwd_alt" || m == "d_cap_bwd";
}

void add_verdicts(Report& rep, const std::vector<std::string>& metrics,
                  const std::vector<ComplexPoint>& psi) {
    // one series per (metric, x) in row order
    for (const std::string& m : metrics) {
        std::vector<ComplexPoint> xs =
            needs_viewpoint(m) ? psi : std::vector<ComplexPoint>{ComplexPoint::infinity()};
        for (const ComplexPoint& x : xs) {
            SeriesVerdict v;
            v.series = series_key(m, x);
            for (const auto& row : rep.rows)
                if (row.metric == m && row.x == x) v.values.push_back(row.value);
            v.verdict = trend_verdict(v.values);
            rep.verdicts.push_back(std::move(v));
        }
    }
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
    json doc = json::parse(text);
    ExperimentConfig cfg;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& k = it.key();
        const json& v = it.value();
        if (k == "suite") cfg.suite = v.get<std::string>();
        else if (k == "family") cfg.family = v.get<std::string>();
        else if (k == "j_min") cfg.j_min = v.get<std::size_t>();
        else if (k == "j_max") cfg.j_max = v.get<std::size_t>();
        else if (k == "psi_grid") {
            for (const auto& p : v) cfg.psi_grid.push_back(point_from_json(p));
        } else if (k == "metrics") cfg.metrics = v.get<std::vector<std::string>>();
        else if (k == "law_pair") cfg.law_pair = v.get<std::string>();
        else if (k == "kappa") cfg.kappa = v.get<double>();
        else if (k == "samples") cfg.samples = v.get<std::size_t>();
        else if (k == "trace_steps") cfg.trace_steps = v.get<std::size_t>();
        else if (k == "law_times") cfg.law_times = v.get<std::vector<double>>();
        else if (k == "law_x") cfg.law_x = point_from_json(v);
        else if (k == "seed") cfg.seed = v.get<std::uint64_t>();
        else if (k == "out") cfg.out_path = v.get<std::string>();
        else throw std::invalid_argument("config: unknown key " + k);
    }
    return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
    json psi = json::array();
    for (const auto& p : cfg.psi_grid) {
        if (p.at_infinity) psi.push_back("inf");
        else psi.push_back(json::array({p.re, p.im}));
    }
    json doc{{"suite", cfg.suite},
             {"family", cfg.family},
             {"j_min", cfg.j_min},
             {"j_max", cfg.j_max},
             {"psi_grid", psi},
             {"metrics", cfg.metrics},
             {"law_pair", cfg.law_pair},
             {"kappa", cfg.kappa},
             {"samples", cfg.samples},
             {"trace_steps", cfg.trace_steps},
             {"law_times", cfg.law_times},
             {"law_x", json::array({cfg.law_x.re, cfg.law_x.im})},
             {"seed", cfg.seed},
             {"out", cfg.out_path}};
    return doc.dump();
}

Report run_convergence_suite(const ExperimentConfig& cfg) {
    FamilySetup f = make_family(cfg);
    Report rep;
    rep.meta["suite"] = "convergence";
    rep.meta["family"] = cfg.family;
    rep.meta["seed"] = std::to_string(cfg.seed);
    rep.meta["config"] = config_to_json(cfg);

    bool fig8 = cfg.family == "figure_eight";
    ComplexPoint xv = f.psi.empty() ? ComplexPoint::infinity() : f.psi.front();

    // per-viewpoint target drivings, shared across indices
    std::vector<DrivingFunction> wt_fwd(f.psi.size()), wt_bwd(f.psi.size());
    Curve target_rev = reverse(f.target);
    DrivingFunction w_fig8_bwd;
    bool want_r = false, want_l = false;
    for (const std::string& m : f.metrics) {
        if (m == "d_cap_r" || m == "d_cap_fwd" || m == "d_cap_fwd_alt") want_r = true;
        if (m == "d_cap_l") want_l = true;
    }
    for (std::size_t xi = 0; xi < f.psi.size(); ++xi) {
        if (want_r) wt_fwd[xi] = driving_from(f.target, f.psi[xi]);
        if (want_l) wt_bwd[xi] = driving_from(target_rev, f.psi[xi]);
    }
    if (fig8) {
        Curve bwd_target = gen_figure_eight_limit(LimitDirection::Backward);
        w_fig8_bwd = driving_from(bwd_target, xv);
        if (wt_fwd.empty()) wt_fwd.resize(1);
        if (!want_r) wt_fwd[0] = driving_from(f.target, xv);
        MetricReport dis = driving_distance(wt_fwd[0], w_fig8_bwd);
        rep.meta["fig8_target_disagreement"] = num(dis.sup);
    }

    // one row block per index, assembled in order after the parallel loop
    std::vector<std::vector<ReportRow>> blocks(f.js.size());
    std::vector<std::string> errors(f.js.size());
#pragma omp parallel for schedule(dynamic)
    for (long long ji = 0; ji < (long long)f.js.size(); ++ji) {
        try {
            const Curve& c = f.curves[ji];
            Curve c_rev = reverse(c);
            std::vector<ReportRow>& out = blocks[ji];
            for (const std::string& m : f.metrics) {
                if (needs_viewpoint(m)) {
                    for (std::size_t xi = 0; xi < f.psi.size(); ++xi) {
                        const ComplexPoint& x = f.psi[xi];
                        MetricReport r;
                        if (m == "d_cap_r" || m == "d_cap_fwd")
                            r = driving_distance(driving_from(c, x), wt_fwd[xi]);
                        else if (m == "d_cap_l")
                            r = driving_distance(driving_from(c_rev, x), wt_bwd[xi]);
                        else if (m == "d_cap_fwd_alt")
                            r = driving_distance(
                                driving_from(gen_figure_eight(f.js[ji], FigureEightVariant::B), x),
                                wt_fwd[xi]);
                        else  // d_cap_bwd
                            r = driving_distance(driving_from(c_rev, x), w_fig8_bwd);
                        out.push_back({f.js[ji], x, m, r.value,
                                       {{"dT", r.dT}, {"sup", r.sup}}});
                    }
                } else {
                    double v;
                    if (m == "d_f")
                        v = d_locally_uniform(c, f.target, Direction::Forward);
                    else if (m == "d_b")
                        v = d_locally_uniform(c, f.target, Direction::Backward);
                    else if (m == "d_strong")
                        v = uniform_distance(c, f.target);
                    else if (m == "hausdorff")
                        v = hausdorff_distance(c, f.target);
                    else
                        throw std::invalid_argument("convergence suite: unknown metric " + m);
                    out.push_back({f.js[ji], ComplexPoint::infinity(), m, v, {}});
                }
            }
        } catch (const std::exception& e) {
            errors[ji] = e.what();
        }
    }
    for (const std::string& e : errors)
        if (!e.empty()) throw std::runtime_error("convergence suite: " + e);
    for (auto& b : blocks)
        for (auto& row : b) rep.rows.push_back(std::move(row));
    add_verdicts(rep, f.metrics, f.psi);
    return rep;
}

Report run_roundtrip_suite(const ExperimentConfig& cfg) {
    Report rep;
    rep.meta["suite"] = "roundtrip";
    rep.meta["seed"] = std::to_string(cfg.seed);
    rep.meta["config"] = config_to_json(cfg);

    std::vector<std::pair<std::string, DrivingFunction>> drivings;
    DrivingFunction zero;
    zero.kind = Kind::Chordal;
    zero.times = {0.0, 1.0};
    zero.values = {0.0, 0.0};
    drivings.emplace_back("zero", zero);
    DrivingFunction smooth;
    smooth.kind = Kind::Chordal;
    for (int i = 0; i <= 200; ++i) {
        double t = i / 200.0;
        smooth.times.push_back(t);
        smooth.values.push_back(0.8 * std::sin(3.0 * t));
    }
    drivings.emplace_back("smooth", smooth);
    SleConfig sc;
    sc.kappa = 8.0 / 3.0;
    sc.seed = cfg.seed;
    drivings.emplace_back("sle", sample_chordal_driving(sc));

    const std::size_t ns[] = {250, 500, 1000, 2000};
    for (const auto& [name, w] : drivings) {
        std::vector<double> drive_err, trace_err;
        for (std::size_t n : ns) {
            Curve tr = solve_chordal_trace(w, n);
            UnzipResult u = unzip_chordal(tr);
            double e1 = driving_distance(u.driving, w).sup;
            drive_err.push_back(e1);
            Curve tr2 = solve_chordal_trace(u.driving, n);
            double e2 = uniform_distance(tr, tr2);
            trace_err.push_back(e2);
            rep.rows.push_back({n, ComplexPoint::infinity(), "rt_drive_" + name, e1, {}});
            rep.rows.push_back({n, ComplexPoint::infinity(), "rt_trace_" + name, e2, {}});
        }
        // least-squares slope of log err against log n
        auto slope = [&](const std::vector<double>& err) {
            if (*std::max_element(err.begin(), err.end()) <= 1e-12)
                return 0.0;  // round-trip exact to machine precision
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            std::size_t m = err.size();
            for (std::size_t i = 0; i < m; ++i) {
                double lx = std::log(double(ns[i]));
                double ly = std::log(std::max(err[i], 1e-300));
                sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
            }
            return (double(m) * sxy - sx * sy) / (double(m) * sxx - sx * sx);
        };
        rep.meta["exponent_rt_drive_" + name] = num(slope(drive_err));
        rep.meta["exponent_rt_trace_" + name] = num(slope(trace_err));
    }
    return rep;
}

Report run_law_convergence(const ExperimentConfig& cfg) {
    if (cfg.samples < 50)
        throw std::invalid_argument("law convergence: fewer than 50 samples is underpowered");
    Report rep;
    rep.meta["suite"] = "law";
    rep.meta["pair"] = cfg.law_pair;
    rep.meta["seed"] = std::to_string(cfg.seed);
    rep.meta["config"] = config_to_json(cfg);

    std::vector<double> times = cfg.law_times.empty()
                                    ? std::vector<double>{0.06, 0.12}
                                    : cfg.law_times;
    const ComplexPoint x = cfg.law_x;
    const std::size_t m = cfg.samples, nt = times.size();

    MobiusTransform frame = observation_frame(x, Domain::HalfPlane);
    ComplexPoint i0 = frame.apply(ComplexPoint(0.0, 0.0));
    ComplexPoint iinf = frame.apply(ComplexPoint::infinity());
    double theta0 = std::atan2(i0.im, i0.re);
    double thetaInf = std::atan2(iinf.im, iinf.re);

    std::vector<std::vector<double>> a(nt, std::vector<double>(m, 0.0));
    std::vector<std::vector<double>> b(nt, std::vector<double>(m, 0.0));
    std::vector<std::string> errors(m);

#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)m; ++i) {
        try {
            SleConfig sc;
            sc.kappa = cfg.kappa;
            sc.seed = cfg.seed;
            sc.stream = std::uint64_t(i);
            Curve tr = sample_sle_trace(sc, cfg.trace_steps);
            DrivingFunction wa = driving_from(tr, x);
            DrivingFunction wb;
            if (cfg.law_pair == "viewpoint") {
                SleConfig rc = sc;
                rc.rho = cfg.kappa - 6.0;
                rc.w0 = theta0;
                rc.v0 = thetaInf;
                rc.T = times.back() * 1.05;
                rc.stream = std::uint64_t(i) + m;
                wb = sample_radial_sle_kr(rc).driving;
            } else if (cfg.law_pair == "reversal") {
                wb = driving_from(reverse(tr), x);
            } else if (cfg.law_pair == "self") {
                SleConfig sc2 = sc;
                sc2.stream = std::uint64_t(i) + m;
                wb = driving_from(sample_sle_trace(sc2, cfg.trace_steps), x);
            } else {
                throw std::invalid_argument("law convergence: unknown pair " + cfg.law_pair);
            }
            for (std::size_t ti = 0; ti < nt; ++ti) {
                a[ti][i] = wa.at(times[ti]) - wa.values.front();
                b[ti][i] = wb.at(times[ti]) - wb.values.front();
            }
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const std::string& e : errors)
        if (!e.empty()) throw std::runtime_error("law convergence: " + e);

    for (std::size_t ti = 0; ti < nt; ++ti) {
        KsResult ks = ks_two_sample(a[ti], b[ti]);
        rep.rows.push_back({ti + 1, x, "ks_" + cfg.law_pair, ks.statistic,
                            {{"p_value", ks.p_value},
                             {"t", times[ti]},
                             {"samples", double(m)}}});
    }
    return rep;
}

std::vector<std::string> verdict_mismatches(const ExperimentConfig& cfg,
                                            const Report& r) {
    std::vector<std::string> out;
    if (cfg.suite != "convergence") return out;
    auto verdict_of = [&](const std::string& series) -> const SeriesVerdict* {
        for (const auto& v : r.verdicts)
            if (v.series == series) return &v;
        return nullptr;
    };
    auto expect = [&](const std::string& metric_prefix, const std::string& want) {
        for (const auto& v : r.verdicts) {
            std::size_t at = v.series.find('@');
            std::string metric = v.series.substr(0, at);
            if (metric != metric_prefix) continue;
            if (v.verdict != want)
                out.push_back(v.series + ": expected " + want + ", got " + v.verdict);
        }
    };
    if (cfg.family == "smooth") {
        expect("d_cap_r", "CONVERGING");
        expect("d_cap_l", "CONVERGING");
        expect("d_strong", "CONVERGING");
        expect("hausdorff", "CONVERGING");
    } else if (cfg.family == "ladder") {
        expect("d_cap_r", "CONVERGING");
        expect("d_strong", "STALLED");
    } else if (cfg.family == "three_segment") {
        expect("d_f", "CONVERGING");
        expect("d_b", "CONVERGING");
        expect("d_strong", "STALLED");
    } else if (cfg.family == "hooks") {
        expect("d_cap_r", "CONVERGING");
        expect("d_cap_l", "CONVERGING");
        expect("d_strong", "STALLED");
    } else if (cfg.family == "figure_eight") {
        expect("d_cap_bwd", "CONVERGING");
        auto it = r.meta.find("fig8_target_disagreement");
        if (it == r.meta.end())
            out.push_back("fig8_target_disagreement missing from report metadata");
        else if (!(std::strtod(it->second.c_str(), nullptr) >= 0.1))
            out.push_back("fig8_target_disagreement " + it->second + " below 0.1");
        (void)verdict_of;
    }
    return out;
}

}  // namespace loewner
