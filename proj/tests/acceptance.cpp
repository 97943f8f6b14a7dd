// Acceptance gate: one line per criterion, PASS or FAIL, with the
// measured quantity next to its tolerance.  Exit code is the number of
// failed criteria.

#include "loewner/analysis.hpp"
#include "loewner/curve.hpp"
#include "loewner/curve_metrics.hpp"
#include "loewner/families.hpp"
#include "loewner/loewner.hpp"
#include "loewner/metrics.hpp"
#include "loewner/report.hpp"
#include "loewner/sle.hpp"
#include "loewner/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using namespace loewner;

namespace {

int failures = 0;

void line(int idx, const char* what, bool ok, const std::string& detail) {
    std::printf("%s  %2d  %-28s %s\n", ok ? "PASS" : "FAIL", idx, what, detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

Curve vertical_slit(double h, std::size_t n) {
    std::vector<ComplexPoint> pts;
    for (std::size_t k = 0; k < n; ++k)
        pts.emplace_back(0.0, h * double(k) / double(n - 1));
    return Curve::from_points(std::move(pts));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1: zero-driving round trip against the closed form.
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t n = 1000;
    DrivingFunction w;
    w.kind = Kind::Chordal;
    for (std::size_t k = 0; k <= n; ++k) {
        w.times.push_back(double(k) / double(n));
        w.values.push_back(0.0);
    }
    Curve tr = solve_chordal_trace(w, n);
    double e_closed = 0.0;
    for (std::size_t k = 0; k < tr.size(); ++k) {
        double t = tr.params[k];
        e_closed = std::max(e_closed, cdist(tr.points[k], ComplexPoint(0, 2 * std::sqrt(t))));
    }
    UnzipResult u = unzip_chordal(tr);
    double e_drive = driving_distance(u.driving, w).sup;
    double el = seconds_since(t0);
    bool ok = e_closed <= 1e-3 && e_drive <= 5e-2 && el < 10.0;
    line(1, "zero-driving round trip", ok,
         fmt("trace err %.2e (<=1e-3), drive err %.2e (<=5e-2)", e_closed, e_drive));
}

// 2: capacity identities and the chordal scaling law.
void criterion_2() {
    bool ok = true;
    double worst = 0.0;
    for (double h : {0.5, 1.0, 2.0}) {
        double T = unzip_chordal(vertical_slit(h, 600)).driving.horizon();
        double err = std::abs(T - h * h / 4.0);
        worst = std::max(worst, err / (h * h));
        ok = ok && err <= 1e-3 * h * h;
    }
    Curve base = vertical_slit(1.0, 400);
    double T1 = unzip_chordal(base).driving.horizon();
    double worst_scale = 0.0;
    for (double lam : {0.5, 2.0}) {
        std::vector<ComplexPoint> pts;
        for (const auto& p : base.points) pts.emplace_back(lam * p.re, lam * p.im);
        double T2 = unzip_chordal(Curve::from_points(std::move(pts))).driving.horizon();
        worst_scale = std::max(worst_scale, std::abs(T2 - lam * lam * T1));
        ok = ok && std::abs(T2 - lam * lam * T1) <= 1e-6;
    }
    line(2, "capacity identities", ok,
         fmt("slit err %.2e (<=1e-3 rel), scaling err %.2e (<=1e-6)", worst, worst_scale));
}

// 3: tilted-slit driving constant.
void criterion_3() {
    const double alpha = 1.0 / 3.0;
    const double c_exact = 2.0 * (1 - 2 * alpha) / std::sqrt(alpha * (1 - alpha));
    std::size_t n = 2000;
    std::vector<ComplexPoint> pts;
    Complex dir = std::polar(1.0, M_PI / 3.0);
    for (std::size_t k = 0; k < n; ++k) pts.emplace_back(double(k) / double(n - 1) * dir);
    UnzipResult u = unzip_chordal(Curve::from_points(std::move(pts)));
    double worst = 0.0;
    for (std::size_t k = 0; k < u.driving.times.size(); ++k) {
        double t = u.driving.times[k];
        if (t < 0.05 * u.driving.horizon()) continue;
        worst = std::max(worst, std::abs(u.driving.values[k] / std::sqrt(t) - c_exact));
    }
    bool ok = worst <= 0.02 * std::abs(c_exact);
    line(3, "tilted-slit driving", ok,
         fmt("max dev %.4f of |c|=%.4f (<=2%%)", worst, std::abs(c_exact)));
}

// 4: sampler variance and determinism.
void criterion_4() {
    bool ok = true;
    std::string detail;
    for (double kappa : {2.0, 4.0, 6.0}) {
        SleConfig cfg;
        cfg.kappa = kappa;
        cfg.T = 1.0;
        cfg.dt = 1e-2;
        double s1 = 0.0, s2 = 0.0;
        std::size_t m = 10000;
        for (std::size_t i = 0; i < m; ++i) {
            cfg.stream = i;
            double wt = sample_chordal_driving(cfg).values.back();
            s1 += wt;
            s2 += wt * wt;
        }
        double var = s2 / m - (s1 / m) * (s1 / m);
        ok = ok && std::abs(var - kappa) <= 0.05 * kappa;
        char buf[48];
        std::snprintf(buf, sizeof buf, "k=%g var %.3f ", kappa, var);
        detail += buf;
    }
    SleConfig cfg;
    cfg.kappa = 3.0;
    cfg.seed = 9;
    cfg.dt = 1e-3;
    DrivingFunction a = sample_chordal_driving(cfg);
    DrivingFunction b = sample_chordal_driving(cfg);
    bool bitwise = a.values == b.values && a.times == b.times;
    ok = ok && bitwise;
    line(4, "sle sampler statistics", ok,
         detail + (bitwise ? "(seed bitwise)" : "(seed NOT bitwise)"));
}

// 5: conformal vs Monte Carlo harmonic measure on five curves.
void criterion_5() {
    std::vector<std::pair<Curve, ComplexPoint>> cases;
    cases.emplace_back(vertical_slit(1.0, 300), ComplexPoint(0.8, 1.2));
    cases.emplace_back(vertical_slit(0.6, 200), ComplexPoint(-0.5, 0.8));
    cases.emplace_back(resample(gen_smooth_family(2), 400), ComplexPoint(0.0, 1.6));
    cases.emplace_back(gen_ladder(3), ComplexPoint(1.0, 1.0));
    {
        std::vector<ComplexPoint> pts{ComplexPoint(0, 0), ComplexPoint(0.4, 0.8),
                                      ComplexPoint(-0.3, 1.2)};
        cases.emplace_back(resample(Curve::from_points(std::move(pts)), 300),
                           ComplexPoint(1.2, 0.9));
    }
    bool ok = true;
    double worst = 0.0, worst_part = 0.0;
    std::uint64_t seed = 1;
    for (const auto& [c, x] : cases) {
        double T = unzip_radial_at(c, x).driving.horizon();
        double conf = hitting_prob_conformal(c, x, 0.0, T);
        double mc = hitting_prob_mc(c, x, 0.0, T, 100000, 0.01, seed++);
        worst = std::max(worst, std::abs(conf - mc));
        // Partition of unity over thirds of the capacity range.
        double parts = hitting_prob_conformal(c, x, 0.0, T / 3.0) +
                       hitting_prob_conformal(c, x, T / 3.0, 2.0 * T / 3.0) +
                       hitting_prob_conformal(c, x, 2.0 * T / 3.0, T);
        worst_part = std::max(worst_part, std::abs(parts - conf));
    }
    ok = worst <= 0.02 && worst_part <= 1e-3;
    line(5, "harmonic measure", ok,
         fmt("max |conf-mc| %.4f (<=0.02), partition err %.2e (<=1e-3)", worst,
             worst_part));
}

// 6: counterexample family verdicts.
void criterion_6() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> problems;
    double fig8_gap = 0.0;
    for (const char* fam : {"ladder", "three_segment", "hooks", "figure_eight"}) {
        ExperimentConfig cfg;
        cfg.family = fam;
        Report r = run_convergence_suite(cfg);
        for (const auto& msg : verdict_mismatches(cfg, r))
            problems.push_back(std::string(fam) + ": " + msg);
        if (r.meta.count("fig8_target_disagreement"))
            fig8_gap = std::stod(r.meta.at("fig8_target_disagreement"));
    }
    double el = seconds_since(t0);
    bool ok = problems.empty() && fig8_gap >= 0.1 && el < 600.0;
    std::string detail = fmt("fig8 fwd/bwd gap %.3f (>=0.1), %.0fs (<600)", fig8_gap, el);
    for (const auto& p : problems) detail += "; " + p;
    line(6, "family verdicts", ok, detail);
}

// 7: the smooth family converges in every metric.
void criterion_7() {
    ExperimentConfig cfg;
    cfg.family = "smooth";
    Report r = run_convergence_suite(cfg);
    bool ok = true;
    double ratio = 1.0;
    for (const auto& v : r.verdicts) {
        ok = ok && v.verdict == "CONVERGING";
        if (v.series.rfind("d_strong", 0) == 0 && !v.values.empty())
            ratio = v.values.back() / v.values.front();
    }
    ok = ok && ratio < 0.1;
    line(7, "smooth family convergence", ok,
         fmt("all series converging, d_strong ratio %.4f (<0.1) [%g series]", ratio,
             double(r.verdicts.size())));
}

// 8: driving law viewed from an interior point.
void criterion_8() {
    ExperimentConfig cfg;
    cfg.suite = "law";
    cfg.law_pair = "viewpoint";
    cfg.kappa = 2.0;
    cfg.samples = 400;
    Report r = run_law_convergence(cfg);
    bool ok = !r.rows.empty();
    double worst = 0.0;
    for (const auto& row : r.rows) worst = std::max(worst, row.value);
    ok = ok && worst <= 0.1;
    line(8, "viewed-from-x law", ok, fmt("max KS %.4f (<=0.1) over %g cells", worst,
                                         double(r.rows.size())));
}

// 9: reversibility of the driving law at kappa = 2.
void criterion_9() {
    ExperimentConfig cfg;
    cfg.suite = "law";
    cfg.law_pair = "reversal";
    cfg.kappa = 2.0;
    cfg.samples = 400;
    Report r = run_law_convergence(cfg);
    bool ok = !r.rows.empty();
    double worst = 0.0;
    for (const auto& row : r.rows) worst = std::max(worst, row.value);
    ok = ok && worst <= 0.12;
    line(9, "reversibility law", ok, fmt("max KS %.4f (<=0.12) over %g cells", worst,
                                         double(r.rows.size())));
}

// 10: time-separation diagnostics.
void criterion_10() {
    Curve simple = vertical_slit(1.0, 200);
    double d_simple = time_separation_diag(simple, 0.12, 0.002);

    // Retracing curve: up [0, i], back down to i/2, then away.
    std::vector<ComplexPoint> pts;
    for (int k = 0; k <= 100; ++k) pts.emplace_back(0.0, k / 100.0);
    for (int k = 99; k >= 50; --k) pts.emplace_back(1e-4, k / 100.0);
    for (int k = 1; k <= 40; ++k) pts.emplace_back(0.3 * k / 40.0, 0.5 - 0.35 * k / 40.0);
    Curve retrace = Curve::from_points(std::move(pts));
    double eps = 0.02;
    double d_re = time_separation_diag(retrace, 0.2501, eps);
    double leg = cdist(ComplexPoint(0, 0.5), ComplexPoint(0, 1.0));

    SleConfig cfg;
    cfg.kappa = 6.0;
    cfg.T = 1.0;
    cfg.dt = 1e-3;
    int pass = 0;
    for (std::uint64_t s = 0; s < 10; ++s) {
        cfg.seed = s;
        Curve tr = sample_sle_trace(cfg, 400);
        if (time_separation_diag(tr, 0.5, 0.02) <= 0.1) ++pass;
    }
    bool ok = d_simple <= 0.05 && d_re >= leg - 4 * eps && pass >= 8;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "simple %.4f (<=0.05), retrace %.3f (>=%.3f), sle %d/10 (>=8)",
                  d_simple, d_re, leg - 4 * eps, pass);
    line(10, "time separation", ok, buf);
}

}  // namespace

int main() {
    std::setbuf(stdout, nullptr);
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%s (%d/10)\n", failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED",
                10 - failures);
    return failures;
}
