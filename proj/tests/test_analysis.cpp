#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loewner/analysis.hpp"
#include "loewner/curve.hpp"
#include "loewner/metrics.hpp"
#include "loewner/sle.hpp"

#include <cmath>
#include <random>

using namespace loewner;

namespace {

Curve vertical_slit(double h, std::size_t n = 200) {
    std::vector<ComplexPoint> pts;
    for (std::size_t k = 0; k < n; ++k)
        pts.emplace_back(0.0, h * double(k) / double(n - 1));
    return Curve::from_points(std::move(pts));
}

}  // namespace

TEST_CASE("conformal hitting probabilities partition") {
    Curve c = vertical_slit(1.0);
    ComplexPoint x(0.8, 1.2);
    UnzipResult u = unzip_radial_at(c, x);
    double T = u.driving.horizon();
    double whole = hitting_prob_conformal(c, x, 0.0, T);
    double a = hitting_prob_conformal(c, x, 0.0, 0.3 * T);
    double b = hitting_prob_conformal(c, x, 0.3 * T, 0.7 * T);
    double d = hitting_prob_conformal(c, x, 0.7 * T, T);
    CHECK(a + b + d == doctest::Approx(whole).epsilon(1e-9));
    CHECK(whole > 0.0);
    CHECK(whole < 1.0);
}

TEST_CASE("monte carlo agrees with the conformal value") {
    Curve c = vertical_slit(1.0);
    ComplexPoint x(0.8, 1.2);
    double T = unzip_radial_at(c, x).driving.horizon();
    double conf = hitting_prob_conformal(c, x, 0.0, T);
    double mc = hitting_prob_mc(c, x, 0.0, T, 100000, 0.01, 1);
    CHECK(std::abs(conf - mc) <= 0.02);
    // Curve plus real line exhausts the harmonic measure; the real
    // line carries the capacity-time tag -1.
    double real_part = hitting_prob_mc(c, x, -2.0, -0.5, 40000, 0.01, 2);
    double curve_part = hitting_prob_mc(c, x, 0.0, T, 40000, 0.01, 2);
    CHECK(real_part + curve_part == doctest::Approx(1.0).epsilon(1e-6));

    // No curve at all: everything lands on the real line.
    Curve off = vertical_slit(1.0);
    std::vector<ComplexPoint> farpts;
    for (const auto& p : off.points) farpts.emplace_back(p.re + 100.0, p.im);
    Curve far = Curve::from_points(std::move(farpts));
    CHECK(hitting_prob_mc(far, ComplexPoint(0, 1), -2.0, -0.5, 20000, 0.01, 3) >
          0.99);

    // Serial path gives the identical estimate.
    CHECK(hitting_prob_mc(c, x, 0.0, T, 5000, 0.01, 4, true) ==
          hitting_prob_mc(c, x, 0.0, T, 5000, 0.01, 4, false));
}

TEST_CASE("alpha_left symmetry") {
    // Vertical slit seen from a point on its axis: left and right are
    // mirror images, so alpha = 1/2 of the curve's harmonic measure
    // share seen from x at the tip time.
    Curve c = vertical_slit(1.0, 300);
    ComplexPoint x(0.0, 2.0);
    double T = unzip_radial_at(c, x).driving.horizon();
    double al = alpha_left(c, x, x, ComplexPoint(-5.0, 0.0));
    double pfull = hitting_prob_conformal(c, x, 0.0, T);
    // Mirror symmetry: the left side of the slit carries exactly half
    // of the slit's harmonic measure.
    CHECK(al == doctest::Approx(0.5 * pfull).epsilon(0.02));
}

TEST_CASE("caratheodory discrepancy") {
    DrivingFunction w0, wd;
    w0.kind = wd.kind = Kind::Chordal;
    auto fill = [](DrivingFunction& w, double v) {
        for (int k = 0; k <= 40; ++k) {
            w.times.push_back(0.01 * k);
            w.values.push_back(v);
        }
    };
    fill(w0, 0.0);
    CHECK(caratheodory_sup(w0, w0, {}, 0.4, 0.05, 12) == doctest::Approx(0.0));

    double prev = 0.0;
    for (double delta : {0.025, 0.05, 0.1}) {
        DrivingFunction w;
        w.kind = Kind::Chordal;
        fill(w, delta);
        double s = caratheodory_sup(w0, w, {}, 0.4, 0.05, 12);
        CHECK(s > prev);
        prev = s;
    }

    // Empty grid refuses.
    CHECK_THROWS(caratheodory_sup(w0, w0, {}, 0.4, 50.0, 4));
}

TEST_CASE("time separation diagnostic") {
    // Simple curve: zero at resolutions below its self distance.
    Curve simple = vertical_slit(1.0, 150);
    CHECK(time_separation_diag(simple, 0.12, 0.002) <= 0.05);

    // A retracing curve: out along a unit segment, back, then away.
    std::vector<ComplexPoint> pts;
    for (int k = 0; k <= 100; ++k) pts.emplace_back(0.0, 0.5 + 0.5 * k / 100.0);
    for (int k = 99; k >= 0; --k) pts.emplace_back(1e-4, 0.5 + 0.5 * k / 100.0);
    for (int k = 1; k <= 60; ++k) pts.emplace_back(0.3 * k / 60.0, 0.5 - 0.4 * k / 60.0);
    std::vector<ComplexPoint> head;
    for (int k = 0; k < 50; ++k) head.emplace_back(0.0, 0.5 * k / 50.0);
    head.insert(head.end(), pts.begin(), pts.end());
    Curve retrace = Curve::from_points(std::move(head));
    // Split just past the tip (the straight run [0, i] has capacity
    // 1/4): the return leg then retraces the whole upper half.
    double eps = 0.02;
    double sep = time_separation_diag(retrace, 0.2501, eps);
    double leg = cdist(ComplexPoint(0, 0.5), ComplexPoint(0, 1.0));
    CHECK(sep >= leg - 4.0 * eps);
}

TEST_CASE("sle kappa six passes the separation threshold") {
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
    CHECK(pass >= 8);
}

TEST_CASE("harmonic parametrization") {
    Curve c = vertical_slit(1.0, 200);
    std::vector<std::pair<ComplexPoint, double>> xs{
        {ComplexPoint(0.7, 1.0), 0.5}, {ComplexPoint(-0.7, 1.0), 0.5}};
    CHECK(harmonic_param_s(c, xs, 0.0) == doctest::Approx(0.0));
    CHECK(harmonic_param_s(c, xs, 1.0) == doctest::Approx(1.0));
    double prev = -1.0;
    for (int k = 0; k <= 10; ++k) {
        double s = harmonic_param_s(c, xs, 0.1 * k);
        CHECK(s >= prev - 1e-12);
        prev = s;
    }
    // Mirror-symmetric viewpoints contribute equally on the symmetric
    // slit: the weighted sum equals either alone.
    double both = harmonic_param_s(c, xs, 0.5);
    double left = harmonic_param_s(c, {{ComplexPoint(-0.7, 1.0), 1.0}}, 0.5);
    CHECK(std::abs(both - left) <= 1e-6);
}

TEST_CASE("kolmogorov smirnov two sample") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> n01(0.0, 1.0);
    std::vector<double> a, b, shifted;
    for (int k = 0; k < 800; ++k) {
        a.push_back(n01(rng));
        b.push_back(n01(rng));
        shifted.push_back(n01(rng) + 1.0);
    }
    KsResult same = ks_two_sample(a, b);
    CHECK(same.statistic < 0.08);
    CHECK(same.p_value > 0.01);
    KsResult diff = ks_two_sample(a, shifted);
    CHECK(diff.statistic > 0.3);
    CHECK(diff.p_value < 1e-6);
}
