#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loewner/curve.hpp"
#include "loewner/families.hpp"
#include "loewner/metrics.hpp"

#include <cmath>

using namespace loewner;

namespace {

Curve polyline(std::initializer_list<Complex> zs, std::size_t densify_n = 0) {
    std::vector<ComplexPoint> pts;
    for (Complex z : zs) pts.emplace_back(z);
    Curve c = Curve::from_points(std::move(pts));
    return densify_n ? resample(c, densify_n) : c;
}

// Densify each edge separately so every listed vertex is kept exactly
// (resample cuts corners, which matters when a shared prefix or a
// boundary touch point must survive verbatim).
Curve edge_dense(std::initializer_list<Complex> zs, double h) {
    std::vector<ComplexPoint> pts;
    bool first = true;
    Complex prev;
    for (Complex z : zs) {
        if (first) {
            pts.emplace_back(z);
            first = false;
        } else {
            std::size_t m =
                std::max<std::size_t>(1, std::size_t(std::ceil(std::abs(z - prev) / h)));
            for (std::size_t k = 1; k <= m; ++k)
                pts.emplace_back(prev + (double(k) / double(m)) * (z - prev));
        }
        prev = z;
    }
    return Curve::from_points(std::move(pts));
}

}  // namespace

TEST_CASE("d_cap_r identity and symmetry") {
    Curve c = polyline({Complex(0, 0), Complex(0.2, 0.8), Complex(-0.1, 1.4)}, 120);
    ComplexPoint x(1.0, 1.0);
    MetricReport self = d_cap_r(c, c, x);
    CHECK(self.value <= 1e-9);
    CHECK(self.value == doctest::Approx(self.dT + self.sup));

    Curve c2 = polyline({Complex(0, 0), Complex(-0.3, 0.9)}, 100);
    MetricReport ab = d_cap_r(c, c2, x);
    MetricReport ba = d_cap_r(c2, c, x);
    CHECK(ab.value == doctest::Approx(ba.value).epsilon(1e-9));
    CHECK(ab.value > 0.01);
}

TEST_CASE("curves agreeing until x is swallowed are x-equivalent") {
    // Both curves seal off a box around x by returning to the real
    // line, then diverge; viewed from x the tails are invisible, so the
    // metric vanishes.
    auto box = [](Complex tail) {
        return edge_dense({Complex(-0.5, 0), Complex(-0.5, 1), Complex(0.5, 1),
                           Complex(0.5, 0), tail},
                          0.01);
    };
    ComplexPoint x(0.0, 0.5);  // inside the box
    Curve a = box(Complex(0.6, 0.5));
    Curve b = box(Complex(1.2, 0.3));
    MetricReport r = d_cap_r(a, b, x);
    CHECK(r.value <= 5e-2);
    // The same two curves seen from outside the box differ.
    CHECK(d_cap_r(a, b, ComplexPoint(2.0, 2.0)).value > 1e-2);
}

TEST_CASE("d_cap_l on reversed curves") {
    Curve c = polyline({Complex(-1, 0), Complex(0, 1), Complex(1, 0)}, 150);
    ComplexPoint x(0.3, 0.4);
    CHECK(d_cap_l(reverse(c), reverse(c), x).value <= 1e-9);
    // For a pair of simple curves the left metric of the reversals is
    // the right metric applied to them.
    Curve c2 = polyline({Complex(-1, 0), Complex(-0.2, 1.2), Complex(1, 0)}, 150);
    MetricReport l = d_cap_l(reverse(c), reverse(c2), x);
    MetricReport r = d_cap_r(reverse(c), reverse(c2), x);
    CHECK(l.value == doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("d_cap_r triangle inequality") {
    ComplexPoint x(0.8, 0.9);
    Curve a = polyline({Complex(0, 0), Complex(0.1, 1.0)}, 80);
    Curve b = polyline({Complex(0, 0), Complex(-0.3, 0.8), Complex(0.1, 1.3)}, 80);
    Curve c = polyline({Complex(0, 0), Complex(0.4, 0.5), Complex(-0.2, 1.1)}, 80);
    double ab = d_cap_r(a, b, x).value;
    double bc = d_cap_r(b, c, x).value;
    double ac = d_cap_r(a, c, x).value;
    CHECK(ac <= ab + bc + 1e-9);
}

TEST_CASE("boundary viewpoint uses the chordal driving") {
    // Viewed from infinity the driving of a vertical slit is zero, so
    // two vertical slits differ only in capacity.
    Curve s1 = polyline({Complex(0, 0), Complex(0, 1)}, 200);
    Curve s2 = polyline({Complex(0, 0), Complex(0, 2)}, 200);
    MetricReport r = d_cap_r(s1, s2, ComplexPoint::infinity());
    CHECK(r.sup <= 1e-6);
    CHECK(r.dT == doctest::Approx(4.0 / 4.0 - 1.0 / 4.0).epsilon(0.01));
}

TEST_CASE("ladder series decreases viewed from an interior point") {
    // Against a fixed fine target, the driving seen from x settles as
    // the rungs shrink.
    ComplexPoint x(0.8, 0.8);
    Curve target = gen_ladder_target(6);
    std::vector<double> vals;
    for (std::size_t j : {3, 4, 5, 6})
        vals.push_back(d_cap_r(gen_ladder(j), target, x).value);
    for (std::size_t k = 1; k < vals.size(); ++k) CHECK(vals[k] < vals[k - 1]);
}

TEST_CASE("d_locally_uniform") {
    // The metric transports each curve by its own terminal point, so
    // curves must end on the real line (or at infinity).
    Curve c = edge_dense(
        {Complex(-1, 0), Complex(-0.2, 1.2), Complex(0.3, 0.8), Complex(1, 0)}, 0.01);
    CHECK(d_locally_uniform(c, c, Direction::Forward) <= 1e-9);
    Curve open_end = polyline({Complex(0, 0), Complex(0.2, 1.2)}, 50);
    CHECK_THROWS(d_locally_uniform(open_end, open_end, Direction::Forward));

    // Distinct curves with a common terminal point separate, and the
    // geometric weights keep the total below 1.
    Curve base = edge_dense({Complex(0, 0), Complex(0, 1.8), Complex(0.9, 0)}, 0.01);
    Curve det = edge_dense(
        {Complex(0, 0), Complex(0, 1.8), Complex(0.2, 1.0), Complex(0.9, 0)}, 0.01);
    double d = d_locally_uniform(base, det, Direction::Forward);
    CHECK(d > 0.0);
    CHECK(d < 1.0);
    CHECK(d_locally_uniform(base, det, Direction::Backward) > 0.0);

    // Horizon units beyond N are dropped, and each clipped term n
    // contributes at most 2^-n: growing N from 2 to 8 adds at most the
    // tail weight 2^-2 and never decreases the value.
    double d2 = d_locally_uniform(base, det, Direction::Forward, 0.25, 2);
    double d8 = d_locally_uniform(base, det, Direction::Forward, 0.25, 8);
    CHECK(d2 <= d8 + 1e-12);
    CHECK(d8 <= d2 + std::pow(2.0, -2.0));

    // Fallback warning when the shared capacity is below one horizon
    // unit (here: an oversized tau).
    bool warn = false;
    d_locally_uniform(base, det, Direction::Forward, 100.0, 8, &warn);
    CHECK(warn);
}

TEST_CASE("driving distance extends by terminal values") {
    DrivingFunction a, b;
    a.kind = b.kind = Kind::Chordal;
    for (int k = 0; k <= 10; ++k) {
        a.times.push_back(0.1 * k);
        a.values.push_back(0.0);
    }
    for (int k = 0; k <= 5; ++k) {
        b.times.push_back(0.1 * k);
        b.values.push_back(0.2);
    }
    MetricReport r = driving_distance(a, b);
    CHECK(r.dT == doctest::Approx(0.5));
    CHECK(r.sup == doctest::Approx(0.2));
    CHECK(r.value == doctest::Approx(0.7));
}

TEST_CASE("refinement stability on a smooth curve") {
    ComplexPoint x(0.5, 1.0);
    Curve coarse = resample(gen_smooth_family(3), 300);
    Curve fine = resample(gen_smooth_family(3), 600);
    Curve target = resample(gen_smooth_target(), 300);
    double v1 = d_cap_r(coarse, target, x).value;
    double v2 = d_cap_r(fine, target, x).value;
    CHECK(std::abs(v1 - v2) <= 0.05 * std::max(v1, v2) + 1e-3);
}
