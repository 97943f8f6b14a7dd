#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loewner/geometry.hpp"

#include <cmath>
#include <random>

using namespace loewner;

namespace {

ComplexPoint pt(double re, double im) { return ComplexPoint(re, im); }

bool close(const ComplexPoint& a, const ComplexPoint& b, double tol = 1e-10) {
    return cdist(a, b) <= tol;
}

}  // namespace

TEST_CASE("cdist basics") {
    CHECK(cdist(pt(0, 0), pt(0, 0)) == doctest::Approx(0.0));
    CHECK(cdist(pt(0, 1), ComplexPoint::infinity()) > 0.0);
    // cdist(0, i) = 1 is the normalization used throughout.
    CHECK(cdist(pt(0, 0), pt(0, 1)) == doctest::Approx(1.0));
    // Symmetric.
    CHECK(cdist(pt(0.3, 0.7), pt(-1.2, 2.0)) ==
          doctest::Approx(cdist(pt(-1.2, 2.0), pt(0.3, 0.7))));
}

TEST_CASE("cdist triangle inequality on random triples") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int it = 0; it < 1000; ++it) {
        ComplexPoint a = it % 17 == 0 ? ComplexPoint::infinity() : pt(u(rng), std::abs(u(rng)));
        ComplexPoint b = pt(u(rng), std::abs(u(rng)));
        ComplexPoint c = pt(u(rng), std::abs(u(rng)));
        CHECK(cdist(a, c) <= cdist(a, b) + cdist(b, c) + 1e-12);
    }
}

TEST_CASE("cayley maps the real line onto the unit circle") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int it = 0; it < 200; ++it) {
        double x = u(rng);
        CHECK(std::abs(std::abs(cayley(pt(x, 0))) - 1.0) <= 1e-12);
    }
    CHECK(std::abs(cayley(ComplexPoint::infinity()) - Complex(1, 0)) <= 1e-12);
    // i is the center of the Cayley frame.
    CHECK(std::abs(cayley(pt(0, 1))) <= 1e-12);
    // Round trip.
    CHECK(close(cayley_inv(cayley(pt(0.4, 0.9))), pt(0.4, 0.9)));
    CHECK(cayley_inv(Complex(1, 0)).at_infinity);
}

TEST_CASE("mobius apply handles infinity projectively") {
    MobiusTransform id;
    CHECK(close(id.apply(pt(3, 4)), pt(3, 4)));
    // The Cayley transform as coefficients, at its center.
    MobiusTransform cay(Complex(1, 0), Complex(0, -1), Complex(1, 0), Complex(0, 1));
    CHECK(close(cay.apply(pt(0, 1)), pt(0, 0)));
    // Pole goes to infinity.
    MobiusTransform m(Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(-1, 0));
    CHECK(m.apply(pt(1, 0)).at_infinity);
    // z = infinity goes to a/c.
    CHECK(close(m.apply(ComplexPoint::infinity()), pt(1, 0)));
}

TEST_CASE("mobius compose and inverse") {
    MobiusTransform cay = cayley_map();
    MobiusTransform round = mobius_compose(cay.inverse(), cay);
    for (const ComplexPoint& z : {pt(0, 1), pt(2, 3), pt(-0.5, 0.1)})
        CHECK(close(round.apply(z), z));

    // Composition agrees with sequential application, including the
    // psi_1 after psi_{-1} pair at 0.
    MobiusTransform p1 = psi_boundary(pt(1, 0));
    MobiusTransform pm1 = psi_boundary(pt(-1, 0));
    MobiusTransform both = mobius_compose(p1, pm1);
    CHECK(close(both.apply(pt(0, 0)), p1.apply(pm1.apply(pt(0, 0)))));

    // Associativity on random triples, compared by evaluation.
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int it = 0; it < 50; ++it) {
        MobiusTransform a(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                          Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
        MobiusTransform b(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                          Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
        MobiusTransform c(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                          Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
        if (std::abs(a.det()) < 0.1 || std::abs(b.det()) < 0.1 || std::abs(c.det()) < 0.1)
            continue;
        MobiusTransform lhs = mobius_compose(mobius_compose(a, b), c);
        MobiusTransform rhs = mobius_compose(a, mobius_compose(b, c));
        for (const ComplexPoint& z : {pt(0.3, 0.4), pt(-1, 2)})
            CHECK(cdist(lhs.apply(z), rhs.apply(z)) <= 1e-10);
    }
}

TEST_CASE("psi_interior normalization") {
    // x = 2i gives z/2.
    MobiusTransform m = psi_interior(pt(0, 2));
    CHECK(close(m.apply(pt(2, 2)), pt(1, 1)));
    CHECK(close(m.apply(pt(0, 2)), pt(0, 1)));

    // x = 1+i maps to i with positive real derivative.
    MobiusTransform m2 = psi_interior(pt(1, 1));
    CHECK(close(m2.apply(pt(1, 1)), pt(0, 1)));
    Complex d = m2.deriv(Complex(1, 1));
    CHECK(std::abs(d.imag()) <= 1e-10);
    CHECK(d.real() > 0.0);

    // Random interior points land on i.
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int it = 0; it < 100; ++it) {
        ComplexPoint x = pt(u(rng), 0.1 + std::abs(u(rng)));
        CHECK(cdist(psi_interior(x).apply(x), pt(0, 1)) <= 1e-10);
    }
}

TEST_CASE("psi_boundary special points") {
    MobiusTransform p1 = psi_boundary(pt(1, 0));
    CHECK(close(p1.apply(pt(-1, 0)), pt(0, 0)));
    CHECK(p1.apply(pt(1, 0)).at_infinity);

    MobiusTransform pm1 = psi_boundary(pt(-1, 0));
    CHECK(close(pm1.apply(pt(1, 0)), pt(0, 0)));
    CHECK(pm1.apply(pt(-1, 0)).at_infinity);

    // For x strictly between -1 and 1 no automorphism can fix both
    // endpoints (the boundary triple (-1, x, 1) -> (-1, inf, 1) is
    // orientation-reversing), so the pair {-1, 1} is preserved as a
    // set by swapping.
    MobiusTransform p0 = psi_boundary(pt(0, 0));
    CHECK(close(p0.apply(pt(-1, 0)), pt(1, 0)));
    CHECK(close(p0.apply(pt(1, 0)), pt(-1, 0)));
    CHECK(p0.apply(pt(0, 0)).at_infinity);
}

TEST_CASE("psi_boundary preserves the half-plane") {
    // Every branch must be orientation-preserving: interior test points
    // stay in the open upper half-plane.
    for (double x : {1.0, -1.0, 0.0, 0.5, -0.3, 2.5, -4.0}) {
        MobiusTransform m = psi_boundary(pt(x, 0));
        for (const ComplexPoint& z : {pt(0.2, 0.7), pt(-2, 1.5), pt(3, 0.1)}) {
            ComplexPoint img = m.apply(z);
            CHECK(!img.at_infinity);
            CHECK(img.im > 0.0);
        }
        // x itself goes to infinity; outside [-1, 1] the endpoints are
        // fixed, inside they are swapped (see above).
        CHECK(m.apply(pt(x, 0)).at_infinity);
        if (std::abs(x) > 1.0) {
            CHECK(close(m.apply(pt(1, 0)), pt(1, 0)));
            CHECK(close(m.apply(pt(-1, 0)), pt(-1, 0)));
        } else if (std::abs(x) < 1.0) {
            CHECK(close(m.apply(pt(1, 0)), pt(-1, 0)));
            CHECK(close(m.apply(pt(-1, 0)), pt(1, 0)));
        }
    }
}

TEST_CASE("three point interpolation") {
    MobiusTransform m = mobius_three_point(pt(-1, 0), pt(0, 0), pt(1, 0), pt(0, 0),
                                           pt(1, 0), ComplexPoint::infinity());
    CHECK(close(m.apply(pt(-1, 0)), pt(0, 0)));
    CHECK(close(m.apply(pt(0, 0)), pt(1, 0)));
    CHECK(m.apply(pt(1, 0)).at_infinity);
}
