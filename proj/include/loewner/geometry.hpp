#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace loewner {

using Complex = std::complex<double>;

/// A point of the compactified plane: a finite complex number or the
/// point at infinity.  Points meant to lie in the closed upper half
/// plane have im >= 0 (within tolerance); the disc-domain variants are
/// handled by the Curve type's domain tag.
struct ComplexPoint {
    double re = 0.0;
    double im = 0.0;
    bool at_infinity = false;

    constexpr ComplexPoint() = default;
    constexpr ComplexPoint(double r, double i) : re(r), im(i) {}
    ComplexPoint(Complex z) : re(z.real()), im(z.imag()) {}

    static constexpr ComplexPoint infinity() {
        ComplexPoint p;
        p.at_infinity = true;
        return p;
    }

    Complex value() const { return Complex(re, im); }
    bool finite() const { return !at_infinity; }

    bool operator==(const ComplexPoint&) const = default;
};

inline ComplexPoint make_finite(Complex z) { return ComplexPoint(z); }

/// Cayley transform (z - i)/(z + i), mapping the closed half-plane onto
/// the closed unit disc and infinity to 1.
inline Complex cayley(const ComplexPoint& z) {
    if (z.at_infinity) return Complex(1.0, 0.0);
    return (z.value() - Complex(0, 1)) / (z.value() + Complex(0, 1));
}

/// Inverse Cayley transform i(1 + w)/(1 - w); w = 1 maps to infinity.
inline ComplexPoint cayley_inv(Complex w) {
    Complex d = Complex(1, 0) - w;
    if (std::abs(d) < 1e-14) return ComplexPoint::infinity();
    return ComplexPoint(Complex(0, 1) * (Complex(1, 0) + w) / d);
}

/// The bounded metric on the closed half-plane induced by the Cayley
/// transform: cdist(z, w) = |cayley(z) - cayley(w)|.  Bounded by 2.
inline double cdist(const ComplexPoint& z, const ComplexPoint& w) {
    return std::abs(cayley(z) - cayley(w));
}

inline double cdist(Complex z, Complex w) {
    return cdist(ComplexPoint(z), ComplexPoint(w));
}

/// Fractional-linear map (az + b)/(cz + d), kept normalized to
/// determinant one so that long compositions stay well-scaled.
struct MobiusTransform {
    Complex a{1, 0}, b{0, 0}, c{0, 0}, d{1, 0};

    MobiusTransform() = default;
    MobiusTransform(Complex a_, Complex b_, Complex c_, Complex d_)
        : a(a_), b(b_), c(c_), d(d_) {
        normalize();
    }

    static MobiusTransform identity() { return MobiusTransform(); }

    Complex det() const { return a * d - b * c; }

    void normalize() {
        Complex dt = det();
        if (std::abs(dt) < 1e-14)
            throw std::invalid_argument("MobiusTransform: degenerate coefficients");
        Complex s = std::sqrt(dt);
        a /= s; b /= s; c /= s; d /= s;
    }

    ComplexPoint apply(const ComplexPoint& z) const {
        if (z.at_infinity) {
            if (std::abs(c) < 1e-14) return ComplexPoint::infinity();
            return ComplexPoint(a / c);
        }
        Complex den = c * z.value() + d;
        if (std::abs(den) < 1e-14) return ComplexPoint::infinity();
        return ComplexPoint((a * z.value() + b) / den);
    }

    Complex apply(Complex z) const {
        Complex den = c * z + d;
        return (a * z + b) / den;
    }

    /// Derivative (ad - bc)/(cz + d)^2 at a finite point.
    Complex deriv(Complex z) const {
        Complex den = c * z + d;
        return det() / (den * den);
    }

    MobiusTransform inverse() const {
        return MobiusTransform(d, -b, -c, a);
    }
};

/// Composition: apply(compose(m1, m2), z) == apply(m1, apply(m2, z)).
inline MobiusTransform mobius_compose(const MobiusTransform& m1,
                                      const MobiusTransform& m2) {
    return MobiusTransform(m1.a * m2.a + m1.b * m2.c,
                           m1.a * m2.b + m1.b * m2.d,
                           m1.c * m2.a + m1.d * m2.c,
                           m1.c * m2.b + m1.d * m2.d);
}

/// Cayley transform as a Mobius map (half-plane -> disc).
inline MobiusTransform cayley_map() {
    return MobiusTransform(Complex(1, 0), Complex(0, -1), Complex(1, 0), Complex(0, 1));
}

inline MobiusTransform cayley_inv_map() { return cayley_map().inverse(); }

/// The unique automorphism of the half-plane with psi(x) = i and
/// psi'(x) > 0, for x strictly interior: z -> (z - Re x)/Im x.
inline MobiusTransform psi_interior(const ComplexPoint& x) {
    if (x.at_infinity || x.im <= 0)
        throw std::invalid_argument("psi_interior: x must be interior");
    return MobiusTransform(Complex(1, 0), Complex(-x.re, 0), Complex(0, 0),
                           Complex(x.im, 0));
}

/// Half-plane automorphism sending the boundary point x to infinity.
/// psi_1: z -> (z+1)/(z-1) and psi_{-1}: z -> (z-1)/(z+1).  For other
/// real x the map preserves the pair {-1, 1}: pointwise for |x| > 1,
/// swapped for |x| < 1 (an orientation-preserving automorphism cannot
/// fix both while sending an x between them to infinity).
inline MobiusTransform psi_boundary(const ComplexPoint& x) {
    if (x.at_infinity) return MobiusTransform::identity();
    if (std::abs(x.im) > 1e-12)
        throw std::invalid_argument("psi_boundary: x must be real or infinity");
    double u = x.re;
    if (std::abs(u - 1.0) < 1e-12)
        return MobiusTransform(Complex(1, 0), Complex(1, 0), Complex(-1, 0), Complex(1, 0));
    if (std::abs(u + 1.0) < 1e-12)
        return MobiusTransform(Complex(1, 0), Complex(-1, 0), Complex(1, 0), Complex(1, 0));
    if (std::abs(u) > 1.0)
        return MobiusTransform(Complex(-u, 0), Complex(1, 0), Complex(1, 0), Complex(-u, 0));
    return MobiusTransform(Complex(u, 0), Complex(-1, 0), Complex(1, 0), Complex(-u, 0));
}

namespace detail {
/// Map sending z1, z2, z3 to 0, 1, infinity.
inline MobiusTransform to_standard_triple(const ComplexPoint& z1,
                                          const ComplexPoint& z2,
                                          const ComplexPoint& z3) {
    if (z1.at_infinity)
        return MobiusTransform(Complex(0, 0), z2.value() - z3.value(), Complex(1, 0),
                               -z3.value());
    if (z2.at_infinity)
        return MobiusTransform(Complex(1, 0), -z1.value(), Complex(1, 0), -z3.value());
    if (z3.at_infinity)
        return MobiusTransform(Complex(1, 0), -z1.value(),
                               Complex(0, 0), z2.value() - z1.value());
    Complex p = z2.value() - z3.value();
    Complex q = z2.value() - z1.value();
    return MobiusTransform(p, -z1.value() * p, q, -z3.value() * q);
}
}  // namespace detail

/// Unique Mobius map with p1 -> q1, p2 -> q2, p3 -> q3, built from
/// cross-ratio maps.  Points may be the tagged infinity.
inline MobiusTransform mobius_three_point(const ComplexPoint& p1, const ComplexPoint& p2,
                                          const ComplexPoint& p3, const ComplexPoint& q1,
                                          const ComplexPoint& q2, const ComplexPoint& q3) {
    MobiusTransform sp = detail::to_standard_triple(p1, p2, p3);
    MobiusTransform sq = detail::to_standard_triple(q1, q2, q3);
    return mobius_compose(sq.inverse(), sp);
}

}  // namespace loewner
