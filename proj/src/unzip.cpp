#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loewner/loewner.hpp"

namespace loewner {

namespace {

MobiusTransform rotation(double angle) {
    Complex e = std::polar(1.0, angle);
    return MobiusTransform(e, Complex(0, 0), Complex(0, 0), Complex(1, 0));
}

MobiusTransform disc_center(Complex p) {
    return MobiusTransform(Complex(1, 0), -p, -std::conj(p), Complex(1, 0));
}

double curve_scale(const Curve& c) {
    double s = 1.0;
    for (const auto& p : c.points)
        if (p.finite()) s = std::max(s, std::hypot(p.re, p.im));
    return s;
}

/// Boundary push through one step, keeping track of the side at slit
/// bases via the explicit hint.
ComplexPoint push_step(const LoewnerChain::Step& st, ComplexPoint z, int side) {
    z = st.before.apply(z);
    if (z.at_infinity) return st.after.apply(z);
    double x = z.re;  // boundary points are real in slit coordinates
    int s = x > st.slit.w ? 1 : (x < st.slit.w ? -1 : side);
    return st.after.apply(ComplexPoint(slit_map_forward_real(x, st.slit, s), 0.0));
}

double mod_2pi(double a) {
    double twopi = 2.0 * std::numbers::pi;
    double r = std::fmod(a, twopi);
    if (r < 0) r += twopi;
    return r;
}

}  // namespace

ComplexPoint chain_push_boundary(const LoewnerChain& ch, const ComplexPoint& z,
                                 int side) {
    ComplexPoint v = ch.pre.apply(z);
    for (const auto& st : ch.steps) v = push_step(st, v, side);
    return ch.post.apply(v);
}

UnzipResult unzip_chordal(const Curve& c) {
    if (c.domain != Domain::HalfPlane)
        throw std::invalid_argument("unzip_chordal: curve must live in the half-plane");
    double scale = curve_scale(c);
    const ComplexPoint& z0 = c.points.front();
    if (!z0.finite() || std::abs(z0.im) > 1e-6 * scale)
        throw std::invalid_argument("unzip_chordal: curve must start on the real line");

    UnzipResult r;
    r.chain.kind = Kind::Chordal;
    r.driving.kind = Kind::Chordal;
    r.driving.times = {0.0};
    r.driving.values = {z0.re};
    r.sample_cap = {0.0};
    r.consumed = 1;

    double cap = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k) {
        if (!c.points[k].finite()) break;  // terminal point at infinity
        ComplexPoint z = c.points[k];
        for (const auto& st : r.chain.steps) z = slit_map_forward(z, st.slit).value;
        if (!z.finite())
            throw std::runtime_error("unzip_chordal: sample escaped to infinity");
        double v = z.im;
        if (v < -1e-7 * scale)
            throw std::runtime_error(
                "unzip_chordal: sample left the half-plane; curve is not simple "
                "at this resolution");
        v = std::max(v, 0.0);
        double u = z.re;
        double d = v * v / 4.0;
        cap += d;
        r.chain.steps.push_back({MobiusTransform::identity(), SlitStep{u, d},
                                 MobiusTransform::identity(), cap, v});
        if (cap - r.driving.times.back() < 1e-15 * (1.0 + cap)) {
            r.driving.values.back() = u;  // zero-capacity slide along the weld
        } else {
            r.driving.times.push_back(cap);
            r.driving.values.push_back(u);
        }
        r.sample_cap.push_back(cap);
        r.consumed = k + 1;
    }
    return r;
}

MobiusTransform observation_frame(const ComplexPoint& x, Domain dom) {
    if (dom == Domain::HalfPlane) {
        if (x.at_infinity || x.im <= 0)
            throw std::invalid_argument("observation_frame: x must be interior");
        MobiusTransform pre = mobius_compose(cayley_map(), psi_interior(x));
        // normalize to x -> 0 with positive derivative
        return mobius_compose(rotation(-std::arg(pre.deriv(x.value()))), pre);
    }
    if (x.at_infinity || std::hypot(x.re, x.im) >= 1)
        throw std::invalid_argument("observation_frame: x must be inside the disc");
    return disc_center(x.value());
}

UnzipResult unzip_radial_at(const Curve& c, const ComplexPoint& x) {
    MobiusTransform pre = observation_frame(x, c.domain);

    UnzipResult r;
    r.chain.kind = Kind::Radial;
    r.chain.disc_output = true;
    r.chain.pre = pre;
    r.driving.kind = Kind::Radial;

    ComplexPoint zeta0 = pre.apply(c.points.front());
    if (!zeta0.finite())
        throw std::runtime_error("unzip_radial_at: degenerate start point");
    double theta = std::atan2(zeta0.im, zeta0.re);
    r.driving.times = {0.0};
    r.driving.values = {theta};
    r.sample_cap = {0.0};
    r.consumed = 1;

    double cap = 0.0;
    const MobiusTransform A0 = cayley_inv_map();
    const double twopi = 2.0 * std::numbers::pi;
    ComplexPoint prev_src = c.points.front();
    for (std::size_t k = 1; k < c.size() && !r.truncated; ++k) {
        // Targets still to absorb; the front of the segment may be
        // bisected so the tip angle never moves more than a fraction of
        // a turn per committed step (the branch would be lost otherwise).
        std::vector<ComplexPoint> pending = {c.points[k]};
        while (!pending.empty()) {
            ComplexPoint src = pending.back();
            ComplexPoint z = pre.apply(src);
            for (const auto& st : r.chain.steps) {
                z = st.before.apply(z);
                z = slit_map_forward(z, st.slit).value;
                z = st.after.apply(z);
            }
            if (!z.finite()) z = ComplexPoint(1.0, 0.0);  // boundary in disc coordinates
            double rad = std::hypot(z.re, z.im);
            if (rad > 1.0 + 1e-7) {
                // the sample is no longer visible from x; capacity has stopped
                r.truncated = true;
                break;
            }
            if (rad < 1e-6) {
                // the curve has reached x itself; capacity diverges here
                r.truncated = true;
                break;
            }
            rad = std::min(rad, 1.0);
            if (1.0 - rad < 1e-5) {
                // numerically swallowed: the sample sits behind already
                // unzipped boundary and its image angle is pure noise;
                // it contributes no resolvable capacity or weld motion
                prev_src = src;
                pending.pop_back();
                continue;
            }
            double ang = std::atan2(z.im, z.re);

            // Center the sample under the anchor: the rotated Cayley frame
            // puts the sample at height v on the imaginary axis and x at i.
            double v = (1.0 - rad) / (1.0 + rad);
            double d = v * v / 4.0;
            double q = std::sqrt(std::max(1.0 - v * v, 0.0));
            MobiusTransform A =
                mobius_compose(A0, rotation(std::numbers::pi - ang));
            Complex p((q - 1.0) / (q + 1.0), 0.0);
            MobiusTransform MpC = mobius_compose(disc_center(p), cayley_map());
            Complex si(0.0, q);
            Complex D0 = MpC.deriv(si) * (Complex(0, 1) / si) * A.deriv(Complex(0, 0));
            MobiusTransform B = mobius_compose(rotation(-std::arg(D0)), MpC);

            ComplexPoint tip = B.apply(ComplexPoint(0.0, 0.0));
            double raw = std::atan2(tip.im, tip.re);
            double delta = raw - theta;
            delta -= twopi * std::round(delta / twopi);
            double seg = (src.finite() && prev_src.finite())
                             ? std::hypot(src.re - prev_src.re, src.im - prev_src.im)
                             : 0.0;
            if (std::abs(delta) > 0.9 && seg > 1e-11 * (1.0 + std::hypot(src.re, src.im))) {
                pending.push_back(ComplexPoint(0.5 * (src.re + prev_src.re),
                                               0.5 * (src.im + prev_src.im)));
                continue;
            }

            double dcap = -std::log1p(-v * v);  // exact capacity seen from x
            cap += dcap;
            r.chain.steps.push_back({A, SlitStep{0.0, d}, B, cap, v});
            theta += delta;
            if (cap - r.driving.times.back() < 1e-15 * (1.0 + cap)) {
                r.driving.values.back() = theta;
            } else {
                r.driving.times.push_back(cap);
                r.driving.values.push_back(theta);
            }
            prev_src = src;
            pending.pop_back();
        }
        if (!r.truncated) {
            r.sample_cap.push_back(cap);
            r.consumed = k + 1;
        }
    }
    return r;
}

WeldArcs compute_weld_arcs(const LoewnerChain& ch) {
    std::size_t n = ch.steps.size();
    WeldArcs w;
    w.lo.assign(n, 0.0);
    w.hi.assign(n, 0.0);
    w.own.assign(n, 0.0);

    // terminal-coordinate interval of each step's consumed boundary arc
    std::vector<double> sample(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& sk = ch.steps[k];
        double half = 2.0 * std::sqrt(std::max(sk.slit.dcap, 0.0));
        ComplexPoint a(sk.slit.w - half, 0.0);
        ComplexPoint b(sk.slit.w + half, 0.0);
        ComplexPoint m(sk.slit.w + 0.5 * half, 0.0);
        auto push_rest = [&](ComplexPoint z, int side) {
            z = ch.steps[k].after.apply(z);
            for (std::size_t j = k + 1; j < n; ++j) z = push_step(ch.steps[j], z, side);
            return ch.post.apply(z);
        };
        ComplexPoint pa = push_rest(a, -1);
        ComplexPoint pb = push_rest(b, +1);
        ComplexPoint pm = push_rest(m, +1);
        if (ch.disc_output) {
            double alpha = std::atan2(pa.im, pa.re);
            double beta = std::atan2(pb.im, pb.re);
            double sigma = std::atan2(pm.im, pm.re);
            double span = mod_2pi(beta - alpha);
            if (half <= 0) span = 0.0;
            if (mod_2pi(sigma - alpha) <= span + 1e-12) {
                w.lo[k] = alpha;
                w.hi[k] = alpha + span;
            } else {
                w.lo[k] = beta;
                w.hi[k] = beta + mod_2pi(alpha - beta);
            }
        } else {
            double xa = pa.at_infinity ? 0.0 : pa.re;
            double xb = pb.at_infinity ? 0.0 : pb.re;
            w.lo[k] = std::min(xa, xb);
            w.hi[k] = std::max(xa, xb);
        }
        sample[k] = 0.5 * (w.lo[k] + w.hi[k]);
    }

    // own measure: the interval minus arcs of later steps nested in it
    // (the family is laminar: later arcs are inside or disjoint)
    for (std::size_t k = 0; k < n; ++k) {
        double len = w.hi[k] - w.lo[k];
        if (len <= 0) continue;
        std::vector<std::pair<double, double>> inner;
        for (std::size_t j = k + 1; j < n; ++j) {
            double ljn = w.hi[j] - w.lo[j];
            if (ljn <= 0) continue;
            double s;
            if (ch.disc_output)
                s = w.lo[k] + mod_2pi(w.lo[j] - w.lo[k]);
            else
                s = w.lo[j];
            if (s >= w.hi[k] - 1e-12) continue;
            if (!ch.disc_output && s + ljn <= w.lo[k] + 1e-12) continue;
            inner.emplace_back(std::max(s, w.lo[k]), std::min(s + ljn, w.hi[k]));
        }
        std::sort(inner.begin(), inner.end());
        double covered = 0.0, end = w.lo[k];
        for (auto& iv : inner) {
            double s = std::max(iv.first, end);
            if (iv.second > s) {
                covered += iv.second - s;
                end = iv.second;
            }
        }
        w.own[k] = std::max(0.0, len - covered);
    }

    if (n > 0) {
        w.base_lo = *std::min_element(w.lo.begin(), w.lo.end());
        w.base_hi = *std::max_element(w.hi.begin(), w.hi.end());
    }
    return w;
}

}  // namespace loewner
