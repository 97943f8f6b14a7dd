#include "loewner/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace loewner {

namespace {

constexpr double kPi = std::numbers::pi;

void add(std::vector<ComplexPoint>& v, double x, double y) { v.emplace_back(x, y); }

/// Append arc points c + r e^{i(a0 + sweep s)}, s = 1/n, ..., 1.  The
/// point at s = 0 is not appended; callers push the entry point first.
void add_arc(std::vector<ComplexPoint>& v, Complex c, double r, double a0,
             double sweep, int nseg) {
    for (int s = 1; s <= nseg; ++s) {
        double a = a0 + sweep * double(s) / nseg;
        v.emplace_back(Complex(c.real() + r * std::cos(a), c.imag() + r * std::sin(a)));
    }
}

Complex lerp(Complex a, Complex b, double lam) { return a + (b - a) * lam; }

}  // namespace

Curve densify(const Curve& c, double max_len) {
    std::vector<ComplexPoint> pts;
    std::vector<double> ts;
    pts.push_back(c.points.front());
    ts.push_back(c.params.front());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const ComplexPoint& a = c.points[i];
        const ComplexPoint& b = c.points[i + 1];
        if (a.finite() && b.finite()) {
            double len = std::abs(b.value() - a.value());
            int n = std::max(1, int(std::ceil(len / max_len)));
            for (int k = 1; k <= n; ++k) {
                double lam = double(k) / n;
                pts.emplace_back(lerp(a.value(), b.value(), lam));
                ts.push_back(c.params[i] + lam * (c.params[i + 1] - c.params[i]));
            }
        } else {
            pts.push_back(b);
            ts.push_back(c.params[i + 1]);
        }
    }
    return Curve(std::move(pts), std::move(ts), c.domain);
}

Curve gen_ladder(std::size_t j, double height) {
    double scale = std::ldexp(1.0, -int(j));
    std::size_t N = std::max<std::size_t>(4, std::size_t(std::ceil(height / scale)));
    std::vector<ComplexPoint> v;
    add(v, 0, 0);
    for (std::size_t n = 1; n <= N; ++n) {
        v.emplace_back((n % 2 ? -1.0 : 1.0) * scale, double(n) * scale);
        if (n < N) v.emplace_back(0.0, 0.5 * double(n) * scale);
    }
    Curve c = Curve::from_points(std::move(v));
    double ml = std::max(scale / 2.0, c.arclength() / 20000.0);
    return densify(c, ml);
}

Curve gen_ladder_target(std::size_t j, double height) {
    double scale = std::ldexp(1.0, -int(j));
    std::size_t N = std::max<std::size_t>(4, std::size_t(std::ceil(height / scale)));
    std::vector<ComplexPoint> v;
    add(v, 0, 0);
    add(v, 0, double(N) * scale);
    return densify(Curve::from_points(std::move(v)), std::max(scale / 2.0, 1e-3));
}

Curve gen_three_segment(std::size_t j, ThreeSegmentVariant variant) {
    // Offsets a quarter of 2^{-j} so the staggered passes fit inside
    // the disc even at j = 1.
    double del = 0.25 * std::ldexp(1.0, -int(j));
    std::vector<ComplexPoint> v;
    if (variant == ThreeSegmentVariant::Plain) {
        add(v, -1, 0);
        add(v, 0, 1 - del);
        add(v, 0, -1 + del);
        add(v, 1, 0);
    } else {
        // Passes at x = 0, -del, -2 del: each retrace lies on the side
        // already screened from the terminal point by the pass before
        // it, so the surplus passes carry vanishing capacity from 1.
        double yt = 1 - 4 * del, yb = -1 + 4 * del;
        add(v, -1, 0);
        add(v, 0, yt);
        add(v, 0, yb);
        add(v, -del / 2, yb - del / 2);
        add(v, -del, yb);
        add(v, -del, yt - 4 * del);
        add(v, -1.5 * del, yt - 3 * del);
        add(v, -2 * del, yt - 4 * del);
        add(v, -2 * del, yb - 2 * del);
        add(v, 0, -1 + del);
        add(v, 1, 0);
    }
    return densify(Curve::from_points(std::move(v), Domain::Disc),
                   std::min(0.03, del / 3.0));
}

Curve gen_three_segment_target(std::size_t j_sep) {
    // The d_f / d_b limit of the family: the plain trace with the
    // middle segment's corners a tiny separation short of the circle.
    double del = 0.25 * std::ldexp(1.0, -int(j_sep));
    std::vector<ComplexPoint> v;
    add(v, -1, 0);
    add(v, 0, 1 - del);
    add(v, 0, -1 + del);
    add(v, 1, 0);
    return densify(Curve::from_points(std::move(v), Domain::Disc), 0.01);
}

namespace {
struct LoopEvent {
    double t;
    int k;
};
}  // namespace

Curve gen_dyadic_loops(std::size_t depth, const Curve& base, double loop_scale) {
    std::vector<LoopEvent> ev;
    for (int k = 1; k <= int(depth); ++k) {
        double h = std::ldexp(1.0, -k);
        for (int m = 0;; ++m) {
            double t = 2.0 * h * m + h;
            if (t >= 1.0 - 1e-12) break;
            ev.push_back({t, k});
        }
    }
    std::sort(ev.begin(), ev.end(),
              [](const LoopEvent& a, const LoopEvent& b) { return a.t < b.t; });

    auto mult = [&](double s) {
        double f = 1.0;
        for (const auto& e : ev) {
            double h = std::ldexp(1.0, -e.k);
            if (s > e.t - h + 1e-15 && s < e.t + h - 1e-15) f *= 2.0 / 3.0;
        }
        return f;
    };
    std::vector<double> bp;  // interval endpoints, for exact integration
    for (const auto& e : ev) {
        double h = std::ldexp(1.0, -e.k);
        bp.push_back(e.t - h);
        bp.push_back(e.t + h);
    }
    std::sort(bp.begin(), bp.end());
    auto span_dur = [&](double a, double b) {
        std::vector<double> cuts{a, b};
        for (double x : bp)
            if (x > a + 1e-15 && x < b - 1e-15) cuts.push_back(x);
        std::sort(cuts.begin(), cuts.end());
        double tot = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            tot += (cuts[i + 1] - cuts[i]) * mult(0.5 * (cuts[i] + cuts[i + 1]));
        return tot;
    };

    const int nseg = 48;
    const double gap = 0.25;  // angular opening keeping the loop simple
    std::vector<ComplexPoint> pts;
    std::vector<double> dur;  // duration of the segment ending at pts[i]
    pts.push_back(base.points.front());
    std::size_t ei = 0;
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
        double t0 = base.params[i], t1 = base.params[i + 1];
        Complex p0 = base.points[i].value(), p1 = base.points[i + 1].value();
        double cur = t0;
        while (ei < ev.size() && ev[ei].t < t1 - 1e-15) {
            double te = ev[ei].t;
            double lam = std::max(0.0, (te - t0) / (t1 - t0));
            Complex pe = lerp(p0, p1, lam);
            if (te > cur + 1e-15) {
                pts.emplace_back(pe);
                dur.push_back(span_dur(cur, te));
            } else {
                pe = pts.back().value();
            }
            Complex u = (p1 - p0) / std::abs(p1 - p0);
            double h = std::ldexp(1.0, -ev[ei].k);
            double r = loop_scale * std::pow(4.0, -ev[ei].k);
            Complex ctr = pe + r * Complex(0, 1) * u;  // center left of travel
            double a0 = std::arg(pe - ctr);
            double ld = 2.0 * h / 3.0;
            for (const auto& e2 : ev) {
                if (e2.k >= ev[ei].k) continue;
                double h2 = std::ldexp(1.0, -e2.k);
                if (te > e2.t - h2 + 1e-15 && te < e2.t + h2 - 1e-15) ld *= 2.0 / 3.0;
            }
            std::size_t before = pts.size();
            add_arc(pts, ctr, r, a0, -(2.0 * kPi - gap), nseg);
            for (std::size_t s2 = before; s2 < pts.size(); ++s2)
                dur.push_back(ld / double(pts.size() - before));
            cur = te;
            ++ei;
        }
        if (t1 > cur + 1e-15) {
            pts.push_back(base.points[i + 1]);
            dur.push_back(span_dur(cur, t1));
        }
    }
    std::vector<double> params(pts.size(), 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i) params[i] = params[i - 1] + dur[i - 1];
    double total = params.back();
    for (double& p : params) p /= total;
    return Curve(std::move(pts), std::move(params), base.domain);
}

namespace {

/// Undecorated slot boundary: from -1 up the left side of the slot of
/// half width d around [0, 3i], across the top, down the right side,
/// out to 1.  The mouth at the bottom has width ~2d.
Curve slot_base(double d) {
    std::vector<ComplexPoint> v;
    add(v, -1, 0);
    add(v, -d, 0.5 * d);
    add(v, -d, 3);
    add(v, d, 3);
    add(v, d, 0.5 * d);
    add(v, 1, 0);
    return Curve::from_points(std::move(v));
}

struct Hairpin {
    double h;     // attach height of the lower run
    int side;     // -1 left wall, +1 right wall
    double lane;  // signed x of the hairpin center
    double w;     // leg half separation
    double b;     // dip depth
    double roff;  // vertical gap between the two runs
};

double slot_densify_len(double d) { return std::min(0.02, std::max(d / 3.0, 0.003)); }

/// Sample spacing must stay below the local channel width even where
/// the curve is harmonically invisible, or single slit steps jump
/// across thin screens and fabricate visible growth.  Inside the slot
/// the narrowest channels are the gaps between hook legs, of order a
/// quarter lane pitch; outside the coarse spacing suffices.
Curve hooks_densify(const Curve& c, double d, double lane_pitch) {
    double coarse = slot_densify_len(d);
    double fine = std::min(coarse, lane_pitch / 4.0);
    std::vector<ComplexPoint> pts{c.points.front()};
    std::vector<double> ts{c.params.front()};
    auto in_slot = [&](const ComplexPoint& p) {
        return p.finite() && std::abs(p.re) < d + 0.01 && p.im > 0.2 && p.im < 3.05;
    };
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const ComplexPoint& a = c.points[i];
        const ComplexPoint& b = c.points[i + 1];
        double h = (in_slot(a) || in_slot(b)) ? fine : coarse;
        double len = std::hypot(b.re - a.re, b.im - a.im);
        int n = std::max(1, int(std::ceil(len / h)));
        for (int k = 1; k <= n; ++k) {
            double lam = double(k) / n;
            pts.emplace_back(a.re + lam * (b.re - a.re), a.im + lam * (b.im - a.im));
            ts.push_back(c.params[i] + lam * (c.params[i + 1] - c.params[i]));
        }
    }
    return Curve(std::move(pts), std::move(ts), c.domain);
}

}  // namespace

Curve gen_hooks(std::size_t j) {
    double d = std::ldexp(1.0, -int(j));
    Curve dec = gen_dyadic_loops(2, slot_base(d), 0.12);

    double Delta = d / double(j + 2);
    double w = Delta / 4.0, roff = 0.04;
    std::vector<Hairpin> hooks;
    for (std::size_t k = 1; k <= j; ++k) {
        int side = (k % 2) ? -1 : +1;
        double lane = side * (d - (double(k) + 0.5) * Delta);
        double h = 1.3 + (j > 1 ? 0.7 * double(k - 1) / double(j - 1) : 0.0);
        hooks.push_back({h, side, lane, w, 0.55 + 0.02 * double(k), roff});
    }

    std::vector<ComplexPoint> pts;
    std::vector<double> ts;
    pts.push_back(dec.points.front());
    ts.push_back(dec.params.front());
    for (std::size_t i = 0; i + 1 < dec.size(); ++i) {
        Complex a = dec.points[i].value(), b = dec.points[i + 1].value();
        double ta = dec.params[i], tb = dec.params[i + 1];
        // wall segments run vertically close to x = +-d below the top
        int wall = 0;
        if (std::abs(a.real() - b.real()) < 1e-3 && std::abs(a.real() + d) < 0.05 &&
            b.imag() > a.imag() + 1e-12)
            wall = -1;
        if (std::abs(a.real() - b.real()) < 1e-3 && std::abs(a.real() - d) < 0.05 &&
            b.imag() < a.imag() - 1e-12)
            wall = +1;
        if (wall != 0) {
            std::vector<const Hairpin*> here;
            double ylo = std::min(a.imag(), b.imag()), yhi = std::max(a.imag(), b.imag());
            for (const auto& hk : hooks)
                if (hk.side == wall && hk.h > ylo && hk.h + hk.roff < yhi)
                    here.push_back(&hk);
            std::sort(here.begin(), here.end(), [&](const Hairpin* u, const Hairpin* v) {
                return wall == -1 ? u->h < v->h : u->h > v->h;
            });
            for (const Hairpin* hk : here) {
                double y_in = wall == -1 ? hk->h : hk->h + hk->roff;
                double y_out = wall == -1 ? hk->h + hk->roff : hk->h;
                auto at_y = [&](double y) {
                    double lam = (y - a.imag()) / (b.imag() - a.imag());
                    return std::pair<Complex, double>(lerp(a, b, lam), ta + lam * (tb - ta));
                };
                auto [pin, tin] = at_y(y_in);
                auto [pout, tout] = at_y(y_out);
                std::vector<ComplexPoint> hp;
                hp.emplace_back(pin);
                if (wall == -1) {
                    // upward travel: entry run to the near leg, dip,
                    // return over the near leg along the upper run
                    add(hp, hk->lane - hk->w, hk->h);
                    add(hp, hk->lane - hk->w, hk->b);
                    add(hp, hk->lane, hk->b - hk->w);
                    add(hp, hk->lane + hk->w, hk->b);
                    add(hp, hk->lane + hk->w, hk->h + hk->roff);
                } else {
                    // downward travel: entry run over the near leg to
                    // the far leg, dip, return up the near leg
                    add(hp, hk->lane - hk->w, hk->h + hk->roff);
                    add(hp, hk->lane - hk->w, hk->b);
                    add(hp, hk->lane, hk->b - hk->w);
                    add(hp, hk->lane + hk->w, hk->b);
                    add(hp, hk->lane + hk->w, hk->h);
                }
                hp.emplace_back(pout);
                double clen = 0.0;
                for (std::size_t q = 0; q + 1 < hp.size(); ++q)
                    clen += std::abs(hp[q + 1].value() - hp[q].value());
                double acc = 0.0;
                for (std::size_t q = 1; q < hp.size(); ++q) {
                    acc += std::abs(hp[q].value() - hp[q - 1].value());
                    pts.push_back(hp[q]);
                    ts.push_back(tin + (tout - tin) * acc / clen);
                }
            }
        }
        pts.push_back(dec.points[i + 1]);
        ts.push_back(tb);
    }
    return hooks_densify(Curve(std::move(pts), std::move(ts)), d, Delta);
}

Curve gen_hooks_limit(std::size_t j_sep) {
    double d = std::ldexp(1.0, -int(j_sep));
    return densify(gen_dyadic_loops(2, slot_base(d), 0.12), slot_densify_len(d));
}

namespace {

constexpr double kAx = -0.42, kAy = 0.85, kRa = 0.3;  // room A loop circle
constexpr double kBx = 0.45, kBy = 0.85, kRb = 0.3;   // room B loop circle
constexpr double kXd = 0.05, kRoof = 1.6;
constexpr double kAin = 0.8;  // entry angle on circle A (upper right)
constexpr double kBin = 2.2;  // entry angle on circle B (upper left)

double fig8_gap(std::size_t j) { return 0.03 * std::ldexp(1.0, -int(j)); }

/// eta_1 (outer left wall and roof), eta_2 (right wall, floor and the
/// divider that seals room B up to a 5g opening below the roof).
void fig8_head(std::vector<ComplexPoint>& v, double g) {
    add(v, -1, 0);
    add(v, -0.95, 0.9);
    add(v, -0.9, kRoof);
    add(v, 0.9, kRoof);
    add(v, 0.9, 0.15);
    add(v, kXd, 0.15);
    add(v, kXd, kRoof - 5 * g);
}

/// After the room B loop closes the tip sits just below the entry hop.
/// The way out stays under that hop, rounds the left and bottom of the
/// circle, and climbs in the open column right of it.
void fig8_b_escape(std::vector<ComplexPoint>& v) {
    add(v, 0.1, 1.0);
    add(v, 0.12, 0.6);
    add(v, 0.2, 0.38);
    add(v, 0.45, 0.33);
    add(v, 0.75, 0.42);
    add(v, 0.84, 0.55);
}

void fig8_tail(std::vector<ComplexPoint>& v, double g) {
    // eta_5: up right of the loop, back over the gap, down the open
    // side of room A; eta_6: the corridor under the floor to 1.
    fig8_b_escape(v);
    add(v, 0.84, kRoof - 2 * g);
    add(v, -0.85, kRoof - 2 * g);
    add(v, -0.85, 0.08);
    add(v, 0.4, 0.05);
    add(v, 0.95, 0.07);
    add(v, 1, 0);
}

/// Sample spacing must stay below the local channel width, or the
/// single-slit steps of the unzipper jump across the thin screens and
/// fabricate visible growth.  The first n_open vertices (the head) are
/// traced in open space and keep a moderate spacing; afterwards the
/// bands near the divider and under the roof hold channels of width ~g
/// and get g-scale spacing, while everything else stays at 0.02.
Curve fig8_densify(Curve c, double g, std::size_t n_open) {
    double fine = std::max(g / 2.0, 1e-5);
    auto in_band = [&](const ComplexPoint& p) {
        if (!p.finite()) return false;
        if (p.im >= kRoof - 8 * g && std::abs(p.re) < 0.95) return true;
        return std::abs(p.re - kXd) <= 8 * g && p.im >= 1.0;
    };
    std::vector<ComplexPoint> pts = {c.points.front()};
    std::vector<double> ts = {c.params.front()};
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const ComplexPoint& a = c.points[i];
        const ComplexPoint& b = c.points[i + 1];
        double h = i + 1 < n_open           ? 0.002
                   : in_band(a) || in_band(b) ? fine
                                              : 0.02;
        if (a.finite() && b.finite()) {
            double len = std::abs(b.value() - a.value());
            int n = std::max(1, int(std::ceil(len / h)));
            for (int k = 1; k <= n; ++k) {
                double lam = double(k) / n;
                pts.emplace_back(lerp(a.value(), b.value(), lam));
                ts.push_back(c.params[i] + lam * (c.params[i + 1] - c.params[i]));
            }
        } else {
            pts.push_back(b);
            ts.push_back(c.params[i + 1]);
        }
    }
    return Curve(std::move(pts), std::move(ts), c.domain);
}

}  // namespace

ComplexPoint figure_eight_viewpoint() { return ComplexPoint(kBx, kBy); }

Curve gen_figure_eight(std::size_t j, FigureEightVariant variant) {
    double g = fig8_gap(j);
    double angA = 4 * g / kRa, angB = 4 * g / kRb;
    Complex cA(kAx, kAy), cB(kBx, kBy);
    std::vector<ComplexPoint> v;
    fig8_head(v, g);
    if (variant == FigureEightVariant::A) {
        // left room loop first, then the right room loop around the
        // viewpoint, then out
        add(v, kXd - g, kRoof - 4 * g);
        add(v, kXd - g, 1.1);
        v.emplace_back(cA + kRa * std::polar(1.0, kAin));
        add_arc(v, cA, kRa, kAin, -(2 * kPi - angA), 64);
        add(v, kXd - 3 * g, 1.12);
        add(v, kXd - 3 * g, kRoof - 3 * g);
        add(v, kXd + 2 * g, kRoof - 3 * g);
        add(v, kXd + 2 * g, 1.15);
        v.emplace_back(cB + kRb * std::polar(1.0, kBin));
        add_arc(v, cB, kRb, kBin, -(2 * kPi - angB), 64);
        fig8_tail(v, g);
    } else {
        // right room loop first: the viewpoint is cut here already
        add(v, kXd + 2 * g, kRoof - 4 * g);
        add(v, kXd + 2 * g, 1.15);
        v.emplace_back(cB + kRb * std::polar(1.0, kBin));
        add_arc(v, cB, kRb, kBin, -(2 * kPi - angB), 64);
        fig8_b_escape(v);
        add(v, 0.84, kRoof - 3 * g);
        add(v, kXd - g, kRoof - 3 * g);
        add(v, kXd - g, 1.1);
        v.emplace_back(cA + kRa * std::polar(1.0, kAin));
        add_arc(v, cA, kRa, kAin, -(2 * kPi - angA), 64);
        // exit over and around the left loop, out through room A's
        // open bottom and the corridor
        add(v, -0.42, 1.25);
        add(v, -0.8, 1.1);
        add(v, -0.8, 0.5);
        add(v, -0.4, 0.12);
        add(v, 0.0, 0.08);
        add(v, 0.4, 0.05);
        add(v, 0.95, 0.07);
        add(v, 1, 0);
    }
    return fig8_densify(Curve::from_points(std::move(v)), g, 7);
}

Curve gen_figure_eight_limit(LimitDirection dir, std::size_t j) {
    double g = fig8_gap(j);
    double angB = 4 * g / kRb;
    Complex cB(kBx, kBy);
    std::vector<ComplexPoint> v;
    if (dir == LimitDirection::Forward) {
        // eta_1 eta_2 eta_4: straight into room B, close the loop, stop
        fig8_head(v, g);
        add(v, kXd + g, kRoof - 4 * g);
        add(v, kXd + g, 1.15);
        v.emplace_back(cB + kRb * std::polar(1.0, kBin));
        add_arc(v, cB, kRb, kBin, -(2 * kPi - angB), 64);
    } else {
        // eta_6^- eta_5^- eta_4^-: the reverse of the variant A tail
        add(v, 1, 0);
        add(v, 0.95, 0.07);
        add(v, 0.4, 0.05);
        add(v, -0.85, 0.08);
        add(v, -0.85, kRoof - 2 * g);
        add(v, 0.84, kRoof - 2 * g);
        add(v, 0.84, 0.55);
        add(v, 0.75, 0.42);
        add(v, 0.45, 0.33);
        add(v, 0.2, 0.38);
        add(v, 0.12, 0.6);
        add(v, 0.1, 1.0);
        v.emplace_back(cB + kRb * std::polar(1.0, kBin + angB));
        add_arc(v, cB, kRb, kBin + angB, 2 * kPi - angB, 64);
        // the reversed tail never runs inside a channel; every part is
        // traced in open space before the walls that would screen it
        return densify(Curve::from_points(std::move(v)), 0.005);
    }
    return fig8_densify(Curve::from_points(std::move(v)), g, 7);
}

Curve gen_half_strip(std::size_t k) {
    if (k < 1) throw std::invalid_argument("gen_half_strip: k must be >= 1");
    std::vector<ComplexPoint> v;
    add(v, 0, 0);
    for (std::size_t n = 1; n <= k; ++n) {
        v.emplace_back(n % 2 ? -1.0 : 1.0, double(n));
        if (n < k) v.emplace_back(0.0, 1.0 - std::ldexp(1.0, -int(n)));
    }
    return densify(Curve::from_points(std::move(v)), 0.03);
}

Curve transport_to_canonical(const Curve& c, SourceDomain domain,
                             const ComplexPoint& a, const ComplexPoint& b) {
    if (domain == SourceDomain::Disc) {
        double ta = std::atan2(a.im, a.re), tb = std::atan2(b.im, b.re);
        double dlt = ta - tb;
        while (dlt <= 0) dlt += 2 * kPi;
        while (dlt > 2 * kPi) dlt -= 2 * kPi;
        // q on the counterclockwise arc from b to a, so that (a, b, q)
        // is positively oriented and the disc maps onto the half-plane
        double tq = tb + dlt / 2;
        ComplexPoint q(std::cos(tq), std::sin(tq));
        MobiusTransform m = mobius_three_point(a, b, q, ComplexPoint(-1, 0),
                                               ComplexPoint(1, 0),
                                               ComplexPoint::infinity());
        return c.mapped(m, Domain::HalfPlane);
    }
    if (domain == SourceDomain::HalfStrip) {
        auto s = [](const ComplexPoint& p) {
            if (p.at_infinity) return ComplexPoint::infinity();
            return ComplexPoint(std::sin(kPi * p.value() / 2.0));
        };
        std::vector<ComplexPoint> pts;
        pts.reserve(c.size());
        for (const auto& p : c.points) pts.push_back(s(p));
        Curve h(std::move(pts), c.params, Domain::HalfPlane);
        return transport_to_canonical(h, SourceDomain::HalfPlane, s(a), s(b));
    }
    if (!a.at_infinity && !b.at_infinity && std::abs(a.re + 1) < 1e-12 &&
        std::abs(b.re - 1) < 1e-12) {
        Curve out = c;
        out.domain = Domain::HalfPlane;
        return out;
    }
    ComplexPoint q;
    if (a.at_infinity)
        q = ComplexPoint(b.re + 1, 0);
    else if (b.at_infinity)
        q = ComplexPoint(a.re - 1, 0);
    else if (a.re < b.re)
        q = ComplexPoint::infinity();
    else
        q = ComplexPoint(0.5 * (a.re + b.re), 0);
    MobiusTransform m = mobius_three_point(a, b, q, ComplexPoint(-1, 0), ComplexPoint(1, 0),
                                           ComplexPoint::infinity());
    return c.mapped(m, Domain::HalfPlane);
}

Curve gen_smooth_family(std::size_t j, std::size_t samples) {
    double amp = std::ldexp(1.0, -int(j));
    std::vector<ComplexPoint> v;
    v.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        double th = kPi * (1.0 - double(s) / double(samples - 1));
        double r = 1.0 + amp * (0.4 * std::sin(th) * std::sin(2 * th) +
                                0.25 * std::sin(th) * std::sin(5 * th));
        v.emplace_back(r * std::cos(th), r * std::sin(th));
    }
    return Curve::from_points(std::move(v));
}

Curve gen_smooth_target(std::size_t samples) {
    std::vector<ComplexPoint> v;
    v.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        double th = kPi * (1.0 - double(s) / double(samples - 1));
        v.emplace_back(std::cos(th), std::sin(th));
    }
    return Curve::from_points(std::move(v));
}

}  // namespace loewner
