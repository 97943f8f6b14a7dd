#include "loewner/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "loewner/rng.hpp"

namespace loewner {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Total weld measure owned by steps with capacity time in (s, t].
double arc_measure_between(const LoewnerChain& ch, const WeldArcs& arcs, double s,
                           double t) {
    double total = 0.0;
    for (std::size_t k = 0; k < ch.steps.size(); ++k) {
        double ct = ch.steps[k].cap_time;
        if (ct > s + 1e-12 && ct <= t + 1e-12) total += arcs.own[k];
    }
    return total;
}

}  // namespace

double hitting_prob_conformal(const Curve& c, const ComplexPoint& x, double s,
                              double t) {
    if (s < 0 || t < s)
        throw std::invalid_argument("hitting_prob_conformal: need 0 <= s <= t");
    UnzipResult r = unzip_radial_at(c, x);
    WeldArcs arcs = compute_weld_arcs(r.chain);
    return arc_measure_between(r.chain, arcs, s, t) / kTwoPi;
}

namespace {

/// Squared distance from p to the segment [a, b].
double seg_dist2(Complex p, Complex a, Complex b) {
    Complex ab = b - a;
    double den = std::norm(ab);
    double lam = den > 0 ? std::clamp(((p - a) * std::conj(ab)).real() / den, 0.0, 1.0)
                         : 0.0;
    return std::norm(p - (a + lam * ab));
}

/// Uniform bucket grid over the curve's segments for nearest-barrier
/// queries.  Cells of size `cell`; a query reports the nearest segment
/// within `reach` of the point, or nothing (distance is then > reach).
struct SegmentGrid {
    double cell = 0.1, x0 = 0, y0 = 0, reach = 0.2;
    int nx = 0, ny = 0;
    std::vector<std::vector<std::uint32_t>> buckets;
    std::vector<Complex> a, b;  // finite segments of the curve

    SegmentGrid(const Curve& c, double cell_size, double reach_dist)
        : cell(cell_size), reach(reach_dist) {
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (c.points[i].finite() && c.points[i + 1].finite()) {
                a.push_back(c.points[i].value());
                b.push_back(c.points[i + 1].value());
            }
        double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            xlo = std::min({xlo, a[i].real(), b[i].real()});
            xhi = std::max({xhi, a[i].real(), b[i].real()});
            ylo = std::min({ylo, a[i].imag(), b[i].imag()});
            yhi = std::max({yhi, a[i].imag(), b[i].imag()});
        }
        x0 = xlo - reach;
        y0 = ylo - reach;
        nx = std::max(1, int((xhi + reach - x0) / cell) + 1);
        ny = std::max(1, int((yhi + reach - y0) / cell) + 1);
        buckets.assign(std::size_t(nx) * ny, {});
        int pad = int(std::ceil(reach / cell));
        for (std::size_t i = 0; i < a.size(); ++i) {
            int ix0 = std::clamp(int((std::min(a[i].real(), b[i].real()) - x0) / cell) - pad, 0, nx - 1);
            int ix1 = std::clamp(int((std::max(a[i].real(), b[i].real()) - x0) / cell) + pad, 0, nx - 1);
            int iy0 = std::clamp(int((std::min(a[i].imag(), b[i].imag()) - y0) / cell) - pad, 0, ny - 1);
            int iy1 = std::clamp(int((std::max(a[i].imag(), b[i].imag()) - y0) / cell) + pad, 0, ny - 1);
            for (int ix = ix0; ix <= ix1; ++ix)
                for (int iy = iy0; iy <= iy1; ++iy)
                    buckets[std::size_t(iy) * nx + ix].push_back(std::uint32_t(i));
        }
    }

    /// Distance to the nearest segment if within reach; index output.
    bool nearest(Complex p, double& dist, std::size_t& idx) const {
        int ix = int((p.real() - x0) / cell), iy = int((p.imag() - y0) / cell);
        if (ix < 0 || ix >= nx || iy < 0 || iy >= ny) return false;
        double best = reach * reach;
        bool found = false;
        for (std::uint32_t i : buckets[std::size_t(iy) * nx + ix]) {
            double d2 = seg_dist2(p, a[i], b[i]);
            if (d2 < best) {
                best = d2;
                idx = i;
                found = true;
            }
        }
        if (found) dist = std::sqrt(best);
        return found;
    }
};

}  // namespace

double hitting_prob_mc(const Curve& c, const ComplexPoint& z, double s, double t,
                       std::size_t walkers, double step, std::uint64_t seed,
                       bool parallel) {
    if (!z.finite() || z.im <= 0)
        throw std::invalid_argument("hitting_prob_mc: z must be interior");
    bool have_curve = c.size() >= 2;
    double eps_abs = step / 10.0;

    // capacity time of each curve sample, seen from z, for attribution
    std::vector<double> sample_cap;
    std::size_t nseg = 0;
    if (have_curve) {
        UnzipResult r = unzip_radial_at(c, z);
        sample_cap = r.sample_cap;
        double final_cap = sample_cap.empty() ? 0.0 : sample_cap.back();
        sample_cap.resize(c.size(), final_cap);
        nseg = c.size() - 1;
    }
    SegmentGrid grid = have_curve
                           ? SegmentGrid(c, std::max(step, 1e-3), 2.0 * step)
                           : SegmentGrid(Curve(), std::max(step, 1e-3), 2.0 * step);

    // bounding box of the curve: outside it the distance to the curve is
    // bounded below by the box distance, which lets far walkers take
    // sphere-sized jumps instead of diffusing at the step scale
    double bx0 = 0, bx1 = 0, by0 = 0, by1 = 0;
    for (std::size_t i = 0; i < grid.a.size(); ++i) {
        bx0 = std::min({bx0, grid.a[i].real(), grid.b[i].real()});
        bx1 = std::max({bx1, grid.a[i].real(), grid.b[i].real()});
        by0 = std::min({by0, grid.a[i].imag(), grid.b[i].imag()});
        by1 = std::max({by1, grid.a[i].imag(), grid.b[i].imag()});
    }
    auto box_dist = [&](Complex p) {
        double dx = std::max({bx0 - p.real(), 0.0, p.real() - bx1});
        double dy = std::max({by0 - p.imag(), 0.0, p.imag() - by1});
        return std::hypot(dx, dy);
    };

    double far = 50.0 * (1.0 + std::hypot(z.re, z.im));
    auto run_walker = [&](std::uint64_t w) -> double {
        CounterRng rng(seed, w + 1);
        Complex p(z.re, z.im);
        for (int it = 0; it < 200000; ++it) {
            double d_real = p.imag();
            double d_curve = 2.0 * step;
            std::size_t idx = 0;
            bool has = nseg > 0 && grid.nearest(p, d_curve, idx);
            if (!has && nseg > 0) d_curve = std::max(d_curve, box_dist(p));
            double d = std::min(d_real, nseg > 0 ? d_curve : d_real);
            if (d < eps_abs) {
                if (has && d_curve <= d_real) {
                    // nearest sample of the winning segment
                    Complex a = grid.a[idx], b = grid.b[idx];
                    std::size_t si = (std::norm(p - a) <= std::norm(p - b)) ? idx : idx + 1;
                    double ct = sample_cap[std::min(si, sample_cap.size() - 1)];
                    return (ct > s - 1e-12 && ct <= t + 1e-12) ? 1.0 : 0.0;
                }
                return (s <= -1.0) ? 1.0 : 0.0;  // absorbed on the real line
            }
            if (std::abs(p) > far) return (s <= -1.0) ? 1.0 : 0.0;
            // walk on spheres: d is a lower bound on the distance to the
            // barrier, so the exit law of the disc of radius d/2 is exact
            double r = d / 2.0;
            double ang = kTwoPi * rng.uniform();
            p += std::polar(r, ang);
        }
        return (s <= -1.0) ? 1.0 : 0.0;
    };

    double hits = 0.0;
    long long n = (long long)walkers;
    if (parallel) {
#pragma omp parallel for reduction(+ : hits) schedule(static)
        for (long long w = 0; w < n; ++w) hits += run_walker(std::uint64_t(w));
    } else {
        for (long long w = 0; w < n; ++w) hits += run_walker(std::uint64_t(w));
    }
    return hits / double(walkers);
}

namespace {

/// Harmonic measure from v (inside the disc) of the boundary arc from
/// angle a counterclockwise through span (Poisson kernel, midpoint
/// rule at a resolution far below the 1e-3 assertion scale).
double disc_arc_measure(Complex v, double a, double span) {
    const int n = 4096;
    double vv = std::norm(v);
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
        double th = a + span * (k + 0.5) / n;
        total += (1.0 - vv) / std::norm(std::polar(1.0, th) - v);
    }
    return total * span / (n * kTwoPi);
}

double mod_2pi(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r;
}

}  // namespace

double alpha_left(const Curve& c, const ComplexPoint& x, const ComplexPoint& z,
                  const std::optional<ComplexPoint>& ref_p) {
    UnzipResult r = unzip_radial_at(c, x);
    EvalResult ez = chain_eval(r.chain, z);
    if (ez.swallowed || !ez.value.finite())
        throw std::invalid_argument("alpha_left: z not in the x-component");
    Complex v = ez.value.value();

    double a_lo;
    if (ref_p) {
        ComplexPoint pimg = chain_push_boundary(r.chain, *ref_p, +1);
        a_lo = std::atan2(pimg.im, pimg.re);
    } else {
        WeldArcs arcs = compute_weld_arcs(r.chain);
        a_lo = arcs.base_lo;
    }
    double w_end = r.driving.values.back();
    double span = mod_2pi(w_end - a_lo);
    return disc_arc_measure(v, a_lo, span);
}

namespace {

MobiusTransform rotation(double angle) {
    Complex e = std::polar(1.0, angle);
    return MobiusTransform(e, Complex(0, 0), Complex(0, 0), Complex(1, 0));
}

MobiusTransform disc_center(Complex p) {
    return MobiusTransform(Complex(1, 0), -p, -std::conj(p), Complex(1, 0));
}

/// Uniform-cell chain of the evolution driven by w over [0, t]; the
/// radial construction mirrors solve_radial_trace.
LoewnerChain chain_from_driving(const DrivingFunction& w, double t,
                                std::size_t n) {
    LoewnerChain ch;
    ch.kind = w.kind;
    double dt = t / double(n);
    if (w.kind == Kind::Chordal) {
        for (std::size_t k = 0; k < n; ++k)
            ch.steps.push_back({MobiusTransform::identity(),
                                SlitStep{w.at((k + 0.5) * dt), dt},
                                MobiusTransform::identity(), double(k + 1) * dt, 0.0});
        return ch;
    }
    ch.disc_output = true;
    double d = (1.0 - std::exp(-dt)) / 4.0;
    double q = std::sqrt(1.0 - 4.0 * d);
    Complex p((q - 1.0) / (q + 1.0), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double theta = w.at((k + 0.5) * dt);
        MobiusTransform A = mobius_compose(
            cayley_inv_map(), rotation(std::numbers::pi - theta));
        MobiusTransform MpC = mobius_compose(disc_center(p), cayley_map());
        Complex si(0.0, q);
        Complex D0 = MpC.deriv(si) * (Complex(0, 1) / si) * A.deriv(Complex(0, 0));
        MobiusTransform B = mobius_compose(rotation(-std::arg(D0)), MpC);
        ch.steps.push_back({A, SlitStep{0.0, d}, B, double(k + 1) * dt, 0.0});
    }
    return ch;
}

}  // namespace

double caratheodory_sup(const DrivingFunction& w1, const DrivingFunction& w2,
                        const std::optional<ComplexPoint>&, double t, double eps,
                        std::size_t grid, std::size_t n_steps) {
    if (w1.kind != w2.kind)
        throw std::invalid_argument("caratheodory_sup: mixed driving kinds");
    if (t > std::min(w1.horizon(), w2.horizon()) + 1e-12)
        throw std::invalid_argument("caratheodory_sup: t beyond a horizon");
    bool disc = w2.kind == Kind::Radial;
    Curve trace2 = disc ? solve_radial_trace(w2, n_steps)
                        : solve_chordal_trace(w2, n_steps);
    LoewnerChain ch1 = chain_from_driving(w1, t, n_steps);
    LoewnerChain ch2 = chain_from_driving(w2, t, n_steps);

    // lattice points of the epsilon-interior of the complement
    std::vector<ComplexPoint> pts;
    for (std::size_t i = 0; i < grid; ++i) {
        for (std::size_t k = 0; k < grid; ++k) {
            double u = -1.0 + 2.0 * (i + 0.5) / grid;
            double v = -1.0 + 2.0 * (k + 0.5) / grid;
            ComplexPoint zp;
            if (disc) {
                if (u * u + v * v >= 1.0) continue;
                zp = ComplexPoint(u, v);
            } else {
                // image lattice under the Cayley transform covers the
                // half-plane with cdist-uniform spacing
                if (u * u + v * v >= 1.0) continue;
                zp = cayley_inv(Complex(u, v));
                if (!zp.finite() || zp.im <= 0) continue;
            }
            double dmin = 2.0;
            for (const auto& q : trace2.points) dmin = std::min(dmin, cdist(zp, q));
            if (dmin >= eps) pts.push_back(zp);
        }
    }
    if (pts.empty())
        throw std::invalid_argument("caratheodory_sup: eps leaves no grid points");

    double sup = 0.0;
    for (const auto& z0 : pts) {
        ComplexPoint z1 = z0, z2 = z0;
        bool dead = false;
        for (std::size_t k = 0; k < n_steps && !dead; ++k) {
            bool s1 = false, s2 = false;
            auto push = [&](const LoewnerChain::Step& st, ComplexPoint z,
                            bool& sw) {
                z = st.before.apply(z);
                EvalResult e = slit_map_forward(z, st.slit);
                if (e.swallowed || (z.finite() && z.im < -1e-9)) sw = true;
                return st.after.apply(e.value);
            };
            z1 = push(ch1.steps[k], z1, s1);
            z2 = push(ch2.steps[k], z2, s2);
            // points of the eps-interior stay alive under both flows at
            // uniformly close drivings; a swallowed one just stops
            // contributing from its disconnection time on
            dead = s1 || s2;
            if (!dead) sup = std::max(sup, cdist(z1, z2));
        }
    }
    return sup;
}

double time_separation_diag(const Curve& c, double t, double eps) {
    if (c.size() < 3) return 0.0;
    // split index at capacity time t (curve parameter fraction for
    // curves not rooted in the half-plane)
    std::size_t split = 0;
    if (c.domain == Domain::HalfPlane && c.front().finite() &&
        std::abs(c.front().im) < 1e-9) {
        UnzipResult r = unzip_chordal(c);
        while (split + 1 < r.sample_cap.size() && r.sample_cap[split] < t) ++split;
    } else {
        double lo = c.params.front(), hi = c.params.back();
        double tp = lo + t * (hi - lo);
        while (split + 1 < c.size() && c.params[split] < tp) ++split;
    }
    if (split == 0 || split + 1 >= c.size()) return 0.0;

    // samples of either half near the other half
    std::vector<Complex> close;
    auto scan = [&](std::size_t from, std::size_t to, std::size_t ofrom,
                    std::size_t oto) {
        for (std::size_t i = from; i < to; ++i) {
            if (!c.points[i].finite()) continue;
            for (std::size_t k = ofrom; k < oto; ++k) {
                if (!c.points[k].finite()) continue;
                if (cdist(c.points[i], c.points[k]) < eps) {
                    close.push_back(c.points[i].value());
                    break;
                }
            }
        }
    };
    scan(0, split, split, c.size());
    scan(split, c.size(), 0, split);
    if (close.empty()) return 0.0;

    // union-find over 2 eps links
    std::vector<std::size_t> parent(close.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < close.size(); ++i)
        for (std::size_t k = i + 1; k < close.size(); ++k)
            if (cdist(close[i], close[k]) <= 2.0 * eps) parent[find(i)] = find(k);

    double best = 0.0;
    for (std::size_t i = 0; i < close.size(); ++i)
        for (std::size_t k = i + 1; k < close.size(); ++k)
            if (find(i) == find(k))
                best = std::max(best, cdist(close[i], close[k]));
    return best;
}

double harmonic_param_s(const Curve& c,
                        const std::vector<std::pair<ComplexPoint, double>>& x_weights,
                        double t) {
    double total = 0.0;
    for (const auto& [x, weight] : x_weights) {
        if (weight <= 0)
            throw std::invalid_argument("harmonic_param_s: weights must be positive");
        UnzipResult r = unzip_radial_at(c, x);
        if (r.chain.steps.empty()) continue;  // x cut off immediately: s_x = 0
        WeldArcs arcs = compute_weld_arcs(r.chain);

        // capacity time reached by curve time t
        double cap_t = 0.0;
        for (std::size_t k = 0; k + 1 < r.consumed; ++k)
            if (c.params[k + 1] <= t) cap_t = r.sample_cap[k + 1];

        // interior arcs only: steps whose source sample is off the
        // domain boundary
        auto interior_sample = [&](double cap) {
            std::size_t k = 0;
            while (k + 1 < r.sample_cap.size() && r.sample_cap[k + 1] < cap - 1e-15)
                ++k;
            const ComplexPoint& p = c.points[std::min(k + 1, c.size() - 1)];
            if (!p.finite()) return false;
            if (c.domain == Domain::Disc) return std::hypot(p.re, p.im) < 1.0 - 1e-9;
            return p.im > 1e-9;
        };
        double done = 0.0, all = 0.0;
        for (std::size_t k = 0; k < r.chain.steps.size(); ++k) {
            if (!interior_sample(r.chain.steps[k].cap_time)) continue;
            all += arcs.own[k];
            if (r.chain.steps[k].cap_time <= cap_t + 1e-12) done += arcs.own[k];
        }
        if (all > 0) total += weight * done / all;
    }
    return total;
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double na = double(a.size()), nb = double(b.size());
    double d = 0.0;
    std::size_t i = 0, k = 0;
    while (i < a.size() && k < b.size()) {
        double v = std::min(a[i], b[k]);
        while (i < a.size() && a[i] <= v) ++i;
        while (k < b.size() && b[k] <= v) ++k;
        d = std::max(d, std::abs(double(i) / na - double(k) / nb));
    }
    KsResult r;
    r.statistic = d;
    double en = std::sqrt(na * nb / (na + nb));
    double lambda = (en + 0.12 + 0.11 / en) * d;
    double p = 0.0;
    for (int j = 1; j <= 100; ++j)
        p += 2.0 * (j % 2 ? 1.0 : -1.0) * std::exp(-2.0 * j * j * lambda * lambda);
    r.p_value = std::clamp(p, 0.0, 1.0);
    return r;
}

}  // namespace loewner
