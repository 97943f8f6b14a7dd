#include "loewner/loewner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace loewner {

double DrivingFunction::at(double t) const {
    if (times.empty()) throw std::logic_error("DrivingFunction: empty");
    if (t <= times.front()) return values.front();
    if (t >= times.back()) return values.back();
    auto it = std::upper_bound(times.begin(), times.end(), t);
    std::size_t i = std::size_t(it - times.begin());
    double a = times[i - 1], b = times[i];
    double u = (t - a) / (b - a);
    return values[i - 1] * (1 - u) + values[i] * u;
}

void write_driving_csv(const DrivingFunction& w, const std::string& path,
                       const std::optional<ComplexPoint>& observation_point,
                       const std::string& source_hash) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f.precision(17);
    f << "t,w\n";
    for (std::size_t i = 0; i < w.times.size(); ++i)
        f << w.times[i] << "," << w.values[i] << "\n";

    nlohmann::json meta;
    meta["kind"] = w.kind == Kind::Chordal ? "chordal" : "radial";
    meta["T"] = w.horizon();
    if (observation_point) {
        if (observation_point->at_infinity)
            meta["x"] = "infinity";
        else
            meta["x"] = {{"re", observation_point->re}, {"im", observation_point->im}};
    }
    if (!source_hash.empty()) meta["source_curve_hash"] = source_hash;
    std::ofstream jf(path + ".json");
    if (!jf) throw std::runtime_error("cannot open " + path + ".json");
    jf << meta.dump(2) << "\n";
}

DrivingFunction read_driving_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    DrivingFunction w;
    std::string line;
    std::getline(f, line);  // header
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string a, b;
        std::getline(is, a, ',');
        std::getline(is, b, ',');
        w.times.push_back(std::stod(a));
        w.values.push_back(std::stod(b));
    }
    std::ifstream jf(path + ".json");
    if (jf) {
        nlohmann::json meta = nlohmann::json::parse(jf, nullptr, false);
        if (!meta.is_discarded() && meta.contains("kind") && meta["kind"] == "radial")
            w.kind = Kind::Radial;
    }
    return w;
}

namespace {

/// Branch of sqrt((z - w)^2 + 4d) with nonnegative imaginary part,
/// matching the side of the base point for real arguments.
Complex slit_sqrt(Complex zw, double fourd) {
    Complex s = std::sqrt(zw * zw + fourd);
    if (s.imag() < 0) s = -s;
    if (std::abs(s.imag()) < 1e-300) {
        double sign = zw.real() >= 0 ? 1.0 : -1.0;
        s = Complex(sign * std::abs(s.real()), 0.0);
    }
    return s;
}

}  // namespace

EvalResult slit_map_forward(const ComplexPoint& z, const SlitStep& s) {
    EvalResult r;
    if (z.at_infinity) {
        r.value = ComplexPoint::infinity();
        return r;
    }
    Complex zw = z.value() - s.w;
    double tip = 2.0 * std::sqrt(std::max(s.dcap, 0.0));
    // points strictly inside the open slit have no image in the domain
    if (std::abs(zw.real()) < 1e-14 * (1 + tip) && zw.imag() > 1e-14 &&
        zw.imag() < tip * (1 - 1e-12)) {
        r.swallowed = true;
    }
    r.value = ComplexPoint(s.w + slit_sqrt(zw, 4.0 * s.dcap));
    return r;
}

ComplexPoint slit_map_inverse(const ComplexPoint& u, const SlitStep& s) {
    if (u.at_infinity) return ComplexPoint::infinity();
    Complex uw = u.value() - s.w;
    Complex r = std::sqrt(uw * uw - 4.0 * s.dcap);
    if (r.imag() < 0) r = -r;
    if (std::abs(r.imag()) < 1e-300) {
        double sign = uw.real() >= 0 ? 1.0 : -1.0;
        r = Complex(sign * std::abs(r.real()), 0.0);
    }
    return ComplexPoint(s.w + r);
}

double slit_map_forward_real(double x, const SlitStep& s, int side) {
    double d = x - s.w;
    double tip = 2.0 * std::sqrt(std::max(s.dcap, 0.0));
    if (std::abs(d) < 1e-300) return s.w + (side >= 0 ? tip : -tip);
    double m = std::sqrt(d * d + 4.0 * s.dcap);
    return s.w + (d > 0 ? m : -m);
}

namespace {

/// Push a compactified point through one chain step, flagging loss of
/// interiority in the slit frame.
ComplexPoint step_apply(const LoewnerChain::Step& st, ComplexPoint z, bool interior,
                        bool& swallowed) {
    z = st.before.apply(z);
    if (interior && z.finite() && z.im < 1e-12) swallowed = true;
    EvalResult e = slit_map_forward(z, st.slit);
    if (e.swallowed) swallowed = true;
    return st.after.apply(e.value);
}

}  // namespace

EvalResult chain_eval_prefix(const LoewnerChain& ch, const ComplexPoint& z,
                             std::size_t nsteps) {
    EvalResult r;
    ComplexPoint v = ch.pre.apply(z);
    bool interior;
    if (ch.disc_output)
        interior = v.finite() && std::hypot(v.re, v.im) < 1 - 1e-12;
    else
        interior = v.finite() && v.im > 1e-12;
    std::size_t n = std::min(nsteps, ch.steps.size());
    for (std::size_t i = 0; i < n; ++i) {
        bool sw = false;
        v = step_apply(ch.steps[i], v, interior, sw);
        if (sw && interior && !r.swallowed) {
            r.swallowed = true;
            r.swallow_step = i;
        }
    }
    r.value = ch.post.apply(v);
    return r;
}

EvalResult chain_eval(const LoewnerChain& ch, const ComplexPoint& z) {
    return chain_eval_prefix(ch, z, ch.steps.size());
}

ValueDeriv chain_eval_deriv(const LoewnerChain& ch, Complex z) {
    ValueDeriv r;
    Complex v = ch.pre.apply(z);
    Complex dv = ch.pre.deriv(z);
    bool interior = ch.disc_output ? std::abs(v) < 1 - 1e-12 : v.imag() > 1e-12;
    for (const auto& st : ch.steps) {
        Complex u = st.before.apply(v);
        dv *= st.before.deriv(v);
        if (interior && u.imag() < 1e-12) r.swallowed = true;
        Complex uw = u - st.slit.w;
        Complex s = slit_sqrt(uw, 4.0 * st.slit.dcap);
        Complex g = st.slit.w + s;
        if (std::abs(s) > 1e-300) dv *= uw / s;
        v = st.after.apply(g);
        dv *= st.after.deriv(g);
    }
    r.value = ch.post.apply(v);
    r.deriv = dv * ch.post.deriv(v);
    return r;
}

double conformal_radius_at(const LoewnerChain& ch, const ComplexPoint& x) {
    if (x.at_infinity)
        throw std::invalid_argument("conformal_radius_at: x must be finite");
    ValueDeriv vd = chain_eval_deriv(ch, x.value());
    if (vd.swallowed) return 0.0;
    double da = std::abs(vd.deriv);
    if (da < 1e-300) return 0.0;
    if (ch.disc_output) return std::max(0.0, 1.0 - std::norm(vd.value)) / da;
    return 2.0 * std::max(0.0, vd.value.imag()) / da;
}

Curve solve_chordal_trace(const DrivingFunction& w, std::size_t n) {
    if (n < 1) throw std::invalid_argument("solve_chordal_trace: n >= 1");
    double T = w.horizon();
    if (T <= 0) throw std::invalid_argument("solve_chordal_trace: empty horizon");
    double dt = T / double(n);
    // midpoint driving value per capacity cell
    std::vector<SlitStep> steps(n);
    for (std::size_t j = 0; j < n; ++j)
        steps[j] = SlitStep{w.at((double(j) + 0.5) * dt), dt};

    std::vector<ComplexPoint> pts(n + 1);
    std::vector<double> t(n + 1);
    pts[0] = ComplexPoint(w.at(0.0), 0.0);
    t[0] = 0.0;
    long long nn = (long long)n;
#pragma omp parallel for schedule(dynamic, 8)
    for (long long k = 1; k <= nn; ++k) {
        ComplexPoint z(steps[k - 1].w, 0.0);  // tip seed of cell k
        for (long long j = k - 1; j >= 0; --j) z = slit_map_inverse(z, steps[j]);
        pts[k] = z;
        t[k] = double(k) * dt;
    }
    return Curve(std::move(pts), std::move(t), Domain::HalfPlane);
}

namespace {

MobiusTransform rotation(double angle) {
    Complex e = std::polar(1.0, angle);
    return MobiusTransform(e, Complex(0, 0), Complex(0, 0), Complex(1, 0));
}

/// Disc automorphism z -> (z - p)/(1 - conj(p) z).
MobiusTransform disc_center(Complex p) {
    return MobiusTransform(Complex(1, 0), -p, -std::conj(p), Complex(1, 0));
}

}  // namespace

Curve solve_radial_trace(const DrivingFunction& w, std::size_t n) {
    if (n < 1) throw std::invalid_argument("solve_radial_trace: n >= 1");
    double T = w.horizon();
    if (T <= 0) throw std::invalid_argument("solve_radial_trace: empty horizon");
    double dt = T / double(n);

    // Each capacity cell is a chordal slit step conjugated so that the
    // driving point sits under the anchor: A_k sends the disc to the
    // half-plane with e^{iW} -> 0 and 0 -> i.  With the base centered,
    // a cell of capacity dt needs dcap = (1 - e^{-dt})/4 exactly.
    double d = (1.0 - std::exp(-dt)) / 4.0;
    double q = std::sqrt(1.0 - 4.0 * d);
    Complex p((q - 1.0) / (q + 1.0), 0.0);  // image of the anchor before recentering

    std::vector<LoewnerChain::Step> steps(n);
    for (std::size_t k = 0; k < n; ++k) {
        double theta = w.at((double(k) + 0.5) * dt);
        MobiusTransform A = mobius_compose(
            cayley_inv_map(),
            MobiusTransform(-std::polar(1.0, -theta), Complex(0, 0), Complex(0, 0),
                            Complex(1, 0)));
        MobiusTransform MpC = mobius_compose(disc_center(p), cayley_map());
        Complex si(0.0, q);  // slit image of the anchor A(0) = i
        Complex D0 = MpC.deriv(si) * (Complex(0, 1) / si) * A.deriv(Complex(0, 0));
        MobiusTransform B = mobius_compose(rotation(-std::arg(D0)), MpC);
        steps[k] = LoewnerChain::Step{A, SlitStep{0.0, d}, B, double(k + 1) * dt, 0.0};
    }

    std::vector<ComplexPoint> pts(n + 1);
    std::vector<double> t(n + 1);
    pts[0] = ComplexPoint(std::polar(1.0, w.at(0.0)));
    t[0] = 0.0;
    double tip = 2.0 * std::sqrt(d);
    long long nn = (long long)n;
#pragma omp parallel for schedule(dynamic, 8)
    for (long long k = 1; k <= nn; ++k) {
        // tip of cell k in its slit coordinates, pulled back to the disc
        ComplexPoint z(Complex(0.0, tip));
        z = steps[k - 1].before.inverse().apply(z);
        for (long long j = k - 2; j >= 0; --j) {
            z = steps[j].after.inverse().apply(z);
            z = slit_map_inverse(z, steps[j].slit);
            z = steps[j].before.inverse().apply(z);
        }
        pts[k] = z;
        t[k] = double(k) * dt;
    }
    return Curve(std::move(pts), std::move(t), Domain::Disc);
}

}  // namespace loewner
