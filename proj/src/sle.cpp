#include "loewner/sle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "loewner/rng.hpp"

namespace loewner {

DrivingFunction sample_chordal_driving(const SleConfig& cfg) {
    double dt = cfg.step();
    std::size_t m = std::size_t(std::ceil(cfg.T / dt - 1e-9));
    CounterRng rng(cfg.seed, cfg.stream);
    DrivingFunction w;
    w.kind = Kind::Chordal;
    w.times.reserve(m + 1);
    w.values.reserve(m + 1);
    w.times.push_back(0.0);
    w.values.push_back(cfg.w0);
    double s = std::sqrt(cfg.kappa * dt);
    for (std::size_t k = 1; k <= m; ++k) {
        w.times.push_back(std::min(double(k) * dt, cfg.T));
        w.values.push_back(w.values.back() + s * rng.normal());
    }
    return w;
}

RadialSample sample_radial_sle_kr(const SleConfig& cfg) {
    double dt = cfg.step();
    std::size_t m = std::size_t(std::ceil(cfg.T / dt - 1e-9));
    CounterRng rng(cfg.seed, cfg.stream);
    RadialSample out;
    out.driving.kind = Kind::Radial;
    double W = cfg.w0;
    Complex V = std::polar(1.0, cfg.v0);
    out.driving.times.push_back(0.0);
    out.driving.values.push_back(W);
    out.v_angles.push_back(cfg.v0);
    double s = std::sqrt(cfg.kappa * dt);
    const double collision_tol = 1e-3;
    for (std::size_t k = 1; k <= m; ++k) {
        Complex eiW = std::polar(1.0, W);
        double noise = s * rng.normal();  // drawn every step, rho or not
        if (std::abs(eiW - V) < collision_tol) {
            out.collided = true;  // force point swallowed
            break;
        }
        double drift = 0.0;
        if (cfg.rho != 0.0) {
            Complex d = Complex(0, 1) * (cfg.rho / 2.0) * (eiW + V) / (eiW - V);
            if (std::abs(d.imag()) > 1e-9 * (1.0 + std::abs(d.real())))
                throw std::logic_error("sample_radial_sle_kr: drift not real");
            drift = d.real();
        }
        Complex dV = -V * (V + eiW) / (V - eiW);
        V += dV * dt;
        V /= std::abs(V);
        W += noise + drift * dt;
        out.driving.times.push_back(std::min(double(k) * dt, cfg.T));
        out.driving.values.push_back(W);
        out.v_angles.push_back(std::arg(V));
    }
    return out;
}

Curve sample_sle_trace(const SleConfig& cfg, std::size_t n,
                       const std::optional<ComplexPoint>& x) {
    if (!x) return solve_chordal_trace(sample_chordal_driving(cfg), n);
    MobiusTransform frame = observation_frame(*x);
    SleConfig rc = cfg;
    rc.rho = cfg.kappa - 6.0;
    ComplexPoint start = frame.apply(ComplexPoint(cfg.w0, 0.0));
    ComplexPoint inf = frame.apply(ComplexPoint::infinity());
    rc.w0 = std::atan2(start.im, start.re);
    rc.v0 = std::atan2(inf.im, inf.re);
    RadialSample rs = sample_radial_sle_kr(rc);
    Curve disc = solve_radial_trace(rs.driving, n);
    // pull back from the frame of x to the half-plane
    return disc.mapped(frame.inverse(), Domain::HalfPlane);
}

}  // namespace loewner
