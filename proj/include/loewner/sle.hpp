#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loewner/curve.hpp"
#include "loewner/loewner.hpp"

namespace loewner {

struct SleConfig {
    double kappa = 2.0;
    double rho = 0.0;
    double w0 = 0.0;   // chordal: position on R; radial: angle
    double v0 = 3.141592653589793;  // force point angle (radial)
    double T = 1.0;
    double dt = 0.0;   // 0 means 1e-4 * T
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    double step() const { return dt > 0 ? dt : 1e-4 * T; }
};

/// W_t = w0 + sqrt(kappa) B_t on the dt-grid; deterministic per
/// (seed, stream).
DrivingFunction sample_chordal_driving(const SleConfig& cfg);

struct RadialSample {
    DrivingFunction driving;         // W as unwrapped angles
    std::vector<double> v_angles;    // force point path, same grid
    bool collided = false;           // truncated at W-V collision
};

/// Radial SLE(kappa; rho) system by Euler-Maruyama: the drift of W is
/// the real part of i(rho/2)(e^{iW}+V)/(e^{iW}-V) and V follows
/// dV = -V(V+e^{iW})/(V-e^{iW}) dt, renormalized to the circle.
/// With rho = 0 the W increments equal sample_chordal_driving's.
RadialSample sample_radial_sle_kr(const SleConfig& cfg);

/// Trace through the forward solvers: chordal when no observation
/// point is given; otherwise radial SLE(kappa; kappa-6) in the frame
/// of x, started at the angles of the images of w0 and infinity.
Curve sample_sle_trace(const SleConfig& cfg, std::size_t n,
                       const std::optional<ComplexPoint>& x = {});

}  // namespace loewner
