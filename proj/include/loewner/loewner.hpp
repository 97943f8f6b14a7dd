#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "loewner/curve.hpp"
#include "loewner/geometry.hpp"

namespace loewner {

enum class Kind { Chordal, Radial };

/// Sampled driving function on [0, T] in the capacity parametrization.
/// Chordal values are positions on the real line, radial values are
/// unwrapped angles.  Piecewise-linear between samples.
struct DrivingFunction {
    std::vector<double> times;   // strictly increasing, starting at 0
    std::vector<double> values;
    Kind kind = Kind::Chordal;

    double horizon() const { return times.empty() ? 0.0 : times.back(); }
    /// Linear interpolation, clamped to the terminal value past T.
    double at(double t) const;
};

void write_driving_csv(const DrivingFunction& w, const std::string& path,
                       const std::optional<ComplexPoint>& observation_point = {},
                       const std::string& source_hash = "");
DrivingFunction read_driving_csv(const std::string& path);

/// One discretization cell of the Loewner flow: the hydrodynamically
/// normalized map removing the vertical slit [w, w + 2i*sqrt(dcap)].
struct SlitStep {
    double w = 0.0;
    double dcap = 0.0;  // half-plane capacity of the slit
};

struct EvalResult {
    ComplexPoint value;
    bool swallowed = false;
    std::size_t swallow_step = 0;  // step index where the point was lost
};

/// g(z) = w + sqrt((z - w)^2 + 4 dcap), branch mapping the half-plane
/// minus the slit onto the half-plane.  Points strictly inside the slit
/// are reported as swallowed.
EvalResult slit_map_forward(const ComplexPoint& z, const SlitStep& s);

/// Inverse elementary map f(u) = w + sqrt((u - w)^2 - 4 dcap).
ComplexPoint slit_map_inverse(const ComplexPoint& u, const SlitStep& s);

/// Forward action on a boundary point, with an explicit side for the
/// two prime ends at the slit base (side = +1 right, -1 left).
double slit_map_forward_real(double x, const SlitStep& s, int side);

/// Composable record of a discretized Loewner evolution: a pre-map,
/// elementary slit steps (each with an optional pre-conjugation and a
/// post-normalization, identity in the chordal case), and a post-map.
/// Evaluable as the terminal uniformizing map of the unzipped domain.
struct LoewnerChain {
    MobiusTransform pre;
    struct Step {
        MobiusTransform before;  // into slit coordinates
        SlitStep slit;
        MobiusTransform after;   // renormalization
        double cap_time = 0.0;   // cumulative capacity after this step
        double sample_im = 0.0;  // Im of the source curve sample, if any
    };
    std::vector<Step> steps;
    MobiusTransform post;
    Kind kind = Kind::Chordal;
    bool disc_output = false;  // radial chains end in disc coordinates

    double total_capacity() const {
        return steps.empty() ? 0.0 : steps.back().cap_time;
    }
};

/// Evaluate the full chain (this is g_{x,T} on its domain).
EvalResult chain_eval(const LoewnerChain& ch, const ComplexPoint& z);

/// Evaluate the chain truncated after `nsteps` slit steps (post-map
/// still applied for disc chains so output stays normalized).
EvalResult chain_eval_prefix(const LoewnerChain& ch, const ComplexPoint& z,
                             std::size_t nsteps);

/// Value and complex derivative along the chain; used for conformal
/// radius bookkeeping.
struct ValueDeriv {
    Complex value;
    Complex deriv;
    bool swallowed = false;
};
ValueDeriv chain_eval_deriv(const LoewnerChain& ch, Complex z);

/// Conformal radius of the chain's domain at the half-plane point x.
double conformal_radius_at(const LoewnerChain& ch, const ComplexPoint& x);

/// Trace of the chordal evolution driven by W, at n capacity steps.
Curve solve_chordal_trace(const DrivingFunction& w, std::size_t n);

/// Trace of the radial evolution in the closed unit disc.
Curve solve_radial_trace(const DrivingFunction& w, std::size_t n);

/// Canonical uniformization onto the disc for an observation point:
/// x maps to 0 with positive real derivative.  This is the pre-map of
/// unzip_radial_at and the frame in which radial driving angles live.
MobiusTransform observation_frame(const ComplexPoint& x,
                                  Domain dom = Domain::HalfPlane);

/// Push a boundary point of the chain's source domain through the
/// whole chain; `side` (+1/-1) picks the prime end whenever the point
/// sits exactly at a slit base.
ComplexPoint chain_push_boundary(const LoewnerChain& ch, const ComplexPoint& z,
                                 int side);

/// Welding bookkeeping: per-step boundary interval consumed by that
/// step, in terminal chain coordinates (angles for disc chains, reals
/// for chordal ones), plus the measure owned by the step alone.
struct WeldArcs {
    std::vector<double> lo, hi;     // terminal interval per step
    std::vector<double> own;        // measure net of nested later steps
    double base_lo = 0, base_hi = 0;  // terminal interval of step 0's span
};
WeldArcs compute_weld_arcs(const LoewnerChain& ch);

struct UnzipResult {
    DrivingFunction driving;
    LoewnerChain chain;
    bool truncated = false;          // stopped before the end of the curve
    std::size_t consumed = 0;        // curve samples consumed
    std::vector<double> sample_cap;  // capacity time of each consumed sample
};

/// Vertical-slit zipper for a curve in the closed half-plane starting
/// on the real line; driving function with respect to infinity.
UnzipResult unzip_chordal(const Curve& c);

/// Radial zipper with respect to an interior observation point x: the
/// curve is transported to the disc with x at the center and unzipped
/// by conjugated chordal steps; the driving function is W_{x,t} and T
/// is capacity_x of the curve (truncated at the swallowing of x).
UnzipResult unzip_radial_at(const Curve& c, const ComplexPoint& x);

}  // namespace loewner
