#pragma once

#include <cstddef>

#include "loewner/curve.hpp"
#include "loewner/loewner.hpp"

namespace loewner {

/// Value of a capacity metric together with its two components:
/// value = dT + sup exactly.
struct MetricReport {
    double value = 0.0;
    double dT = 0.0;       // |T1 - T2|
    double sup = 0.0;      // sup-norm of the driving difference
    std::size_t grid_size = 0;
};

/// Driving function of c with respect to x: radial for interior x,
/// chordal (after sending x to infinity) for boundary x or infinity.
DrivingFunction driving_from(const Curve& c, const ComplexPoint& x);

/// |T1 - T2| + sup over the merged grid of the driving difference,
/// each driving frozen at its terminal value past its own horizon.
/// Radial angle branches are aligned by whole turns at t = 0.
MetricReport d_cap_r(const Curve& c1, const Curve& c2, const ComplexPoint& x);

/// The left-to-right variant: callers pass the reversed curves.
MetricReport d_cap_l(const Curve& c1, const Curve& c2, const ComplexPoint& x);

enum class Direction { Forward, Backward };

/// Locally-uniform driving metric with respect to the terminal point:
/// sum over n <= N of 2^{-n} min(1, sup_{[0, n tau]} |W1 - W2|), with
/// n limited to horizons both curves reach.  If not even one horizon
/// unit is covered, falls back to the sup over the shared range and
/// sets *warn.
double d_locally_uniform(const Curve& c1, const Curve& c2, Direction dir,
                         double tau = 0.25, int N = 8, bool* warn = nullptr);

/// Sup-distance between two driving functions in the d_cap sense
/// (terminal-value extension, branch alignment for radial kinds).
MetricReport driving_distance(const DrivingFunction& w1, const DrivingFunction& w2);

}  // namespace loewner
