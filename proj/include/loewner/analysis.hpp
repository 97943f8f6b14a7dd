#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "loewner/curve.hpp"
#include "loewner/loewner.hpp"

namespace loewner {

/// Probability that Brownian motion from x is stopped on the part of
/// the curve consumed during capacity time (s, t], read off the weld
/// records of unzip_radial_at: harmonic measure from the center of the
/// disc is arc length / 2pi.  If x is cut off before the end of the
/// curve the fillings are frozen at the cutting time.
double hitting_prob_conformal(const Curve& c, const ComplexPoint& x, double s,
                              double t);

/// Monte Carlo estimate of the same quantity by walk on spheres:
/// isotropic jumps of half the distance to the barrier c union R,
/// absorption within step/10 of the barrier, each hit attributed to
/// the capacity time (with respect to z) of the nearest curve sample.
/// Hits on R
/// are attributed time -1, so [s, t] intervals with s <= -1 measure
/// the real line.  Deterministic per seed; walkers run in parallel
/// unless parallel is false (the serial path is kept as a reference).
double hitting_prob_mc(const Curve& c, const ComplexPoint& z, double s, double t,
                       std::size_t walkers, double step,
                       std::uint64_t seed = 0, bool parallel = true);

/// Probability that Brownian motion from z hits the left boundary of
/// the curve: the normalized harmonic measure from the image of z of
/// the arc running counterclockwise from the image of ref_p (or from
/// the left endpoint of the consumed arc when ref_p is absent) to the
/// terminal driving angle.
double alpha_left(const Curve& c, const ComplexPoint& x, const ComplexPoint& z,
                  const std::optional<ComplexPoint>& ref_p = {});

/// Caratheodory discrepancy of two driving functions: both chains are
/// grown on a shared uniform grid of n_steps cells over [0, t], grid^2
/// lattice points at least eps away (in cdist) from the second trace
/// are tracked through both flows, and the sup of the image distance
/// over all prefix times and tracked points is returned.  Drivings
/// must share their kind; radial chains act on the disc of the
/// observation frame of x, in which both drivings are assumed to be
/// expressed (the computation itself is frame-canonical).
double caratheodory_sup(const DrivingFunction& w1, const DrivingFunction& w2,
                        const std::optional<ComplexPoint>& x, double t,
                        double eps, std::size_t grid, std::size_t n_steps = 200);

/// Resolution-relative check of time-separation: samples of the two
/// halves of the curve split at capacity time t that lie within eps
/// (cdist) of the opposite half are linked when within 2 eps of each
/// other, and the largest component diameter is returned.  Near zero
/// is consistent with gamma[0,t] and gamma[t, end] sharing no
/// continuum at resolution eps.
double time_separation_diag(const Curve& c, double t, double eps);

/// Harmonic parametrization s(t) = sum a(x) s_x(t): for each x the
/// fraction of the interior weld measure (arcs whose source samples
/// are off the domain boundary) consumed by curve time t.  t is in
/// the curve's own parameter.  An x cut off at time 0 contributes 0.
double harmonic_param_s(const Curve& c,
                        const std::vector<std::pair<ComplexPoint, double>>& x_weights,
                        double t);

/// Two-sample Kolmogorov-Smirnov statistic with the asymptotic
/// p-value approximation.
struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace loewner
