#include "loewner/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace loewner {

DrivingFunction driving_from(const Curve& c, const ComplexPoint& x) {
    if (x.at_infinity) return unzip_chordal(c).driving;
    if (c.domain == Domain::HalfPlane && std::abs(x.im) < 1e-12) {
        // boundary observation point: chordal driving after x -> infinity
        MobiusTransform m = psi_boundary(x);
        return unzip_chordal(c.mapped(m, Domain::HalfPlane)).driving;
    }
    return unzip_radial_at(c, x).driving;
}

MetricReport driving_distance(const DrivingFunction& w1, const DrivingFunction& w2) {
    double shift = 0.0;
    if (w1.kind == Kind::Radial && w2.kind == Kind::Radial) {
        // align whole turns of the angle branch at the start point
        double twopi = 2.0 * std::numbers::pi;
        shift = twopi * std::round((w1.values.front() - w2.values.front()) / twopi);
    }
    double t_hi = std::max(w1.horizon(), w2.horizon());
    std::vector<double> grid;
    grid.reserve(w1.times.size() + w2.times.size());
    for (double t : w1.times)
        if (t <= t_hi) grid.push_back(t);
    for (double t : w2.times)
        if (t <= t_hi) grid.push_back(t);
    grid.push_back(t_hi);
    std::sort(grid.begin(), grid.end());
    double sup = 0.0;
    for (double t : grid)
        sup = std::max(sup, std::abs(w1.at(t) - w2.at(t) - shift));
    MetricReport r;
    r.dT = std::abs(w1.horizon() - w2.horizon());
    r.sup = sup;
    r.value = r.dT + r.sup;
    r.grid_size = grid.size();
    return r;
}

MetricReport d_cap_r(const Curve& c1, const Curve& c2, const ComplexPoint& x) {
    return driving_distance(driving_from(c1, x), driving_from(c2, x));
}

MetricReport d_cap_l(const Curve& c1, const Curve& c2, const ComplexPoint& x) {
    return d_cap_r(c1, c2, x);
}

namespace {

/// Chordal driving with respect to the curve's own terminal point.
DrivingFunction terminal_driving(const Curve& c) {
    const ComplexPoint& b = c.back();
    if (b.at_infinity) return unzip_chordal(c).driving;
    if (std::abs(b.im) > 1e-9)
        throw std::invalid_argument(
            "d_locally_uniform: curve must end on the boundary or at infinity");
    MobiusTransform m = psi_boundary(b);
    return unzip_chordal(c.mapped(m, Domain::HalfPlane)).driving;
}

double sup_on(const DrivingFunction& a, const DrivingFunction& b, double t_hi) {
    std::vector<double> grid;
    for (double t : a.times)
        if (t <= t_hi) grid.push_back(t);
    for (double t : b.times)
        if (t <= t_hi) grid.push_back(t);
    grid.push_back(t_hi);
    double sup = 0.0;
    for (double t : grid) sup = std::max(sup, std::abs(a.at(t) - b.at(t)));
    return sup;
}

}  // namespace

double d_locally_uniform(const Curve& c1, const Curve& c2, Direction dir,
                         double tau, int N, bool* warn) {
    Curve a = dir == Direction::Backward ? reverse(c1) : c1;
    Curve b = dir == Direction::Backward ? reverse(c2) : c2;
    DrivingFunction w1 = terminal_driving(a);
    DrivingFunction w2 = terminal_driving(b);
    double shared = std::min(w1.horizon(), w2.horizon());
    int n_full = std::min(N, int(std::floor(shared / tau)));
    if (warn) *warn = false;
    if (n_full < 1) {
        if (warn) *warn = true;
        return std::min(1.0, sup_on(w1, w2, shared)) * 0.5;
    }
    double total = 0.0;
    for (int n = 1; n <= n_full; ++n)
        total += std::pow(2.0, -n) * std::min(1.0, sup_on(w1, w2, n * tau));
    return total;
}

}  // namespace loewner
