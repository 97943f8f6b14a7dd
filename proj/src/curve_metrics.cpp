#include "loewner/curve_metrics.hpp"

#include <algorithm>

namespace loewner {

namespace detail {

std::vector<Complex> disc_samples(const Curve& c) {
    std::vector<Complex> out;
    out.reserve(c.size());
    for (const auto& p : c.points) {
        if (c.domain == Domain::Disc)
            out.push_back(p.finite() ? p.value() : Complex(1, 0));
        else
            out.push_back(cayley(p));
    }
    return out;
}

}  // namespace detail

namespace {

double directed_max_min(const std::vector<Complex>& a, const std::vector<Complex>& b,
                        bool parallel) {
    double worst = 0.0;
    long long n = (long long)a.size();
#pragma omp parallel for reduction(max : worst) if (parallel) schedule(static)
    for (long long i = 0; i < n; ++i) {
        double best = 1e300;
        for (const Complex& q : b) best = std::min(best, std::abs(a[i] - q));
        worst = std::max(worst, best);
    }
    return worst;
}

double hausdorff_impl(const Curve& c1, const Curve& c2, bool parallel) {
    auto a = detail::disc_samples(c1);
    auto b = detail::disc_samples(c2);
    return std::max(directed_max_min(a, b, parallel), directed_max_min(b, a, parallel));
}

}  // namespace

double hausdorff_distance(const Curve& c1, const Curve& c2) {
    return hausdorff_impl(c1, c2, true);
}

double hausdorff_distance_serial(const Curve& c1, const Curve& c2) {
    return hausdorff_impl(c1, c2, false);
}

double uniform_distance(const Curve& c1, const Curve& c2) {
    auto a = detail::disc_samples(c1);
    auto b = detail::disc_samples(c2);
    std::size_t n = a.size(), m = b.size();
    std::vector<double> prev(m), cur(m);
    for (std::size_t j = 0; j < m; ++j) {
        double d = std::abs(a[0] - b[j]);
        prev[j] = j == 0 ? d : std::max(prev[j - 1], d);
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double d = std::abs(a[i] - b[j]);
            double reach;
            if (j == 0)
                reach = prev[0];
            else
                reach = std::min({prev[j - 1], prev[j], cur[j - 1]});
            cur[j] = std::max(reach, d);
        }
        std::swap(prev, cur);
    }
    return prev[m - 1];
}

}  // namespace loewner
