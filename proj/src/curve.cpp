#include "loewner/curve.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace loewner {

namespace {

double seg_point_dist2(Complex a, Complex b, Complex p) {
    Complex ab = b - a;
    double len2 = std::norm(ab);
    if (len2 < 1e-30) return std::norm(p - a);
    double t = std::clamp(
        ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2,
        0.0, 1.0);
    Complex q = a + t * ab;
    return std::norm(p - q);
}

double seg_seg_dist(Complex a, Complex b, Complex c, Complex d) {
    // Segments either intersect or realize their distance at an endpoint.
    auto orient = [](Complex p, Complex q, Complex r) {
        return (q.real() - p.real()) * (r.imag() - p.imag()) -
               (q.imag() - p.imag()) * (r.real() - p.real());
    };
    double o1 = orient(a, b, c), o2 = orient(a, b, d);
    double o3 = orient(c, d, a), o4 = orient(c, d, b);
    // The sign test is only reliable for clearly transversal pairs;
    // near-collinear points produce sign noise (distant segments on one
    // line would be reported as crossing). Degenerate cases fall
    // through to the endpoint distances, which are exact for them.
    double eps = 1e-12 * (std::abs(b - a) + std::abs(d - c)) *
                 (std::abs(c - a) + std::abs(d - a));
    if (((o1 > eps && o2 < -eps) || (o1 < -eps && o2 > eps)) &&
        ((o3 > eps && o4 < -eps) || (o3 < -eps && o4 > eps)))
        return 0.0;
    double m = seg_point_dist2(a, b, c);
    m = std::min(m, seg_point_dist2(a, b, d));
    m = std::min(m, seg_point_dist2(c, d, a));
    m = std::min(m, seg_point_dist2(c, d, b));
    return std::sqrt(m);
}

}  // namespace

Curve::Curve(std::vector<ComplexPoint> pts, std::vector<double> t, Domain dom)
    : domain(dom) {
    if (pts.size() != t.size())
        throw std::invalid_argument("Curve: points/params length mismatch");
    if (pts.size() < 2) throw std::invalid_argument("Curve: need at least 2 points");
    points.reserve(pts.size());
    params.reserve(t.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!points.empty()) {
            if (t[i] <= params.back())
                throw std::invalid_argument("Curve: params not strictly increasing");
            bool same = points.back().at_infinity == pts[i].at_infinity &&
                        (pts[i].at_infinity ||
                         std::abs(points.back().value() - pts[i].value()) < 1e-15);
            if (same && i + 1 < pts.size()) continue;  // dedupe
            if (same) {
                // terminal duplicate: keep the last parameter
                params.back() = t[i];
                continue;
            }
        }
        points.push_back(pts[i]);
        params.push_back(t[i]);
    }
    if (points.size() < 2) throw std::invalid_argument("Curve: locally constant");
    // normalize parameter range to [0, 1]
    double t0 = params.front(), t1 = params.back();
    if (t1 - t0 < 1e-15) throw std::invalid_argument("Curve: empty parameter range");
    for (double& x : params) x = (x - t0) / (t1 - t0);
    params.front() = 0.0;
    params.back() = 1.0;
}

Curve Curve::from_points(std::vector<ComplexPoint> pts, Domain dom) {
    std::vector<double> t(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) t[i] = double(i);
    return Curve(std::move(pts), std::move(t), dom);
}

double Curve::arclength() const {
    double s = 0;
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i - 1].finite() && points[i].finite())
            s += std::abs(points[i].value() - points[i - 1].value());
    return s;
}

ComplexPoint Curve::at(double t) const {
    if (t <= 0) return points.front();
    if (t >= 1) return points.back();
    auto it = std::upper_bound(params.begin(), params.end(), t);
    std::size_t i = std::size_t(it - params.begin());
    if (i == 0) return points.front();
    if (i >= points.size()) return points.back();
    double a = params[i - 1], b = params[i];
    double u = (t - a) / (b - a);
    if (!points[i - 1].finite() || !points[i].finite())
        return u < 0.5 ? points[i - 1] : points[i];
    return ComplexPoint(points[i - 1].value() * (1 - u) + points[i].value() * u);
}

Curve Curve::mapped(const MobiusTransform& m, Domain dom) const {
    std::vector<ComplexPoint> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(m.apply(p));
    return Curve(std::move(pts), params, dom);
}

Curve reverse(const Curve& c) {
    std::vector<ComplexPoint> pts(c.points.rbegin(), c.points.rend());
    std::vector<double> t(c.params.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = 1.0 - c.params[c.params.size() - 1 - i];
    return Curve(std::move(pts), std::move(t), c.domain);
}

Curve concat(const Curve& c1, const Curve& c2) {
    if (c1.domain != c2.domain)
        throw std::invalid_argument("concat: domain mismatch");
    if (cdist(c1.back(), c2.front()) > 1e-9)
        throw std::invalid_argument("concat: endpoint mismatch");
    std::vector<ComplexPoint> pts = c1.points;
    std::vector<double> t;
    t.reserve(c1.size() + c2.size() - 1);
    for (double x : c1.params) t.push_back(0.5 * x);
    for (std::size_t i = 1; i < c2.size(); ++i) {
        pts.push_back(c2.points[i]);
        t.push_back(0.5 + 0.5 * c2.params[i]);
    }
    return Curve(std::move(pts), std::move(t), c1.domain);
}

Curve resample(const Curve& c, std::size_t n) {
    if (n < 2) throw std::invalid_argument("resample: n >= 2 required");
    for (const auto& p : c.points)
        if (!p.finite())
            throw std::invalid_argument("resample: curve through infinity");
    double total = c.arclength();
    std::vector<double> cum(c.size(), 0.0);
    for (std::size_t i = 1; i < c.size(); ++i)
        cum[i] = cum[i - 1] + std::abs(c.points[i].value() - c.points[i - 1].value());
    std::vector<ComplexPoint> pts;
    std::vector<double> t;
    pts.reserve(n);
    t.reserve(n);
    std::size_t seg = 1;
    for (std::size_t k = 0; k < n; ++k) {
        double s = total * double(k) / double(n - 1);
        while (seg + 1 < c.size() && cum[seg] < s) ++seg;
        double s0 = cum[seg - 1], s1 = cum[seg];
        double u = s1 > s0 ? std::clamp((s - s0) / (s1 - s0), 0.0, 1.0) : 0.0;
        Complex p = c.points[seg - 1].value() * (1 - u) + c.points[seg].value() * u;
        double tp = c.params[seg - 1] * (1 - u) + c.params[seg] * u;
        pts.emplace_back(p);
        t.push_back(k == 0 ? 0.0 : std::max(tp, t.back() + 1e-12));
    }
    t.back() = std::max(t.back(), 1.0);
    return Curve(std::move(pts), std::move(t), c.domain);
}

double self_distance(const Curve& c) {
    double best = 1e300;
    long long n = (long long)c.size();
#pragma omp parallel for reduction(min : best) schedule(dynamic, 16)
    for (long long i = 0; i < n - 3; ++i) {
        if (!c.points[i].finite() || !c.points[i + 1].finite()) continue;
        for (long long j = i + 2; j < n - 1; ++j) {
            if (!c.points[j].finite() || !c.points[j + 1].finite()) continue;
            double d = seg_seg_dist(c.points[i].value(), c.points[i + 1].value(),
                                    c.points[j].value(), c.points[j + 1].value());
            best = std::min(best, d);
        }
    }
    return best == 1e300 ? 0.0 : best;
}

std::string curve_csv_string(const Curve& c) {
    std::ostringstream os;
    os.precision(17);
    os << "t,re,im\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.points[i].at_infinity)
            os << c.params[i] << ",inf\n";
        else
            os << c.params[i] << "," << c.points[i].re << "," << c.points[i].im << "\n";
    }
    return os.str();
}

void write_curve_csv(const Curve& c, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << curve_csv_string(c);
}

Curve read_curve_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::getline(f, line);  // header
    std::vector<ComplexPoint> pts;
    std::vector<double> t;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string a, b, c2;
        std::getline(is, a, ',');
        std::getline(is, b, ',');
        if (b == "inf") {
            pts.push_back(ComplexPoint::infinity());
            t.push_back(std::stod(a));
            continue;
        }
        std::getline(is, c2, ',');
        pts.emplace_back(std::stod(b), std::stod(c2));
        t.push_back(std::stod(a));
    }
    return Curve(std::move(pts), std::move(t));
}

std::string curve_hash(const Curve& c) {
    std::string s = curve_csv_string(c);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace loewner
