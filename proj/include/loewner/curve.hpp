#pragma once

#include <string>
#include <vector>

#include "loewner/geometry.hpp"

namespace loewner {

enum class Domain { HalfPlane, Disc };

/// Polyline approximation of a continuous curve: sample points with a
/// strictly increasing parameter sequence spanning [0, 1].  Repeated
/// consecutive points are dropped on construction.
struct Curve {
    std::vector<ComplexPoint> points;
    std::vector<double> params;
    Domain domain = Domain::HalfPlane;

    Curve() = default;
    Curve(std::vector<ComplexPoint> pts, std::vector<double> t,
          Domain dom = Domain::HalfPlane);

    /// Equally spaced parameters for a plain vertex list.
    static Curve from_points(std::vector<ComplexPoint> pts,
                             Domain dom = Domain::HalfPlane);

    std::size_t size() const { return points.size(); }
    const ComplexPoint& front() const { return points.front(); }
    const ComplexPoint& back() const { return points.back(); }

    /// Euclidean arclength, skipping segments that touch infinity.
    double arclength() const;

    /// Point at parameter t by linear interpolation.
    ComplexPoint at(double t) const;

    Curve mapped(const MobiusTransform& m, Domain dom) const;
};

Curve reverse(const Curve& c);

/// Concatenation; c1 must end where c2 starts (cdist <= 1e-9).  The
/// result spends parameter [0, 1/2] on c1 and [1/2, 1] on c2.
Curve concat(const Curve& c1, const Curve& c2);

/// Resample at n points equally spaced in arclength.
Curve resample(const Curve& c, std::size_t n);

/// Minimum distance between non-adjacent segments; > 0 means the
/// polyline is simple at its own resolution.
double self_distance(const Curve& c);

void write_curve_csv(const Curve& c, const std::string& path);
Curve read_curve_csv(const std::string& path);
std::string curve_csv_string(const Curve& c);

/// FNV-1a hash of the CSV serialization, as a hex string.
std::string curve_hash(const Curve& c);

}  // namespace loewner
