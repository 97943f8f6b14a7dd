#pragma once

#include "loewner/curve.hpp"

namespace loewner {

/// Hausdorff distance between the sampled point sets under cdist.
/// Disc-domain curves are transported to the half-plane first.
double hausdorff_distance(const Curve& c1, const Curve& c2);

/// Serial reference for the parallel kernel above.
double hausdorff_distance_serial(const Curve& c1, const Curve& c2);

/// Discrete Frechet distance between the sample sequences under cdist.
/// Reparametrization-invariant; an upper proxy for the uniform metric
/// with error at most one sample gap.
double uniform_distance(const Curve& c1, const Curve& c2);

namespace detail {
/// cdist images of a curve's samples in the disc.
std::vector<Complex> disc_samples(const Curve& c);
}

}  // namespace loewner
