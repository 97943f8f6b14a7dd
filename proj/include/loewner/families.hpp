#pragma once

#include <cstddef>

#include "loewner/curve.hpp"

namespace loewner {

enum class ThreeSegmentVariant { Plain, Doubled };
enum class FigureEightVariant { A, B };
enum class LimitDirection { Forward, Backward };

/// Zigzag ladder 0, z_1, w_1, z_2, w_2, ... with z_n = (-1)^n + in and
/// w_n = in/2, scaled by 2^{-j} and truncated at a fixed height, so
/// the family flattens onto the imaginary axis as j grows.
Curve gen_ladder(std::size_t j, double height = 2.0);

/// The straight segment the ladder family approaches, matched to the
/// same truncation height.
Curve gen_ladder_target(std::size_t j, double height = 2.0);

/// Disc-domain curve with corners near -1, i, -i, 1.  Plain traces the
/// middle segment once; Doubled traces it three times (down, up, down)
/// in staggered lanes of width 2^{-j}.
Curve gen_three_segment(std::size_t j, ThreeSegmentVariant variant);

/// The terminal-driving limit of the doubled family: the plain trace
/// with the middle segment stopping a tiny separation short of the
/// circle.
Curve gen_three_segment_target(std::size_t j_sep = 9);

/// Clockwise loop decorations at the dyadic parameters of the base
/// curve, radius loop_scale * 4^{-k} at level k <= depth, with the
/// base's time on each dyadic interval divided in thirds.
Curve gen_dyadic_loops(std::size_t depth, const Curve& base, double loop_scale);

/// Thin-slot curve from -1 to 1: up the left side of a slot of half
/// width 2^{-j} around [0, 3i], across the top, down the right side,
/// with outward loop decorations and j interlocking hairpin hooks
/// reaching deep into the slot.
Curve gen_hooks(std::size_t j);

/// The d_cap limit of the hooks family: the decorated slot boundary at
/// a tiny separation, without hooks.
Curve gen_hooks_limit(std::size_t j_sep = 9);

/// Two-room pocket curve: the walls of eta_1 eta_2 seal two rooms; one
/// loop is traced in each room.  Variant A traces the left room's loop
/// first, variant B the right room's.  Offsets scale like 2^{-j}.
Curve gen_figure_eight(std::size_t j, FigureEightVariant variant);

/// Directional driving-limit proxies at a viewpoint inside the right
/// room: Forward is the curve eta_1 eta_2 eta_4 (right loop closed,
/// left loop skipped), Backward is eta_6^- eta_5^- eta_4^-.
Curve gen_figure_eight_limit(LimitDirection dir, std::size_t j = 7);

/// A viewpoint inside the right room's loop, valid for every index.
ComplexPoint figure_eight_viewpoint();

/// Closed half-strip curve 0, z_1, w_1, ..., z_{k-1}, w_{k-1}, z_k
/// with z_n = (-1)^n + in and w_n = i(1 - 2^{-n}).
Curve gen_half_strip(std::size_t k);

enum class SourceDomain { HalfPlane, Disc, HalfStrip };

/// Conformal transport to the canonical frame: half-plane with the
/// curve's endpoints a, b sent to -1, 1.
Curve transport_to_canonical(const Curve& c, SourceDomain domain,
                             const ComplexPoint& a, const ComplexPoint& b);

/// Smooth perturbations of the unit semicircle from -1 to 1 with
/// amplitude 2^{-j}; the positive-direction test family.
Curve gen_smooth_family(std::size_t j, std::size_t samples = 600);
Curve gen_smooth_target(std::size_t samples = 600);

/// Interpolate extra samples so that no segment exceeds max_len.
Curve densify(const Curve& c, double max_len);

}  // namespace loewner
