#pragma once

#include "cupcap/geometry.hpp"

#include <cstdint>

namespace cupcap {

// An (m,l)-free set of exactly C(m+l-4, l-2) points: a long cup or cap in
// the base cases, otherwise two recursively built blocks with every
// cross-block slope exceeding every in-block slope. Self-checked with the
// longest-chain tables before returning. Requires 3 <= m, l <= 8.
PointSet cupcap_free(int m, int l);

// 2^(n-2) points whose largest convex-position subset has exactly n-1
// points, assembled from cup/cap-free blocks on a steep convex arc.
// Self-checked by the exact convex-subset table. Requires 4 <= n <= 7.
PointSet no_ngon(int n);

struct RandomSpec {
    std::size_t count = 0;
    long long coord_bound = 0; // coordinates drawn from [-bound, bound]^2
    std::uint64_t seed = 0;
};

// Integer-coordinate set by rejection sampling: duplicates, vertical
// pairs and collinear triples are rejected as candidates arrive. Throws
// Exhausted when the coordinate range cannot accommodate the count.
PointSet random_set(const RandomSpec& spec);

// Affine normalization helpers (positive axis scaling preserves cups,
// caps and general position).

// Translate and scale a set into the axis-aligned box
// [x0, x0+w] x [y0, y0+h]; degenerate extents collapse to the box corner.
PointSet scale_into_box(const PointSet& s, const Scalar& x0, const Scalar& y0, const Scalar& w,
                        const Scalar& h);

// Largest |slope| over all point pairs (0 for fewer than 2 points).
Scalar max_abs_slope(const PointSet& s);

} // namespace cupcap
