#pragma once

#include "cupcap/chain.hpp"
#include "cupcap/convexify.hpp"
#include "cupcap/geometry.hpp"

#include <array>

namespace cupcap {

// Counterclockwise convex hull vertices of a validated set (|s| >= 3).
std::vector<Point> convex_hull(const PointSet& s);

// Anchor data for the projective transform: a hull vertex s, a point s'
// outside the hull such that no line spanned by two other set points
// meets the closed segment [s, s'], and a line through s' (ax+by+c = 0)
// that misses the hull entirely.
struct TransformSetup {
    Point s;
    Point s_prime;
    std::array<Scalar, 3> line_l; // a, b, c

    // Exact re-check of both invariants against the originating set.
    bool verify(const PointSet& set) const;
};

// s is the leftmost point (a hull vertex); s' sits a shrinking step along
// an exterior direction at s; the line through s' parallels the vertical
// supporting line at s. The step halves until the segment-avoidance
// invariant passes its exact check.
TransformSetup choose_transform(const PointSet& s);

// Exact 3x3 homogeneous map sending line_l to the line at infinity, the
// anchor s to the origin and the segment [s, s'] onto the downward
// vertical half-line from the origin. Carries its exact inverse.
class ProjectiveMap {
public:
    Point apply(const Point& p) const;
    Point apply_inverse(const Point& p) const;

    PointSet apply(const PointSet& s) const;

    const std::array<std::array<Scalar, 3>, 3>& matrix() const { return fwd_; }

private:
    friend ProjectiveMap build_map(const TransformSetup& setup);
    ProjectiveMap() = default;

    std::array<std::array<Scalar, 3>, 3> fwd_{};
    std::array<std::array<Scalar, 3>, 3> inv_{};
};

// Throws DegenerateSetup if the three defining lines are not independent
// (cannot happen for setups from choose_transform).
ProjectiveMap build_map(const TransformSetup& setup);

// Theorem-following search for an (n-1)-cap or convex n-gon in any set of
// at least f(n-1,n-1) + g(n,n-2) + 1 points, n >= 6. The witness label
// records which proof branch produced it. Throws BoundNotMet below the
// size threshold; InternalFailure marks a proof step that failed to apply
// and must never fire.
Witness find_cap_or_ngon(const PointSet& s, int n);

// Convex n-gon in any set of at least C(2n-5,n-2) - C(2n-8,n-3) + 2
// points (n >= 6): transform so caps extend by the anchor, run
// find_cap_or_ngon on the image, pull the witness back and re-validate in
// the original coordinates.
ConvexPolygon find_ngon(const PointSet& s, int n);

} // namespace cupcap
