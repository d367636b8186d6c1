#pragma once

#include "cupcap/chain.hpp"
#include "cupcap/geometry.hpp"

#include <cstdint>
#include <vector>

namespace cupcap {

// The upper/lower split of a point set: each point s is paired with its
// minimum-angle partner p_s (unique in general position); s is upper iff
// p_s lies strictly to its right. The leftmost point is always upper and
// the rightmost always lower, so the split is nontrivial for |S| >= 2.
class Partition {
public:
    const PointSet& source() const { return source_; }
    const PointSet& upper() const { return upper_; }
    const PointSet& lower() const { return lower_; }

    bool is_upper(const Point& p) const { return upper_.contains(p); }
    bool is_lower(const Point& p) const { return lower_.contains(p); }

    // Minimum-angle partner of p; p must be in the source set.
    const Point& nearest(const Point& p) const;

private:
    friend Partition ul_partition(const PointSet& s);

    PointSet source_;
    PointSet upper_;
    PointSet lower_;
    std::vector<Point> nearest_; // parallel to source_
};

// Throws TooSmall for |s| < 2.
Partition ul_partition(const PointSet& s);

// Count of observed failures of the stronger geometric claim behind the
// cap/cup extension step (all source points on the chain side of the
// line through the endpoint and its partner). The extension itself is
// always validated directly; this only records whether the claim ever
// failed on some instance.
std::uint64_t extension_claim_violations();

// Cap whose rightmost point is upper and second-rightmost in S: appends
// the rightmost point's partner (a lower point) on the right. Cup whose
// leftmost point is lower and second-leftmost in S: prepends the
// partner (an upper point) on the left. The chain must live in
// extra-union-S with extra disjoint from S. Throws PreconditionViolated
// naming the failed endpoint condition.
Chain extend_chain(const Partition& part, const PointSet& extra, const Chain& chain);

// cup's rightmost point must equal cap's leftmost. Returns the cup grown
// by the cap's second point when that point lies above the line through
// the cup's last two points, and otherwise the cap grown by the cup's
// second-to-last point on the left.
Chain junction_extend(const Chain& cup, const Chain& cap);

// Finds an m-cup or l-cap by recursive partitioning whenever
// |s| >= C(m+l-4, l-2) + 1. Below that bound falls back to the longest
// chain tables and throws NotFound if neither target length is present.
Chain find_cup_or_cap(const PointSet& s, int m, int l);

} // namespace cupcap
