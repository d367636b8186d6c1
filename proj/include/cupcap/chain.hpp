#pragma once

#include "cupcap/geometry.hpp"

#include <cstddef>
#include <vector>

namespace cupcap {

enum class ChainKind { Cup, Cap };

const char* chain_kind_name(ChainKind kind);

// An x-sorted point sequence with strictly monotone consecutive slopes:
// increasing for a cup, decreasing for a cap. Equivalently every
// consecutive triple turns Left (cup) or Right (cap). A proper chain has
// at least 3 points; shorter maximal sequences are carried as flagged
// degenerate chains so recursive callers can shrink sets freely.
class Chain {
public:
    // Throws TooShort / NotXSorted / NotMonotone(triple index).
    static Chain validate(ChainKind kind, std::vector<Point> pts);

    // Length < 3, no slope condition to check; flagged.
    static Chain degenerate(ChainKind kind, std::vector<Point> pts);

    ChainKind kind() const { return kind_; }
    bool is_degenerate() const { return degenerate_; }
    std::size_t size() const { return pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    const Point& front() const { return pts_.front(); }
    const Point& back() const { return pts_.back(); }

    // First k points; a subsequence of a valid chain is a valid chain.
    Chain prefix(std::size_t k) const;

private:
    Chain(ChainKind kind, std::vector<Point> pts, bool degenerate)
        : kind_(kind), pts_(std::move(pts)), degenerate_(degenerate) {}

    ChainKind kind_;
    std::vector<Point> pts_;
    bool degenerate_;
};

// True iff every point of pts is a vertex of the set's convex hull.
// Expects points from a validated set (distinct x, no collinear triple).
bool is_convex_position(std::vector<Point> pts);

// Points in convex position, stored in counterclockwise order starting
// at the leftmost vertex (lower chain first).
class ConvexPolygon {
public:
    // Accepts the vertex set in any order; throws ContractViolation if
    // the points are not in convex position or contain duplicates.
    static ConvexPolygon make(std::vector<Point> pts);

    std::size_t size() const { return pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }
    const Point& operator[](std::size_t i) const { return pts_[i]; }

private:
    explicit ConvexPolygon(std::vector<Point> pts) : pts_(std::move(pts)) {}

    std::vector<Point> pts_;
};

// Maximum-length chain of the requested kind, by dynamic programming
// over x-sorted pairs. Among equal-length optima returns the
// lexicographically smallest point-index sequence. Degenerate (flagged)
// result when no 3-point chain of the kind exists.
Chain longest_chain(const PointSet& s, ChainKind kind);

// Maximum-cardinality subset in convex position (|s| >= 3), via the
// cup/cap composition over all leftmost/rightmost vertex pairs.
ConvexPolygon largest_convex_subset(const PointSet& s);

enum class OracleQuery { LongestCup, LongestCap, LargestConvex };

// Exact optimum by exhaustive enumeration; |s| <= 15 or throws TooLarge.
std::size_t brute_oracle(const PointSet& s, OracleQuery query);

} // namespace cupcap
