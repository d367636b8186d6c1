#pragma once

#include "cupcap/scalar.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace cupcap {

struct Point {
    Scalar x;
    Scalar y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    // Lexicographic by (x, y).
    auto operator<=>(const Point& o) const {
        if (auto c = x <=> o.x; c != 0) return c;
        return y <=> o.y;
    }
};

std::ostream& operator<<(std::ostream& os, const Point& p);

enum class Orientation { Left, Right, Collinear };

// Sign of the cross product (q - p) x (r - p); Left is counterclockwise.
Orientation orientation(const Point& p, const Point& q, const Point& r);

// Signed version: +1 Left, -1 Right, 0 Collinear.
int orientation_sign(const Point& p, const Point& q, const Point& r);

// Sign of ux * vy - uy * vx for exact rational components.
int cross_sign(const Scalar& ux, const Scalar& uy, const Scalar& vx, const Scalar& vy);

// True iff the angle of a around s is strictly smaller than the angle
// of b around s, where points left of s measure against the upward
// vertical ray at s and points right of s against the downward one.
// Throws CollinearThroughS when a, s, b are collinear (the only tie).
bool angle_less(const Point& s, const Point& a, const Point& b);

// A finite planar point set, sorted by strictly increasing x-coordinate,
// with no two points on a vertical line and no three collinear.
class PointSet {
public:
    PointSet() = default;

    // Validates, sorts and adopts the given points. Throws ValidationError
    // (DuplicatePoint / VerticalPair / CollinearTriple) naming the
    // offending indices of the input sequence.
    static PointSet validate(std::vector<Point> points);

    // Adopts points that are already sorted by strictly increasing x and
    // known valid (e.g. a subset of a validated set). No checks beyond a
    // debug-level sortedness assert.
    static PointSet from_sorted_trusted(std::vector<Point> points);

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    const Point& leftmost() const { return pts_.front(); }
    const Point& rightmost() const { return pts_.back(); }

    bool contains(const Point& p) const;
    // Index of p, or npos.
    std::size_t index_of(const Point& p) const;

    PointSet without(const Point& p) const;
    PointSet filtered(const std::vector<bool>& keep) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {}

    std::vector<Point> pts_;
};

// Validates the union of two disjoint sets jointly (cross collinearity is
// not implied by the parts being valid). Throws on overlap or invalidity.
PointSet merge_validated(const PointSet& a, const PointSet& b);

bool disjoint(const PointSet& a, const PointSet& b);

} // namespace cupcap
