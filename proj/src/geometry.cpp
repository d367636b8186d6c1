#include "cupcap/geometry.hpp"

#include "cupcap/errors.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <string>

namespace cupcap {

std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << "(" << p.x << ", " << p.y << ")";
}

namespace {

int sign_of(const BigInt& v) { return v.sign(); }

// Sign of (b - a) * (d - c) for rationals, fraction-free.
// (b - a) = (b.num*a.den - a.num*b.den) / (a.den*b.den), denominators positive.
struct Diff {
    BigInt num;
    BigInt den;
};

Diff diff(const Scalar& b, const Scalar& a) {
    if (a.den() == 1 && b.den() == 1) return {b.num() - a.num(), BigInt(1)};
    return {b.num() * a.den() - a.num() * b.den(), a.den() * b.den()};
}

// Sign of d1/e1 * d2/e2 - d3/e3 * d4/e4 with all e's positive.
int cross_of_diffs(const Diff& a, const Diff& b, const Diff& c, const Diff& d) {
    if (a.den == 1 && b.den == 1 && c.den == 1 && d.den == 1)
        return sign_of(a.num * b.num - c.num * d.num);
    return sign_of(a.num * b.num * c.den * d.den - c.num * d.num * a.den * b.den);
}

} // namespace

int orientation_sign(const Point& p, const Point& q, const Point& r) {
    return cross_of_diffs(diff(q.x, p.x), diff(r.y, p.y), diff(q.y, p.y), diff(r.x, p.x));
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    int s = orientation_sign(p, q, r);
    if (s > 0) return Orientation::Left;
    if (s < 0) return Orientation::Right;
    return Orientation::Collinear;
}

int cross_sign(const Scalar& ux, const Scalar& uy, const Scalar& vx, const Scalar& vy) {
    if (ux.den() == 1 && uy.den() == 1 && vx.den() == 1 && vy.den() == 1)
        return sign_of(ux.num() * vy.num() - uy.num() * vx.num());
    return sign_of(ux.num() * vy.num() * uy.den() * vx.den() -
                   uy.num() * vx.num() * ux.den() * vy.den());
}

bool angle_less(const Point& s, const Point& a, const Point& b) {
    if (a == s || b == s) throw Error(ErrorCode::ContractViolation, "angle_less: point equals s");
    if (a == b) throw Error(ErrorCode::ContractViolation, "angle_less: a equals b");
    if (a.x == s.x || b.x == s.x)
        throw Error(ErrorCode::ContractViolation, "angle_less: point vertically aligned with s");
    // Reflect left-side points through s; both angle conventions then
    // reduce to counterclockwise order from the downward ray within the
    // open right half-plane, which a single cross product decides.
    Scalar wax = a.x - s.x, way = a.y - s.y;
    if (wax.sign() < 0) { wax = -wax; way = -way; }
    Scalar wbx = b.x - s.x, wby = b.y - s.y;
    if (wbx.sign() < 0) { wbx = -wbx; wby = -wby; }
    int c = cross_sign(wax, way, wbx, wby);
    if (c == 0)
        throw Error(ErrorCode::CollinearThroughS, "a, s, b are collinear");
    return c > 0;
}

PointSet PointSet::validate(std::vector<Point> points) {
    const std::size_t n = points.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return points[i] < points[j];
    });

    for (std::size_t k = 0; k + 1 < n; ++k) {
        const Point& a = points[order[k]];
        const Point& b = points[order[k + 1]];
        if (a == b)
            throw ValidationError(ErrorCode::DuplicatePoint,
                                  "points " + std::to_string(order[k]) + " and " +
                                      std::to_string(order[k + 1]) + " coincide",
                                  order[k], order[k + 1]);
        if (a.x == b.x)
            throw ValidationError(ErrorCode::VerticalPair,
                                  "points " + std::to_string(order[k]) + " and " +
                                      std::to_string(order[k + 1]) + " share an x-coordinate",
                                  order[k], order[k + 1]);
    }

    // A collinear triple sorted by x has its two right points at equal
    // slope from the left one, so anchored slope sorting finds them all.
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const Point& anchor = points[order[k]];
        std::vector<std::pair<Scalar, std::size_t>> slopes;
        slopes.reserve(n - k - 1);
        for (std::size_t j = k + 1; j < n; ++j) {
            const Point& p = points[order[j]];
            slopes.emplace_back((p.y - anchor.y) / (p.x - anchor.x), order[j]);
        }
        std::sort(slopes.begin(), slopes.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
        for (std::size_t j = 0; j + 1 < slopes.size(); ++j) {
            if (slopes[j].first == slopes[j + 1].first)
                throw ValidationError(ErrorCode::CollinearTriple,
                                      "points " + std::to_string(order[k]) + ", " +
                                          std::to_string(slopes[j].second) + ", " +
                                          std::to_string(slopes[j + 1].second) + " are collinear",
                                      order[k], slopes[j].second, slopes[j + 1].second);
        }
    }

    std::vector<Point> sorted;
    sorted.reserve(n);
    for (std::size_t i : order) sorted.push_back(points[i]);
    return PointSet(std::move(sorted));
}

PointSet PointSet::from_sorted_trusted(std::vector<Point> points) {
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        assert(points[i].x < points[i + 1].x);
    return PointSet(std::move(points));
}

bool PointSet::contains(const Point& p) const { return index_of(p) != npos; }

std::size_t PointSet::index_of(const Point& p) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p,
                               [](const Point& a, const Point& b) { return a.x < b.x; });
    if (it != pts_.end() && *it == p) return static_cast<std::size_t>(it - pts_.begin());
    return npos;
}

PointSet PointSet::without(const Point& p) const {
    std::vector<Point> rest;
    rest.reserve(pts_.size());
    for (const Point& q : pts_)
        if (!(q == p)) rest.push_back(q);
    return PointSet(std::move(rest));
}

PointSet PointSet::filtered(const std::vector<bool>& keep) const {
    std::vector<Point> rest;
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (keep[i]) rest.push_back(pts_[i]);
    return PointSet(std::move(rest));
}

PointSet merge_validated(const PointSet& a, const PointSet& b) {
    if (!disjoint(a, b))
        throw Error(ErrorCode::ContractViolation, "merge_validated: sets overlap");
    std::vector<Point> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return PointSet::validate(std::move(all));
}

bool disjoint(const PointSet& a, const PointSet& b) {
    const PointSet& small = a.size() <= b.size() ? a : b;
    const PointSet& large = a.size() <= b.size() ? b : a;
    for (const Point& p : small)
        if (large.contains(p)) return false;
    return true;
}

} // namespace cupcap
