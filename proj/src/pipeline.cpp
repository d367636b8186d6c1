#include "cupcap/pipeline.hpp"

#include "cupcap/bounds.hpp"
#include "cupcap/errors.hpp"
#include "cupcap/partition.hpp"

#include <algorithm>
#include <string>

namespace cupcap {

std::vector<Point> convex_hull(const PointSet& s) {
    if (s.size() < 3) throw Error(ErrorCode::TooSmall, "convex_hull needs at least 3 points");
    auto build = [](auto begin, auto end) {
        std::vector<Point> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orientation(chain[chain.size() - 2], chain.back(), *it) != Orientation::Left)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Point> lower = build(s.begin(), s.end());
    std::vector<Point> upper = build(s.points().rbegin(), s.points().rend());
    lower.insert(lower.end(), upper.begin() + 1, upper.end() - 1);
    return lower;
}

bool TransformSetup::verify(const PointSet& set) const {
    // No spanned line of set minus s may touch the closed segment [s, s'].
    std::vector<Point> rest;
    for (const Point& p : set)
        if (!(p == s)) rest.push_back(p);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            int at_s = orientation_sign(rest[i], rest[j], s);
            int at_sp = orientation_sign(rest[i], rest[j], s_prime);
            if (at_s == 0 || at_sp == 0 || at_s != at_sp) return false;
        }
    }
    // line_l strictly misses the hull: one strict sign for every point.
    int want = 0;
    for (const Point& p : set) {
        Scalar v = line_l[0] * p.x + line_l[1] * p.y + line_l[2];
        int sg = v.sign();
        if (sg == 0) return false;
        if (want == 0) want = sg;
        if (sg != want) return false;
    }
    return true;
}

TransformSetup choose_transform(const PointSet& set) {
    if (set.size() < 3) throw Error(ErrorCode::TooSmall, "choose_transform needs >= 3 points");
    const Point s = set.leftmost(); // a hull vertex, lexicographically least
    std::vector<Point> hull = convex_hull(set);
    // Hull starts at the leftmost point; its two neighbors bound the
    // wedge containing the whole set.
    const Point& u = hull[1];
    const Point& w = hull.back();

    auto l1_normalized = [&](const Point& q, Scalar& ox, Scalar& oy) {
        Scalar dx = q.x - s.x, dy = q.y - s.y;
        Scalar norm = dx.abs() + dy.abs();
        ox = dx / norm;
        oy = dy / norm;
    };
    Scalar e1x, e1y, e2x, e2y;
    l1_normalized(u, e1x, e1y);
    l1_normalized(w, e2x, e2y);
    // Exterior direction: against the (L1-weighted) bisector of the hull
    // wedge at s. Points strictly left of s are outside for any step.
    Scalar dx = -(e1x + e2x);
    Scalar dy = -(e1y + e2y);

    Scalar eps(1);
    for (int attempt = 0; attempt < 256; ++attempt, eps = eps / Scalar(2)) {
        TransformSetup setup;
        setup.s = s;
        setup.s_prime = {s.x + eps * dx, s.y + eps * dy};
        // Vertical line through s': parallel to the supporting line at the
        // leftmost vertex, strictly left of every point.
        setup.line_l = {Scalar(1), Scalar(0), -setup.s_prime.x};
        if (setup.verify(set)) return setup;
    }
    throw Error(ErrorCode::InternalFailure, "segment shrinking did not stabilize");
}

namespace {

Scalar row_apply(const std::array<Scalar, 3>& row, const Point& p) {
    return row[0] * p.x + row[1] * p.y + row[2];
}

Point map_apply(const std::array<std::array<Scalar, 3>, 3>& m, const Point& p) {
    Scalar wx = row_apply(m[0], p);
    Scalar wy = row_apply(m[1], p);
    Scalar ww = row_apply(m[2], p);
    if (ww.is_zero())
        throw Error(ErrorCode::ContractViolation, "point lies on the vanishing line");
    return {wx / ww, wy / ww};
}

} // namespace

Point ProjectiveMap::apply(const Point& p) const { return map_apply(fwd_, p); }
Point ProjectiveMap::apply_inverse(const Point& p) const { return map_apply(inv_, p); }

PointSet ProjectiveMap::apply(const PointSet& s) const {
    std::vector<Point> out;
    out.reserve(s.size());
    for (const Point& p : s) out.push_back(apply(p));
    return PointSet::validate(std::move(out));
}

ProjectiveMap build_map(const TransformSetup& setup) {
    const Point& s = setup.s;
    const Point& sp = setup.s_prime;
    if (s == sp) throw Error(ErrorCode::DegenerateSetup, "anchor equals its offset point");

    Scalar ls = setup.line_l[0] * s.x + setup.line_l[1] * s.y + setup.line_l[2];
    if (ls.is_zero()) throw Error(ErrorCode::DegenerateSetup, "anchor lies on line_l");
    Scalar lsp = setup.line_l[0] * sp.x + setup.line_l[1] * sp.y + setup.line_l[2];
    if (!lsp.is_zero()) throw Error(ErrorCode::DegenerateSetup, "s' does not lie on line_l");

    // Third row: line_l, signed positive at s (and so on the whole set).
    std::array<Scalar, 3> lrow = setup.line_l;
    if (ls.sign() < 0)
        for (Scalar& v : lrow) v = -v;

    // First row: the line through s and s'; it vanishes on the segment,
    // pinning the image to the vertical line through the origin.
    Scalar vx = sp.x - s.x, vy = sp.y - s.y;
    std::array<Scalar, 3> urow = {-vy, vx, vy * s.x - vx * s.y};

    // Second row: parallel to line_l through s. On the segment
    // p_t = s + t(s'-s) this gives images (0, -t/(1-t)): the downward
    // vertical half-line, diverging as t approaches s'.
    std::array<Scalar, 3> vrow = {lrow[0], lrow[1], -(lrow[0] * s.x + lrow[1] * s.y)};

    ProjectiveMap map;
    map.fwd_ = {urow, vrow, lrow};

    const auto& m = map.fwd_;
    Scalar det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det.is_zero()) throw Error(ErrorCode::DegenerateSetup, "defining lines are dependent");

    // The adjugate is a projective inverse; homogeneous scale cancels.
    auto cof = [&](int r, int c) {
        int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) map.inv_[r][c] = cof(c, r);
    return map;
}

namespace {

Witness final_cap(Chain cap, const PointSet& s, int n, std::string label) {
    if (cap.kind() != ChainKind::Cap || cap.size() != static_cast<std::size_t>(n - 1))
        throw Error(ErrorCode::InternalFailure, "expected an (n-1)-cap at " + label);
    for (const Point& p : cap.points())
        if (!s.contains(p))
            throw Error(ErrorCode::InternalFailure, "cap witness leaves the set at " + label);
    return Witness::cap(std::move(cap), std::move(label));
}

Witness final_polygon(std::vector<Point> pts, const PointSet& s, int n, std::string label) {
    if (pts.size() != static_cast<std::size_t>(n))
        throw Error(ErrorCode::InternalFailure, "expected n points at " + label);
    for (const Point& p : pts)
        if (!s.contains(p))
            throw Error(ErrorCode::InternalFailure, "polygon witness leaves the set at " + label);
    ConvexPolygon poly = ConvexPolygon::make(std::move(pts));
    return Witness::polygon(std::move(poly), std::move(label));
}

} // namespace

Witness find_cap_or_ngon(const PointSet& s, int n) {
    if (n < 6) throw Error(ErrorCode::ContractViolation, "find_cap_or_ngon needs n >= 6");
    const BigInt f_diag = f_bound(n - 1, n - 1);
    const BigInt bound = f_diag + g_bound(n, n - 2) + 1;
    if (BigInt(s.size()) < bound)
        throw Error(ErrorCode::BoundNotMet,
                    "need at least " + bound.str() + " points, got " + std::to_string(s.size()));

    Partition part = ul_partition(s);
    const PointSet empty;

    if (BigInt(part.lower().size()) > f_diag) {
        Chain c = find_cup_or_cap(part.lower(), n - 1, n - 1);
        if (c.kind() == ChainKind::Cap) return final_cap(std::move(c), s, n, "lower-large:cap");
        Chain grown = extend_chain(part, empty, c);
        return final_polygon(grown.points(), s, n, "lower-large:cup-extended");
    }

    const PointSet& upper = part.upper();
    Chain cup_u = longest_chain(upper, ChainKind::Cup);
    if (!cup_u.is_degenerate() && cup_u.size() >= static_cast<std::size_t>(n))
        return final_polygon(cup_u.prefix(static_cast<std::size_t>(n)).points(), s, n,
                             "upper-not-free:cup");
    Chain cap_u = longest_chain(upper, ChainKind::Cap);
    if (!cap_u.is_degenerate() && cap_u.size() >= static_cast<std::size_t>(n - 2)) {
        Chain grown = extend_chain(part, empty, cap_u.prefix(static_cast<std::size_t>(n - 2)));
        return final_cap(std::move(grown), s, n, "upper-not-free:cap-extended");
    }

    // The upper part is (n, n-2)-free; peel off convexifying points until
    // the leftovers plus the lower part force an (n-1)-chain.
    const BigInt k_big = f_diag + 1 - BigInt(part.lower().size());
    const std::size_t k = static_cast<std::size_t>(k_big.convert_to<long long>());
    std::vector<std::pair<Point, Certificate>> extracted;
    PointSet working = upper;
    for (std::size_t i = 0; i < k; ++i) {
        Certificate cert = detail::find_certificate_trusted(working, n, n - 2);
        extracted.emplace_back(cert.point(), cert);
        working = working.without(cert.point());
    }

    std::vector<Point> gl;
    for (const auto& [p, cert] : extracted) gl.push_back(p);
    for (const Point& p : part.lower()) gl.push_back(p);
    std::sort(gl.begin(), gl.end());
    PointSet candidates = PointSet::from_sorted_trusted(std::move(gl));

    Chain c = find_cup_or_cap(candidates, n - 1, n - 1);
    if (c.kind() == ChainKind::Cap) return final_cap(std::move(c), s, n, "final:cap");

    auto cert_of = [&](const Point& p) -> const Certificate* {
        for (const auto& [q, cert] : extracted)
            if (q == p) return &cert;
        return nullptr;
    };

    if (part.is_lower(c.front())) {
        Chain grown = extend_chain(part, empty, c);
        return final_polygon(grown.points(), s, n, "final:cup-from-lower");
    }
    if (const Certificate* cert = cert_of(c.back())) {
        // The cup's right endpoint is a convexifying point: its cap grows
        // into S and the junction yields an n-cup or an (n-1)-cap.
        Chain cap_rec = cert->reconstruct_cap();
        Chain cap_s = extend_chain(part, empty, cap_rec);
        Chain joined = junction_extend(c, cap_s);
        if (joined.kind() == ChainKind::Cup)
            return final_polygon(joined.points(), s, n, "final:junction-cup");
        return final_cap(std::move(joined), s, n, "final:junction-cap");
    }

    const Certificate* cert = cert_of(c.front());
    if (cert == nullptr)
        throw Error(ErrorCode::InternalFailure, "cup endpoints match no branch of the analysis");
    std::vector<Point> outside;
    for (const Point& p : c.points())
        if (!cert->host().contains(p)) outside.push_back(p);
    PointSet b = PointSet::from_sorted_trusted(std::move(outside));
    Witness w = detail::resolve_trusted(*cert, b, c);
    switch (w.kind) {
    case Witness::Kind::Cup:
        return final_polygon(w.chain->points(), s, n, "final:resolve-cup(" + w.label + ")");
    case Witness::Kind::Polygon:
        return final_polygon(w.poly->points(), s, n, "final:resolve-polygon(" + w.label + ")");
    case Witness::Kind::Cap: {
        Chain grown = extend_chain(part, empty, *w.chain);
        return final_cap(std::move(grown), s, n, "final:resolve-cap-extended(" + w.label + ")");
    }
    }
    throw Error(ErrorCode::InternalFailure, "unreachable witness kind");
}

ConvexPolygon find_ngon(const PointSet& s, int n) {
    if (n < 6) throw Error(ErrorCode::ContractViolation, "find_ngon needs n >= 6");
    const BigInt bound = binomial(2 * n - 5, n - 2) - binomial(2 * n - 8, n - 3) + 2;
    if (BigInt(s.size()) < bound)
        throw Error(ErrorCode::BoundNotMet,
                    "need at least " + bound.str() + " points, got " + std::to_string(s.size()));

    TransformSetup setup = choose_transform(s);
    ProjectiveMap map = build_map(setup);

    std::vector<Point> image_pts;
    image_pts.reserve(s.size() - 1);
    for (const Point& p : s)
        if (!(p == setup.s)) image_pts.push_back(map.apply(p));
    PointSet image = [&] {
        try {
            return PointSet::validate(std::move(image_pts));
        } catch (const Error& e) {
            throw Error(ErrorCode::InternalFailure,
                        std::string("transformed set is invalid: ") + e.what());
        }
    }();

    Witness w = find_cap_or_ngon(image, n);

    std::vector<Point> original;
    if (w.kind == Witness::Kind::Polygon) {
        for (const Point& p : w.poly->points()) original.push_back(map.apply_inverse(p));
    } else {
        // A cap in the image extends to a convex n-gon by the anchor: no
        // spanned image line crosses the downward ray from the origin.
        for (const Point& p : w.chain->points()) original.push_back(map.apply_inverse(p));
        original.push_back(setup.s);
    }
    for (const Point& p : original)
        if (!s.contains(p))
            throw Error(ErrorCode::InternalFailure, "pulled-back witness leaves the input set");
    try {
        return ConvexPolygon::make(std::move(original));
    } catch (const Error& e) {
        throw Error(ErrorCode::InternalFailure,
                    std::string("pulled-back witness is not in convex position: ") + e.what());
    }
}

} // namespace cupcap
