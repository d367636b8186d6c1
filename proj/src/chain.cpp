#include "cupcap/chain.hpp"

#include "cupcap/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace cupcap {

const char* chain_kind_name(ChainKind kind) { return kind == ChainKind::Cup ? "cup" : "cap"; }

namespace {

Orientation required_turn(ChainKind kind) {
    return kind == ChainKind::Cup ? Orientation::Left : Orientation::Right;
}

} // namespace

Chain Chain::validate(ChainKind kind, std::vector<Point> pts) {
    if (pts.size() < 3)
        throw ChainError(ErrorCode::TooShort, "chain needs at least 3 points, got " +
                                                  std::to_string(pts.size()));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!(pts[i].x < pts[i + 1].x))
            throw ChainError(ErrorCode::NotXSorted, "x-coordinates not strictly increasing at " +
                                                        std::to_string(i));
    const Orientation want = required_turn(kind);
    for (std::size_t i = 0; i + 2 < pts.size(); ++i)
        if (orientation(pts[i], pts[i + 1], pts[i + 2]) != want)
            throw ChainError(ErrorCode::NotMonotone,
                             std::string("triple ") + std::to_string(i) + " breaks the " +
                                 chain_kind_name(kind) + " slope condition",
                             i);
    return Chain(kind, std::move(pts), false);
}

Chain Chain::degenerate(ChainKind kind, std::vector<Point> pts) {
    if (pts.size() >= 3)
        throw Error(ErrorCode::ContractViolation, "degenerate chain must have < 3 points");
    return Chain(kind, std::move(pts), true);
}

Chain Chain::prefix(std::size_t k) const {
    std::vector<Point> head(pts_.begin(), pts_.begin() + std::min(k, pts_.size()));
    if (head.size() < 3) return degenerate(kind_, std::move(head));
    return Chain(kind_, std::move(head), false);
}

bool is_convex_position(std::vector<Point> pts) {
    if (pts.size() < 3) return false;
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!(pts[i].x < pts[i + 1].x)) return false;
    // Split by the chord from leftmost to rightmost: the points above must
    // form a cap with the endpoints, the points below a cup.
    const Point& a = pts.front();
    const Point& b = pts.back();
    std::vector<Point> upper{a}, lower{a};
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        Orientation o = orientation(a, b, pts[i]);
        if (o == Orientation::Collinear) return false;
        (o == Orientation::Left ? upper : lower).push_back(pts[i]);
    }
    upper.push_back(b);
    lower.push_back(b);
    auto monotone = [](const std::vector<Point>& chain, Orientation want) {
        for (std::size_t i = 0; i + 2 < chain.size(); ++i)
            if (orientation(chain[i], chain[i + 1], chain[i + 2]) != want) return false;
        return true;
    };
    return monotone(upper, Orientation::Right) && monotone(lower, Orientation::Left);
}

ConvexPolygon ConvexPolygon::make(std::vector<Point> pts) {
    if (pts.size() < 3)
        throw Error(ErrorCode::ContractViolation, "polygon needs at least 3 points");
    std::vector<Point> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            throw Error(ErrorCode::ContractViolation, "polygon has duplicate vertices");
    if (!is_convex_position(sorted))
        throw Error(ErrorCode::ContractViolation, "points are not in convex position");

    // Counterclockwise canonical order: lower chain left to right, then
    // the upper chain back.
    const Point& a = sorted.front();
    const Point& b = sorted.back();
    std::vector<Point> lower, upper;
    for (std::size_t i = 1; i + 1 < sorted.size(); ++i) {
        if (orientation(a, b, sorted[i]) == Orientation::Left)
            upper.push_back(sorted[i]);
        else
            lower.push_back(sorted[i]);
    }
    std::vector<Point> ccw;
    ccw.reserve(sorted.size());
    ccw.push_back(a);
    for (const Point& p : lower) ccw.push_back(p);
    ccw.push_back(b);
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) ccw.push_back(*it);
    return ConvexPolygon(std::move(ccw));
}

namespace {

// Suffix DP: span[i][j] = length of the longest chain of the kind that
// starts with the edge (i, j). Lets the reconstruction pick the
// lexicographically smallest maximal index sequence front to back.
std::vector<std::vector<int>> chain_span_table(const PointSet& s, ChainKind kind) {
    const std::size_t n = s.size();
    const Orientation want = required_turn(kind);
    std::vector<std::vector<int>> span(n, std::vector<int>(n, 0));
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) {
            int best = 2;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (span[j][k] + 1 > best && orientation(s[i], s[j], s[k]) == want)
                    best = span[j][k] + 1;
            }
            span[i][j] = best;
        }
    }
    return span;
}

} // namespace

Chain longest_chain(const PointSet& s, ChainKind kind) {
    const std::size_t n = s.size();
    if (n < 3) return Chain::degenerate(kind, s.points());

    auto span = chain_span_table(s, kind);
    int best = 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, span[i][j]);
    if (best < 3) return Chain::degenerate(kind, {s[0], s[1]});

    const Orientation want = required_turn(kind);
    std::vector<Point> pts;
    std::size_t i = 0, j = 0;
    for (i = 0; i < n; ++i) {
        bool found = false;
        for (j = i + 1; j < n; ++j)
            if (span[i][j] == best) { found = true; break; }
        if (found) break;
    }
    pts.push_back(s[i]);
    pts.push_back(s[j]);
    int remaining = best - 2;
    while (remaining > 0) {
        for (std::size_t k = j + 1; k < n; ++k) {
            if (span[j][k] == remaining + 1 && orientation(s[i], s[j], s[k]) == want) {
                pts.push_back(s[k]);
                i = j;
                j = k;
                --remaining;
                break;
            }
        }
    }
    return Chain::validate(kind, std::move(pts));
}

namespace {

// All-pairs longest cup/cap with both endpoints fixed, by relaxing the
// O(n^2) edges in slope order. A chain's consecutive slopes are strictly
// monotone, so when edge (i, j) is processed every usable chain into i is
// already final; equal-slope edges never share an endpoint and so never
// interact.
struct EndpointTables {
    std::vector<std::vector<int>> len;  // len[a][j]: best chain a -> j
    std::vector<std::vector<int>> par;  // predecessor of j on that chain
};

EndpointTables endpoint_chains(const PointSet& s, ChainKind kind) {
    const std::size_t n = s.size();
    struct Edge {
        Scalar slope;
        std::uint32_t i, j;
    };
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            edges.push_back({(s[j].y - s[i].y) / (s[j].x - s[i].x), i, j});
    if (kind == ChainKind::Cup)
        std::stable_sort(edges.begin(), edges.end(),
                         [](const Edge& a, const Edge& b) { return a.slope < b.slope; });
    else
        std::stable_sort(edges.begin(), edges.end(),
                         [](const Edge& a, const Edge& b) { return b.slope < a.slope; });

    EndpointTables t;
    t.len.assign(n, std::vector<int>(n, 0));
    t.par.assign(n, std::vector<int>(n, -1));
    for (const Edge& e : edges) {
        if (t.len[e.i][e.j] < 2) {
            t.len[e.i][e.j] = 2;
            t.par[e.i][e.j] = static_cast<int>(e.i);
        }
        for (std::uint32_t a = 0; a <= e.i; ++a) {
            if (t.len[a][e.i] >= 2 && t.len[a][e.i] + 1 > t.len[a][e.j]) {
                t.len[a][e.j] = t.len[a][e.i] + 1;
                t.par[a][e.j] = static_cast<int>(e.i);
            }
        }
    }
    return t;
}

} // namespace

ConvexPolygon largest_convex_subset(const PointSet& s) {
    const std::size_t n = s.size();
    if (n < 3) throw Error(ErrorCode::TooSmall, "largest_convex_subset needs at least 3 points");

    EndpointTables cup = endpoint_chains(s, ChainKind::Cup);
    EndpointTables cap = endpoint_chains(s, ChainKind::Cap);

    // A convex polygon splits at its leftmost and rightmost vertices into
    // a cup below the chord and a cap above it, sharing exactly those two.
    int best = 0;
    std::size_t ba = 0, bb = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            int total = cup.len[a][b] + cap.len[a][b] - 2;
            if (total > best) {
                best = total;
                ba = a;
                bb = b;
            }
        }
    }

    auto walk = [&](const EndpointTables& t, std::size_t a, std::size_t b) {
        std::vector<std::size_t> idx;
        std::size_t cur = b;
        while (cur != a) {
            idx.push_back(cur);
            cur = static_cast<std::size_t>(t.par[a][cur]);
        }
        idx.push_back(a);
        std::reverse(idx.begin(), idx.end());
        return idx;
    };
    std::vector<Point> verts;
    for (std::size_t i : walk(cup, ba, bb)) verts.push_back(s[i]);
    auto upper = walk(cap, ba, bb);
    for (std::size_t k = 1; k + 1 < upper.size(); ++k) verts.push_back(s[upper[k]]);
    return ConvexPolygon::make(std::move(verts));
}

std::size_t brute_oracle(const PointSet& s, OracleQuery query) {
    const std::size_t n = s.size();
    if (n > 15) throw Error(ErrorCode::TooLarge, "brute_oracle limited to 15 points");

    auto subset_points = [&](std::uint32_t mask) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) pts.push_back(s[i]);
        return pts; // x-sorted because s is
    };
    auto is_chain = [&](const std::vector<Point>& pts, ChainKind kind) {
        const Orientation want = required_turn(kind);
        for (std::size_t i = 0; i + 2 < pts.size(); ++i)
            if (orientation(pts[i], pts[i + 1], pts[i + 2]) != want) return false;
        return true;
    };

    std::size_t best = std::min<std::size_t>(n, 2);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::size_t count = static_cast<std::size_t>(__builtin_popcount(mask));
        if (count <= best) continue;
        std::vector<Point> pts = subset_points(mask);
        bool ok = false;
        switch (query) {
        case OracleQuery::LongestCup: ok = is_chain(pts, ChainKind::Cup); break;
        case OracleQuery::LongestCap: ok = is_chain(pts, ChainKind::Cap); break;
        case OracleQuery::LargestConvex: ok = count >= 3 && is_convex_position(pts); break;
        }
        if (ok) best = count;
    }
    if (query == OracleQuery::LargestConvex && best < 3)
        best = 0; // no convex-position subset at all (fewer than 3 points)
    return best;
}

} // namespace cupcap
