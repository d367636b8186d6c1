#include "cupcap/gen.hpp"

#include "cupcap/chain.hpp"
#include "cupcap/errors.hpp"
#include "cupcap/rng.hpp"

#include <numeric>
#include <unordered_set>
#include <vector>

namespace cupcap {

PointSet scale_into_box(const PointSet& s, const Scalar& x0, const Scalar& y0, const Scalar& w,
                        const Scalar& h) {
    if (s.empty()) return s;
    Scalar xmin = s[0].x, xmax = s[0].x, ymin = s[0].y, ymax = s[0].y;
    for (const Point& p : s) {
        if (p.x < xmin) xmin = p.x;
        if (xmax < p.x) xmax = p.x;
        if (p.y < ymin) ymin = p.y;
        if (ymax < p.y) ymax = p.y;
    }
    const Scalar dx = xmax - xmin;
    const Scalar dy = ymax - ymin;
    std::vector<Point> out;
    out.reserve(s.size());
    for (const Point& p : s) {
        Scalar nx = dx.is_zero() ? x0 : x0 + w * (p.x - xmin) / dx;
        Scalar ny = dy.is_zero() ? y0 : y0 + h * (p.y - ymin) / dy;
        out.push_back({nx, ny});
    }
    return PointSet::from_sorted_trusted(std::move(out));
}

Scalar max_abs_slope(const PointSet& s) {
    Scalar best(0);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Scalar slope = ((s[j].y - s[i].y) / (s[j].x - s[i].x)).abs();
            if (best < slope) best = slope;
        }
    return best;
}

namespace {

// Handles the degenerate parameters 2 as well (a single point), which the
// lower-bound assembly needs for its outermost blocks.
PointSet cupcap_free_impl(int m, int l) {
    if (m == 2 || l == 2) return PointSet::from_sorted_trusted({{Scalar(0), Scalar(0)}});
    if (m == 3) {
        std::vector<Point> pts;
        for (int i = 0; i + 1 < l; ++i) pts.push_back({Scalar(i), Scalar(-i * i)});
        return PointSet::from_sorted_trusted(std::move(pts));
    }
    if (l == 3) {
        std::vector<Point> pts;
        for (int i = 0; i + 1 < m; ++i) pts.push_back({Scalar(i), Scalar(i * i)});
        return PointSet::from_sorted_trusted(std::move(pts));
    }

    PointSet left = scale_into_box(cupcap_free_impl(m - 1, l), Scalar(0), Scalar(0), Scalar(1),
                                   Scalar(1));
    PointSet right = scale_into_box(cupcap_free_impl(m, l - 1), Scalar(0), Scalar(0), Scalar(1),
                                    Scalar(1));
    // Right block shifted so every cross slope exceeds every in-block
    // slope: cross dx in [1, 3], cross dy >= Y - 1, so Y = 3s + 2 gives
    // cross slopes >= s + 1/3 > s.
    Scalar sigma = max_abs_slope(left);
    Scalar sr = max_abs_slope(right);
    if (sigma < sr) sigma = sr;
    Scalar shift_y = Scalar(3) * sigma + Scalar(2);

    std::vector<Point> pts(left.begin(), left.end());
    for (const Point& p : right) pts.push_back({p.x + Scalar(2), p.y + shift_y});
    return PointSet::from_sorted_trusted(std::move(pts));
}

void self_check_free(const PointSet& s, int m, int l, const BigInt& want_size) {
    if (BigInt(s.size()) != want_size)
        throw Error(ErrorCode::InternalFailure, "free-set construction has the wrong size");
    PointSet::validate(s.points()); // throws if the blocks interfered
    Chain cup = longest_chain(s, ChainKind::Cup);
    std::size_t cup_len = cup.size();
    Chain cap = longest_chain(s, ChainKind::Cap);
    std::size_t cap_len = cap.size();
    if (cup_len != static_cast<std::size_t>(m - 1) || cap_len != static_cast<std::size_t>(l - 1))
        throw Error(ErrorCode::InternalFailure, "free-set construction missed its chain lengths");
}

} // namespace

PointSet cupcap_free(int m, int l) {
    if (m < 3 || l < 3 || m > 8 || l > 8)
        throw Error(ErrorCode::ContractViolation, "cupcap_free supports 3 <= m, l <= 8");
    PointSet s = cupcap_free_impl(m, l);
    self_check_free(s, m, l, binomial(m + l - 4, l - 2));
    return s;
}

PointSet no_ngon(int n) {
    if (n < 4 || n > 7) throw Error(ErrorCode::ContractViolation, "no_ngon supports 4 <= n <= 7");

    // Block i is (i+2, n-i)-free with C(n-2, i) points; blocks sit on a
    // steep convex arc, tiny next to the inter-block gaps.
    const Scalar eps(1, 4);
    std::vector<PointSet> blocks;
    Scalar sigma(0);
    for (int i = 0; i <= n - 2; ++i) {
        PointSet b = scale_into_box(cupcap_free_impl(i + 2, n - i), Scalar(0), Scalar(0), eps, eps);
        Scalar sb = max_abs_slope(b);
        if (sigma < sb) sigma = sb;
        blocks.push_back(std::move(b));
    }

    Scalar t = (sigma + Scalar(1)) * Scalar(BigInt(1) << (2 * n));
    for (int attempt = 0; attempt < 40; ++attempt, t = t * Scalar(4)) {
        std::vector<std::vector<Point>> placed;
        Scalar y(0);
        for (int i = 0; i <= n - 2; ++i) {
            std::vector<Point> blk;
            for (const Point& p : blocks[static_cast<std::size_t>(i)])
                blk.push_back({p.x + Scalar(i), p.y + y});
            placed.push_back(std::move(blk));
            y += t * Scalar(BigInt(1) << (2 * i));
        }

        // Every cross slope must exceed every in-block slope, and triples
        // spanning three blocks must turn left (the convex macro arc).
        bool ok = true;
        for (std::size_t i = 0; ok && i < placed.size(); ++i)
            for (std::size_t j = i + 1; ok && j < placed.size(); ++j)
                for (const Point& p : placed[i]) {
                    for (const Point& q : placed[j]) {
                        Scalar slope = (q.y - p.y) / (q.x - p.x);
                        if (!(sigma < slope)) { ok = false; break; }
                    }
                    if (!ok) break;
                }
        for (std::size_t h = 0; ok && h < placed.size(); ++h)
            for (std::size_t i = h + 1; ok && i < placed.size(); ++i)
                for (std::size_t j = i + 1; ok && j < placed.size(); ++j)
                    for (const Point& p : placed[h]) {
                        for (const Point& q : placed[i]) {
                            for (const Point& r : placed[j])
                                if (orientation(p, q, r) != Orientation::Left) { ok = false; break; }
                            if (!ok) break;
                        }
                        if (!ok) break;
                    }
        if (!ok) continue;

        std::vector<Point> all;
        for (const auto& blk : placed)
            for (const Point& p : blk) all.push_back(p);
        PointSet s = PointSet::validate(std::move(all));
        if (BigInt(s.size()) != BigInt(1) << (n - 2))
            throw Error(ErrorCode::InternalFailure, "lower-bound set has the wrong size");
        if (largest_convex_subset(s).size() != static_cast<std::size_t>(n - 1))
            throw Error(ErrorCode::InternalFailure,
                        "lower-bound set has the wrong largest convex subset");
        return s;
    }
    throw Error(ErrorCode::InternalFailure, "lower-bound placement did not stabilize");
}

namespace {

struct DirHash {
    std::size_t operator()(const std::pair<long long, long long>& d) const {
        std::uint64_t a = static_cast<std::uint64_t>(d.first);
        std::uint64_t b = static_cast<std::uint64_t>(d.second);
        a *= 0x9e3779b97f4a7c15ULL;
        b *= 0xbf58476d1ce4e5b9ULL;
        std::uint64_t z = a ^ (b >> 13) ^ (b << 7);
        return static_cast<std::size_t>(z ^ (z >> 31));
    }
};

} // namespace

PointSet random_set(const RandomSpec& spec) {
    if (spec.count > 10000)
        throw Error(ErrorCode::ContractViolation, "random_set supports at most 10000 points");
    if (spec.coord_bound < 0 || spec.coord_bound > (1LL << 30))
        throw Error(ErrorCode::ContractViolation, "coord_bound must be in [0, 2^30]");
    if (2 * spec.coord_bound + 1 < static_cast<long long>(spec.count))
        throw Error(ErrorCode::Exhausted, "not enough distinct x-coordinates in range");

    Rng rng(spec.seed);
    std::vector<std::pair<long long, long long>> pts;
    std::unordered_set<long long> used_x;
    std::size_t rejections = 0;
    const std::size_t rejection_cap = 1000 + 200 * spec.count;
    while (pts.size() < spec.count) {
        long long x = rng.int_in(-spec.coord_bound, spec.coord_bound);
        long long y = rng.int_in(-spec.coord_bound, spec.coord_bound);
        bool ok = used_x.find(x) == used_x.end();
        if (ok) {
            // Two equal directions to the candidate mean a collinear triple.
            std::unordered_set<std::pair<long long, long long>, DirHash> dirs;
            dirs.reserve(pts.size() * 2);
            for (const auto& [ax, ay] : pts) {
                long long dx = x - ax, dy = y - ay;
                long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
                dx /= g;
                dy /= g;
                if (dx < 0) { dx = -dx; dy = -dy; }
                if (!dirs.insert({dx, dy}).second) { ok = false; break; }
            }
        }
        if (!ok) {
            if (++rejections > rejection_cap)
                throw Error(ErrorCode::Exhausted, "rejection sampling stalled; enlarge coord_bound");
            continue;
        }
        rejections = 0;
        used_x.insert(x);
        pts.emplace_back(x, y);
    }

    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.push_back({Scalar(x), Scalar(y)});
    return PointSet::validate(std::move(out));
}

} // namespace cupcap
