#include "cupcap/partition.hpp"

#include "cupcap/errors.hpp"
#include "cupcap/scalar.hpp"

#include <atomic>
#include <string>

namespace cupcap {

namespace {

std::atomic<std::uint64_t> g_claim_violations{0};

} // namespace

std::uint64_t extension_claim_violations() { return g_claim_violations.load(); }

const Point& Partition::nearest(const Point& p) const {
    std::size_t i = source_.index_of(p);
    if (i == PointSet::npos)
        throw Error(ErrorCode::ContractViolation, "nearest: point not in the partitioned set");
    return nearest_[i];
}

Partition ul_partition(const PointSet& s) {
    const std::size_t n = s.size();
    if (n < 2) throw Error(ErrorCode::TooSmall, "ul_partition needs at least 2 points");

    Partition part;
    part.source_ = s;
    part.nearest_.reserve(n);
    std::vector<bool> upper_mask(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = (i == 0) ? 1 : 0;
        for (std::size_t j = (best == 0 ? 1 : 2); j < n; ++j) {
            if (j == i) continue;
            if (angle_less(s[i], s[j], s[best])) best = j;
        }
        part.nearest_.push_back(s[best]);
        upper_mask[i] = s[best].x > s[i].x;
    }
    part.upper_ = s.filtered(upper_mask);
    for (std::size_t i = 0; i < n; ++i) upper_mask[i] = !upper_mask[i];
    part.lower_ = s.filtered(upper_mask);
    if (part.upper_.empty() || part.lower_.empty())
        throw Error(ErrorCode::InternalFailure, "partition has an empty part");
    return part;
}

namespace {

// Diagnostic for the extension step: every source point strictly on the
// given x-side of `endpoint` should lie on `side` of the endpoint-partner
// line. Counted only; the extension result is validated on its own.
void check_extension_claim(const PointSet& s, const Point& endpoint, const Point& partner,
                           bool left_side, Orientation side) {
    for (const Point& p : s) {
        bool relevant = left_side ? p.x < endpoint.x : p.x > endpoint.x;
        if (!relevant || p == partner) continue;
        if (orientation(endpoint, partner, p) != side) {
            g_claim_violations.fetch_add(1);
            return;
        }
    }
}

} // namespace

Chain extend_chain(const Partition& part, const PointSet& extra, const Chain& chain) {
    const PointSet& s = part.source();
    if (!disjoint(extra, s))
        throw Error(ErrorCode::PreconditionViolated, "extra set overlaps the partitioned set");
    for (const Point& p : chain.points())
        if (!s.contains(p) && !extra.contains(p))
            throw Error(ErrorCode::PreconditionViolated, "chain leaves the union of the two sets");
    if (chain.is_degenerate())
        throw Error(ErrorCode::PreconditionViolated, "cannot extend a degenerate chain");

    std::vector<Point> pts = chain.points();
    if (chain.kind() == ChainKind::Cap) {
        const Point& last = pts.back();
        if (!part.is_upper(last))
            throw Error(ErrorCode::PreconditionViolated, "cap's rightmost point is not an upper point");
        if (!s.contains(pts[pts.size() - 2]))
            throw Error(ErrorCode::PreconditionViolated, "cap's second-rightmost point is not in S");
        const Point& partner = part.nearest(last);
        if (!part.is_lower(partner))
            throw Error(ErrorCode::InternalFailure, "upper point's partner is not a lower point");
        // Claim: all of S left of the endpoint sits below the endpoint-partner line.
        check_extension_claim(s, last, partner, /*left_side=*/true, Orientation::Right);
        pts.push_back(partner);
    } else {
        const Point& first = pts.front();
        if (!part.is_lower(first))
            throw Error(ErrorCode::PreconditionViolated, "cup's leftmost point is not a lower point");
        if (!s.contains(pts[1]))
            throw Error(ErrorCode::PreconditionViolated, "cup's second-leftmost point is not in S");
        const Point& partner = part.nearest(first);
        if (!part.is_upper(partner))
            throw Error(ErrorCode::InternalFailure, "lower point's partner is not an upper point");
        check_extension_claim(s, first, partner, /*left_side=*/false, Orientation::Left);
        pts.insert(pts.begin(), partner);
    }
    return Chain::validate(chain.kind(), std::move(pts));
}

Chain junction_extend(const Chain& cup, const Chain& cap) {
    if (cup.kind() != ChainKind::Cup || cap.kind() != ChainKind::Cap)
        throw Error(ErrorCode::ContractViolation, "junction_extend wants a cup then a cap");
    if (cup.is_degenerate() || cap.is_degenerate())
        throw Error(ErrorCode::ContractViolation, "junction_extend needs proper chains");
    if (!(cup.back() == cap.front()))
        throw Error(ErrorCode::NoSharedPoint, "cup's rightmost point differs from cap's leftmost");

    const Point& hinge = cup.back();
    const Point& prev = cup[cup.size() - 2];
    const Point& next = cap[1];
    if (orientation(prev, hinge, next) == Orientation::Left) {
        std::vector<Point> pts = cup.points();
        pts.push_back(next);
        return Chain::validate(ChainKind::Cup, std::move(pts));
    }
    std::vector<Point> pts;
    pts.reserve(cap.size() + 1);
    pts.push_back(prev);
    for (const Point& p : cap.points()) pts.push_back(p);
    return Chain::validate(ChainKind::Cap, std::move(pts));
}

namespace {

// Scan base case: either some consecutive triple turns the wanted way,
// or the whole x-sorted sequence is one chain of the opposite kind.
Chain base_scan(const PointSet& s, ChainKind want_kind, std::size_t opposite_len) {
    const Orientation want = want_kind == ChainKind::Cup ? Orientation::Left : Orientation::Right;
    for (std::size_t i = 0; i + 2 < s.size(); ++i)
        if (orientation(s[i], s[i + 1], s[i + 2]) == want)
            return Chain::validate(want_kind, {s[i], s[i + 1], s[i + 2]});
    ChainKind other = want_kind == ChainKind::Cup ? ChainKind::Cap : ChainKind::Cup;
    std::vector<Point> pts(s.begin(), s.begin() + opposite_len);
    return Chain::validate(other, std::move(pts));
}

Chain find_cup_or_cap_guaranteed(const PointSet& s, int m, int l) {
    if (m == 3) return base_scan(s, ChainKind::Cup, static_cast<std::size_t>(l));
    if (l == 3) return base_scan(s, ChainKind::Cap, static_cast<std::size_t>(m));

    Partition part = ul_partition(s);
    PointSet empty;
    const BigInt upper_bound = binomial(m + l - 5, l - 3); // forbids (m, l-1)
    const BigInt lower_bound = binomial(m + l - 5, l - 2); // forbids (m-1, l)
    if (BigInt(part.upper().size()) > upper_bound) {
        Chain got = find_cup_or_cap_guaranteed(part.upper(), m, l - 1);
        if (got.kind() == ChainKind::Cup) return got;
        return extend_chain(part, empty, got);
    }
    if (BigInt(part.lower().size()) > lower_bound) {
        Chain got = find_cup_or_cap_guaranteed(part.lower(), m - 1, l);
        if (got.kind() == ChainKind::Cap) return got;
        return extend_chain(part, empty, got);
    }
    throw Error(ErrorCode::InternalFailure, "neither part exceeds its sub-bound");
}

} // namespace

Chain find_cup_or_cap(const PointSet& s, int m, int l) {
    if (m < 3 || l < 3) throw Error(ErrorCode::ContractViolation, "find_cup_or_cap needs m, l >= 3");
    const BigInt bound = binomial(m + l - 4, l - 2);
    if (BigInt(s.size()) > bound) {
        Chain found = find_cup_or_cap_guaranteed(s, m, l);
        // Witness self-check: exact requested length of a validated kind.
        std::size_t want = found.kind() == ChainKind::Cup ? static_cast<std::size_t>(m)
                                                          : static_cast<std::size_t>(l);
        if (found.size() != want)
            throw Error(ErrorCode::InternalFailure, "recursion returned a chain of the wrong length");
        return found;
    }

    // The guarantee does not apply; the longest-chain tables may still
    // witness one of the two targets.
    if (s.size() >= 3) {
        Chain cup = longest_chain(s, ChainKind::Cup);
        if (!cup.is_degenerate() && cup.size() >= static_cast<std::size_t>(m))
            return cup.prefix(static_cast<std::size_t>(m));
        Chain cap = longest_chain(s, ChainKind::Cap);
        if (!cap.is_degenerate() && cap.size() >= static_cast<std::size_t>(l))
            return cap.prefix(static_cast<std::size_t>(l));
    }
    throw Error(ErrorCode::NotFound,
                "set of " + std::to_string(s.size()) + " points is below the bound " +
                    bound.str() + "+1 and contains neither target");
}

} // namespace cupcap
