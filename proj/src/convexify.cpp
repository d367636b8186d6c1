#include "cupcap/convexify.hpp"

#include "cupcap/errors.hpp"
#include "cupcap/scalar.hpp"

#include <ostream>
#include <sstream>
#include <string>

namespace cupcap {

Witness Witness::cup(Chain c, std::string label) {
    Witness w;
    w.kind = Kind::Cup;
    w.chain = std::move(c);
    w.label = std::move(label);
    return w;
}

Witness Witness::cap(Chain c, std::string label) {
    Witness w;
    w.kind = Kind::Cap;
    w.chain = std::move(c);
    w.label = std::move(label);
    return w;
}

Witness Witness::polygon(ConvexPolygon p, std::string label) {
    Witness w;
    w.kind = Kind::Polygon;
    w.poly = std::move(p);
    w.label = std::move(label);
    return w;
}

namespace detail {

struct CertNode {
    Certificate::Kind kind;
    PointSet host;
    int m = 0;
    int l = 0;
    Point s;
    // Base nodes.
    std::optional<Chain> base_chain;
    std::optional<Point> flank;
    // Lift nodes.
    std::optional<Partition> part;
    std::shared_ptr<const CertNode> inner;
};

Certificate make_certificate(std::shared_ptr<const CertNode> node) {
    return Certificate(std::move(node));
}

std::shared_ptr<const CertNode> node_ptr(const Certificate& cert) { return cert.node_; }

} // namespace detail

using detail::CertNode;

Certificate::Kind Certificate::kind() const { return node_->kind; }
int Certificate::m() const { return node_->m; }
int Certificate::l() const { return node_->l; }
const PointSet& Certificate::host() const { return node_->host; }
const Point& Certificate::point() const { return node_->s; }

const Chain& Certificate::base_chain() const {
    if (!node_->base_chain) throw Error(ErrorCode::ContractViolation, "not a base certificate");
    return *node_->base_chain;
}

const Point& Certificate::flank() const {
    if (!node_->flank) throw Error(ErrorCode::ContractViolation, "not a base certificate");
    return *node_->flank;
}

const Partition& Certificate::partition() const {
    if (!node_->part) throw Error(ErrorCode::ContractViolation, "not a lift certificate");
    return *node_->part;
}

Certificate Certificate::inner() const {
    if (!node_->inner) throw Error(ErrorCode::ContractViolation, "not a lift certificate");
    return Certificate(node_->inner);
}

namespace {

Chain reconstruct_cap_node(const CertNode& node) {
    switch (node.kind) {
    case Certificate::Kind::CupBase: {
        const auto& v = node.base_chain->points();
        return Chain::validate(ChainKind::Cap, {v[v.size() - 2], v.back(), *node.flank});
    }
    case Certificate::Kind::CapBase:
        return *node.base_chain;
    case Certificate::Kind::UpperLift: {
        Chain inner_cap = reconstruct_cap_node(*node.inner);
        PointSet empty;
        return extend_chain(*node.part, empty, inner_cap);
    }
    case Certificate::Kind::LowerLift:
        return reconstruct_cap_node(*node.inner);
    }
    throw Error(ErrorCode::InternalFailure, "unreachable certificate kind");
}

} // namespace

Chain Certificate::reconstruct_cap() const {
    Chain cap = reconstruct_cap_node(*node_);
    if (cap.size() != static_cast<std::size_t>(node_->l - 1) || !(cap.front() == node_->s))
        throw Error(ErrorCode::InternalFailure, "reconstructed cap does not match the certificate");
    return cap;
}

void Certificate::describe(std::ostream& os, int indent) const {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const CertNode& n = *node_;
    auto point_str = [](const Point& p) {
        std::ostringstream ss;
        ss << p;
        return ss.str();
    };
    switch (n.kind) {
    case Kind::CupBase:
    case Kind::CapBase: {
        os << pad << (n.kind == Kind::CupBase ? "cup-base" : "cap-base") << " (m=" << n.m
           << ", l=" << n.l << ") host=" << n.host.size() << " points, s=" << point_str(n.s)
           << "\n";
        os << pad << "  " << chain_kind_name(n.base_chain->kind()) << " of " << n.base_chain->size()
           << ":";
        for (const Point& p : n.base_chain->points()) os << " " << point_str(p);
        os << "\n" << pad << "  flank r=" << point_str(*n.flank) << "\n";
        break;
    }
    case Kind::UpperLift:
    case Kind::LowerLift: {
        os << pad << (n.kind == Kind::UpperLift ? "upper-lift" : "lower-lift") << " (m=" << n.m
           << ", l=" << n.l << ") host=" << n.host.size() << " points (upper "
           << n.part->upper().size() << " / lower " << n.part->lower().size()
           << "), s=" << point_str(n.s) << "\n";
        Certificate(n.inner).describe(os, indent + 1);
        break;
    }
    }
}

std::string Certificate::describe() const {
    std::ostringstream ss;
    describe(ss, 0);
    return ss.str();
}

namespace {

void ensure_free(const PointSet& s, int m, int l) {
    Chain cup = longest_chain(s, ChainKind::Cup);
    if (!cup.is_degenerate() && cup.size() >= static_cast<std::size_t>(m))
        throw Error(ErrorCode::NotFree, "host contains a " + std::to_string(m) + "-cup");
    Chain cap = longest_chain(s, ChainKind::Cap);
    if (!cap.is_degenerate() && cap.size() >= static_cast<std::size_t>(l))
        throw Error(ErrorCode::NotFree, "host contains a " + std::to_string(l) + "-cap");
}

Certificate base_certificate_impl(const PointSet& s, int m, int l, BaseSide side,
                                  bool check_free) {
    if (side == BaseSide::CupSide && l != 4)
        throw Error(ErrorCode::ContractViolation, "cup-side base certificates require l = 4");
    if (side == BaseSide::CapSide && m != 4)
        throw Error(ErrorCode::ContractViolation, "cap-side base certificates require m = 4");
    if (m < 4 || l < 4)
        throw Error(ErrorCode::ContractViolation, "base certificate needs m, l >= 4");
    if (check_free) ensure_free(s, m, l);

    auto node = std::make_shared<CertNode>();
    node->host = s;
    node->m = m;
    node->l = l;

    if (side == BaseSide::CupSide) {
        const BigInt threshold = binomial(m - 1, 2) + 1;
        if (BigInt(s.size()) <= threshold)
            throw Error(ErrorCode::TooSmall, "cup-side base certificate needs more than " +
                                                 threshold.str() + " points");
        node->kind = Certificate::Kind::CupBase;
        const Point r = s.rightmost();
        PointSet rest = s.without(r);
        Chain cup = find_cup_or_cap(rest, m - 1, 4);
        if (cup.kind() != ChainKind::Cup) throw Error(ErrorCode::NotFree, "host contains a 4-cap");
        const auto& v = cup.points();
        // r, right of the cup, sits below the line through its last two
        // points, else appending it would give an m-cup.
        if (orientation(v[v.size() - 2], v.back(), r) != Orientation::Right)
            throw Error(ErrorCode::NotFree, "host contains an m-cup through the flank point");
        node->s = v[v.size() - 2];
        node->base_chain = std::move(cup);
        node->flank = r;
    } else {
        const BigInt threshold = binomial(l - 1, 2) + 1;
        if (BigInt(s.size()) <= threshold)
            throw Error(ErrorCode::TooSmall, "cap-side base certificate needs more than " +
                                                 threshold.str() + " points");
        node->kind = Certificate::Kind::CapBase;
        const Point r = s.leftmost();
        PointSet rest = s.without(r);
        Chain cap = find_cup_or_cap(rest, 4, l - 1);
        if (cap.kind() != ChainKind::Cap) throw Error(ErrorCode::NotFree, "host contains a 4-cup");
        const auto& v = cap.points();
        if (orientation(r, v[0], v[1]) != Orientation::Left)
            throw Error(ErrorCode::NotFree, "host contains an l-cap through the flank point");
        node->s = v[0];
        node->base_chain = std::move(cap);
        node->flank = r;
    }
    return detail::make_certificate(std::move(node));
}

BigInt g_value(int m, int l) { return binomial(m + l - 4, l - 2) - binomial(m + l - 6, l - 3); }

Certificate find_certificate_impl(const PointSet& s, int m, int l) {
    if (l == 4) return base_certificate_impl(s, m, 4, BaseSide::CupSide, false);
    if (m == 4) return base_certificate_impl(s, 4, l, BaseSide::CapSide, false);

    auto node = std::make_shared<CertNode>();
    node->host = s;
    node->m = m;
    node->l = l;
    Partition part = ul_partition(s);
    if (BigInt(part.upper().size()) > g_value(m, l - 1)) {
        node->kind = Certificate::Kind::UpperLift;
        Certificate inner = find_certificate_impl(part.upper(), m, l - 1);
        node->s = inner.point();
        node->inner = detail::node_ptr(inner);
    } else if (BigInt(part.lower().size()) > g_value(m - 1, l)) {
        node->kind = Certificate::Kind::LowerLift;
        Certificate inner = find_certificate_impl(part.lower(), m - 1, l);
        node->s = inner.point();
        node->inner = detail::node_ptr(inner);
    } else {
        throw Error(ErrorCode::InternalFailure, "no partition part exceeds its sub-bound");
    }
    node->part = std::move(part);
    return detail::make_certificate(std::move(node));
}

void check_resolve_preconditions(const CertNode& node, const PointSet& b, const Chain& cup) {
    if (cup.kind() != ChainKind::Cup || cup.is_degenerate() || cup.size() < 3)
        throw Error(ErrorCode::ContractViolation, "resolve needs a proper cup of length >= 3");
    if (!(cup.front() == node.s))
        throw Error(ErrorCode::ContractViolation,
                    "cup's left endpoint differs from the certificate point");
    if (!b.contains(cup.back()))
        throw Error(ErrorCode::ContractViolation, "cup's right endpoint is not in B");
    if (!disjoint(b, node.host))
        throw Error(ErrorCode::ContractViolation, "B overlaps the certificate host");
    for (const Point& p : cup.points())
        if (!b.contains(p) && !node.host.contains(p))
            throw Error(ErrorCode::ContractViolation, "cup leaves the union of B and the host");
}

[[noreturn]] void resolution_failure(const std::string& where, const std::string& why) {
    throw Error(ErrorCode::ResolutionFailure, where + ": " + why);
}

// Checks the witness against the node's host and parameters; n is the
// polygon size implied by the external cup.
void verify_witness(const Witness& w, const CertNode& node, std::size_t n) {
    switch (w.kind) {
    case Witness::Kind::Cup: {
        const Chain& c = *w.chain;
        if (c.kind() != ChainKind::Cup || c.is_degenerate() ||
            c.size() != static_cast<std::size_t>(node.m))
            resolution_failure(w.label, "cup witness has the wrong shape");
        if (!node.host.contains(c[0]) || !node.host.contains(c[1]))
            resolution_failure(w.label, "cup witness's two leftmost points leave the host");
        break;
    }
    case Witness::Kind::Cap: {
        const Chain& c = *w.chain;
        if (c.kind() != ChainKind::Cap || c.is_degenerate() ||
            c.size() != static_cast<std::size_t>(node.l))
            resolution_failure(w.label, "cap witness has the wrong shape");
        if (!node.host.contains(c[c.size() - 1]) || !node.host.contains(c[c.size() - 2]))
            resolution_failure(w.label, "cap witness's two rightmost points leave the host");
        break;
    }
    case Witness::Kind::Polygon:
        if (w.poly->size() != n) resolution_failure(w.label, "polygon witness has the wrong size");
        break;
    }
}

Chain make_chain_or_fail(ChainKind kind, std::vector<Point> pts, const std::string& label) {
    try {
        return Chain::validate(kind, std::move(pts));
    } catch (const Error& e) {
        resolution_failure(label, e.what());
    }
}

ConvexPolygon make_polygon_or_fail(std::vector<Point> pts, const std::string& label) {
    try {
        return ConvexPolygon::make(std::move(pts));
    } catch (const Error& e) {
        resolution_failure(label, e.what());
    }
}

Witness resolve_cup_base(const CertNode& node, const Chain& cup) {
    const auto& v = node.base_chain->points(); // the (m-1)-cup
    const Point& vm1 = v.back();
    const Point& vm2 = v[v.size() - 2]; // == node.s
    const Point& vm3 = v[v.size() - 3];
    const Point& r = *node.flank;
    const auto& u = cup.points();
    const Point& un1 = u[u.size() - 1];
    const Point& un2 = u[u.size() - 2];
    const Point& un3 = u[u.size() - 3]; // equals s when the cup has 3 points

    const bool left_of_v = un1.x < vm1.x;
    const bool above_l1 = orientation(vm2, vm1, un1) == Orientation::Left;

    auto polygon_points = [&] {
        for (const Point& p : u)
            if (p == vm1) resolution_failure("cup-base", "external cup passes through the cup end");
        std::vector<Point> pts = u;
        pts.push_back(vm1);
        return pts;
    };

    if (left_of_v && above_l1) {
        if (orientation(vm3, vm2, un2) == Orientation::Left) {
            std::vector<Point> pts(v.begin(), v.end() - 1);
            pts.push_back(un2);
            pts.push_back(un1);
            return Witness::cup(make_chain_or_fail(ChainKind::Cup, std::move(pts), "cup:a1"),
                                "cup:a1");
        }
        if (orientation(un3, un2, vm1) == Orientation::Left)
            return Witness::polygon(make_polygon_or_fail(polygon_points(), "cup:a2"), "cup:a2");
        return Witness::cap(make_chain_or_fail(ChainKind::Cap, {un3, un2, vm1, r}, "cup:a3"),
                            "cup:a3");
    }
    if (left_of_v) {
        if (orientation(un2, un1, vm1) == Orientation::Left)
            return Witness::polygon(make_polygon_or_fail(polygon_points(), "cup:b1"), "cup:b1");
        return Witness::cap(make_chain_or_fail(ChainKind::Cap, {un2, un1, vm1, r}, "cup:b2"),
                            "cup:b2");
    }
    if (above_l1) {
        std::vector<Point> pts(v.begin(), v.end());
        pts.push_back(un1);
        return Witness::cup(make_chain_or_fail(ChainKind::Cup, std::move(pts), "cup:c"), "cup:c");
    }
    return Witness::polygon(make_polygon_or_fail(polygon_points(), "cup:d"), "cup:d");
}

Witness resolve_cap_base(const CertNode& node, const Chain& cup) {
    const auto& v = node.base_chain->points(); // the (l-1)-cap
    const Point& v1 = v[0];                    // == node.s
    const Point& v2 = v[1];
    const Point& r = *node.flank;
    const auto& u = cup.points();
    const std::size_t n = u.size() + 1;
    const Point& un1 = u[u.size() - 1];
    const Point& un2 = u[u.size() - 2];
    const Point& un3 = u[u.size() - 3];

    // Shortcut: an interior point of the external cup inside the host
    // closes a 4-cup immediately.
    for (std::size_t i = 2; i + 3 <= n; ++i) {
        const Point& ui = u[i - 1];
        if (node.host.contains(ui))
            return Witness::cup(
                make_chain_or_fail(ChainKind::Cup, {v1, ui, un2, un1}, "cap:shortcut1"),
                "cap:shortcut1");
    }
    if (un2 == v2)
        return Witness::cup(make_chain_or_fail(ChainKind::Cup, {r, v1, v2, un1}, "cap:shortcut2"),
                            "cap:shortcut2");

    const bool left_of_v2 = un1.x < v2.x;
    const bool above_m1 = orientation(v1, v2, un1) == Orientation::Left;

    auto polygon_points = [&] {
        for (const Point& p : u)
            if (p == v2) resolution_failure("cap-base", "external cup passes through v2");
        std::vector<Point> pts = u;
        pts.push_back(v2);
        return pts;
    };
    auto cap_tail = [&](const Point& a, const Point& b, const std::string& label) {
        std::vector<Point> pts{a, b};
        for (std::size_t i = 1; i < v.size(); ++i) pts.push_back(v[i]);
        return make_chain_or_fail(ChainKind::Cap, std::move(pts), label);
    };

    if (left_of_v2 && above_m1) {
        if (orientation(v1, v2, un2) == Orientation::Left)
            return Witness::cup(make_chain_or_fail(ChainKind::Cup, {r, v1, un2, un1}, "cap:a1"),
                                "cap:a1");
        if (orientation(un3, un2, v2) == Orientation::Left)
            return Witness::polygon(make_polygon_or_fail(polygon_points(), "cap:a2"), "cap:a2");
        return Witness::cap(cap_tail(un3, un2, "cap:a3"), "cap:a3");
    }
    if (left_of_v2) {
        if (orientation(un2, un1, v2) == Orientation::Left)
            return Witness::polygon(make_polygon_or_fail(polygon_points(), "cap:b1"), "cap:b1");
        return Witness::cap(cap_tail(un2, un1, "cap:b2"), "cap:b2");
    }
    if (above_m1)
        return Witness::cup(make_chain_or_fail(ChainKind::Cup, {r, v1, v2, un1}, "cap:c"),
                            "cap:c");
    return Witness::polygon(make_polygon_or_fail(polygon_points(), "cap:d"), "cap:d");
}

Witness resolve_node(const CertNode& node, const PointSet& b, const Chain& cup) {
    check_resolve_preconditions(node, b, cup);
    const std::size_t n = cup.size() + 1;

    Witness w = [&] {
        switch (node.kind) {
        case Certificate::Kind::CupBase: return resolve_cup_base(node, cup);
        case Certificate::Kind::CapBase: return resolve_cap_base(node, cup);
        case Certificate::Kind::UpperLift:
        case Certificate::Kind::LowerLift: {
            const bool upper = node.kind == Certificate::Kind::UpperLift;
            const PointSet& inner_host = upper ? node.part->upper() : node.part->lower();
            std::vector<Point> outside;
            for (const Point& p : cup.points())
                if (!inner_host.contains(p)) outside.push_back(p);
            PointSet bprime = PointSet::from_sorted_trusted(std::move(outside));
            Witness got = resolve_node(*node.inner, bprime, cup);
            if (upper && got.kind == Witness::Kind::Cap) {
                Chain extended = extend_chain(*node.part, b, *got.chain);
                return Witness::cap(std::move(extended), got.label + " +upper:converted");
            }
            if (!upper && got.kind == Witness::Kind::Cup) {
                Chain extended = extend_chain(*node.part, b, *got.chain);
                return Witness::cup(std::move(extended), got.label + " +lower:converted");
            }
            got.label += upper ? " +upper:passed" : " +lower:passed";
            return got;
        }
        }
        throw Error(ErrorCode::InternalFailure, "unreachable certificate kind");
    }();

    verify_witness(w, node, n);
    return w;
}

} // namespace

Certificate base_certificate(const PointSet& s, int m, int l, BaseSide side) {
    Certificate cert = base_certificate_impl(s, m, l, side, true);
    cert.reconstruct_cap(); // certificate self-check
    return cert;
}

Certificate find_certificate(const PointSet& s, int m, int l) {
    if (m < 4 || l < 4)
        throw Error(ErrorCode::ContractViolation, "find_certificate needs m, l >= 4");
    if (BigInt(s.size()) <= g_value(m, l))
        throw Error(ErrorCode::BoundNotMet, "need more than g(m,l) = " + g_value(m, l).str() +
                                                " points, got " + std::to_string(s.size()));
    ensure_free(s, m, l);
    Certificate cert = find_certificate_impl(s, m, l);
    cert.reconstruct_cap();
    return cert;
}

Witness resolve(const Certificate& cert, const PointSet& b, const Chain& cup) {
    try {
        merge_validated(b, cert.host());
    } catch (const Error& e) {
        throw Error(ErrorCode::ContractViolation,
                    std::string("B and the host are not jointly valid: ") + e.what());
    }
    return detail::resolve_trusted(cert, b, cup);
}

namespace detail {

Certificate find_certificate_trusted(const PointSet& s, int m, int l) {
    if (m < 4 || l < 4)
        throw Error(ErrorCode::ContractViolation, "find_certificate needs m, l >= 4");
    if (BigInt(s.size()) <= g_value(m, l))
        throw Error(ErrorCode::BoundNotMet, "need more than g(m,l) points");
    return find_certificate_impl(s, m, l);
}

Witness resolve_trusted(const Certificate& cert, const PointSet& b, const Chain& cup) {
    return resolve_node(*node_ptr(cert), b, cup);
}

} // namespace detail

} // namespace cupcap
