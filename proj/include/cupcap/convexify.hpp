#pragma once

#include "cupcap/chain.hpp"
#include "cupcap/geometry.hpp"
#include "cupcap/partition.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cupcap {

// Outcome of resolving a certificate: an m-cup whose two leftmost points
// lie in the certificate's host set, an l-cap whose two rightmost points
// do, or a convex n-gon. The label records the case analysis path that
// produced it (base case plus any lift conversions).
struct Witness {
    enum class Kind { Cup, Cap, Polygon };

    Kind kind;
    std::optional<Chain> chain;        // Cup / Cap
    std::optional<ConvexPolygon> poly; // Polygon
    std::string label;

    static Witness cup(Chain c, std::string label);
    static Witness cap(Chain c, std::string label);
    static Witness polygon(ConvexPolygon p, std::string label);
};

class Certificate;

namespace detail {

struct CertNode;

Certificate make_certificate(std::shared_ptr<const CertNode> node);
std::shared_ptr<const CertNode> node_ptr(const Certificate& cert);

// Internals shared with the pipeline: skip the freeness pre-check (the
// caller established it once for a superset) and the joint revalidation
// of B-union-host (the union is a subset of an already validated set).
Certificate find_certificate_trusted(const PointSet& s, int m, int l);
Witness resolve_trusted(const Certificate& cert, const PointSet& b, const Chain& cup);

} // namespace detail

// A resolvable proof object for a convexifying point s of an (m,l)-free
// host set: s is the leftmost point of an (l-1)-cap in the host, and any
// external (n-1)-cup leaving s forces one of the three witnesses above.
// Base nodes carry the concrete cup/cap-plus-flank construction; lift
// nodes carry the host's partition and a certificate on one part.
class Certificate {
public:
    enum class Kind { CupBase, CapBase, UpperLift, LowerLift };

    Kind kind() const;
    int m() const;
    int l() const;
    const PointSet& host() const;
    const Point& point() const; // the convexifying point s

    // Base accessors (ContractViolation on lift nodes).
    const Chain& base_chain() const; // (m-1)-cup or (l-1)-cap in host
    const Point& flank() const;      // r: right of the cup / left of the cap

    // Lift accessors (ContractViolation on base nodes).
    const Partition& partition() const;
    Certificate inner() const;

    // The (l-1)-cap in the host whose leftmost point is s, rebuilt from
    // the node structure and validated.
    Chain reconstruct_cap() const;

    // Human-readable tree with case provenance per node.
    void describe(std::ostream& os, int indent = 0) const;
    std::string describe() const;

private:
    friend Certificate detail::make_certificate(std::shared_ptr<const detail::CertNode> node);
    friend std::shared_ptr<const detail::CertNode> detail::node_ptr(const Certificate& cert);

    explicit Certificate(std::shared_ptr<const detail::CertNode> node) : node_(std::move(node)) {}

    std::shared_ptr<const detail::CertNode> node_;
};

enum class BaseSide { CupSide, CapSide };

// Base-case certificate for an (m,l)-free host: CupSide (l must be 4)
// drops the rightmost point and finds an (m-1)-cup left of it; CapSide
// (m must be 4) mirrors with the leftmost point and an (l-1)-cap.
// Throws NotFree when the host already contains an m-cup or l-cap, and
// TooSmall at or below the size threshold C(m-1,2)+1 resp. C(l-1,2)+1.
Certificate base_certificate(const PointSet& s, int m, int l, BaseSide side);

// Certificate for any (m,l)-free host with more than
// g(m,l) = C(m+l-4, l-2) - C(m+l-6, l-3) points, by double induction:
// base cases via base_certificate, otherwise a lift into whichever
// partition part exceeds its own bound (upper preferred).
Certificate find_certificate(const PointSet& s, int m, int l);

// resolve(cert, b, cup): cup is a validated (n-1)-cup in b-union-host
// (n >= 4) whose left endpoint is cert's point and right endpoint lies in
// b, with b disjoint from the host. Returns a validated witness whose
// side conditions hold relative to the host. ResolutionFailure signals a
// branch-analysis bug and must never fire.
Witness resolve(const Certificate& cert, const PointSet& b, const Chain& cup);

} // namespace cupcap
