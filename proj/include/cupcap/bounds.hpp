#pragma once

#include "cupcap/scalar.hpp"

#include <string>

namespace cupcap {

// Largest size of a set with no m-cup and no l-cap: C(m+l-4, l-2).
BigInt f_bound(int m, int l);

// g(m,l) = C(m+l-4, l-2) - C(m+l-6, l-3); an (m,l)-free set larger than
// this always has a convexifying point. Requires m, l >= 4.
BigInt g_bound(int m, int l);

// The bound ladder for convex n-gons, all exact.
struct BoundsReport {
    int n = 0;
    BigInt f_diag;          // f(n-1, n-1)
    BigInt g_val;           // g(n, n-2)
    BigInt p_upper;         // f(n-1,n-1) + g(n,n-2) + 1
    BigInt es_upper_new;    // C(2n-5,n-2) - C(2n-8,n-3) + 2
    BigInt es_upper_es35;   // C(2n-4,n-2) + 1
    BigInt es_upper_tv98;   // C(2n-5,n-2) + 2
    BigInt es_upper_vlachos;// C(2n-5,n-2) - C(2n-8,n-3) + C(2n-10,n-3) + 2
    BigInt es_lower;        // 2^(n-2) + 1

    std::string tsv_row() const;
    static std::string tsv_header();
};

// Requires n >= 6. The ordering chain
// es_lower <= es_upper_new <= es_upper_vlachos <= es_upper_tv98 <= es_upper_es35
// is asserted before returning.
BoundsReport bounds_report(int n);

} // namespace cupcap
