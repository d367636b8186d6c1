#include "cupcap/bounds.hpp"

#include "cupcap/errors.hpp"

#include <sstream>

namespace cupcap {

BigInt f_bound(int m, int l) {
    if (m < 3 || l < 3) throw Error(ErrorCode::ContractViolation, "f_bound needs m, l >= 3");
    return binomial(m + l - 4, l - 2);
}

BigInt g_bound(int m, int l) {
    if (m < 4 || l < 4) throw Error(ErrorCode::ContractViolation, "g_bound needs m, l >= 4");
    return binomial(m + l - 4, l - 2) - binomial(m + l - 6, l - 3);
}

std::string BoundsReport::tsv_header() {
    return "n\tf_diag\tg_val\tp_upper\tes_upper_new\tes_upper_es35\tes_upper_tv98\t"
           "es_upper_vlachos\tes_lower";
}

std::string BoundsReport::tsv_row() const {
    std::ostringstream ss;
    ss << n << '\t' << f_diag << '\t' << g_val << '\t' << p_upper << '\t' << es_upper_new << '\t'
       << es_upper_es35 << '\t' << es_upper_tv98 << '\t' << es_upper_vlachos << '\t' << es_lower;
    return ss.str();
}

BoundsReport bounds_report(int n) {
    if (n < 6) throw Error(ErrorCode::ContractViolation, "bounds_report needs n >= 6");
    BoundsReport r;
    r.n = n;
    r.f_diag = f_bound(n - 1, n - 1);
    r.g_val = g_bound(n, n - 2);
    r.p_upper = r.f_diag + r.g_val + 1;
    r.es_upper_new = binomial(2 * n - 5, n - 2) - binomial(2 * n - 8, n - 3) + 2;
    r.es_upper_es35 = binomial(2 * n - 4, n - 2) + 1;
    r.es_upper_tv98 = binomial(2 * n - 5, n - 2) + 2;
    r.es_upper_vlachos =
        binomial(2 * n - 5, n - 2) - binomial(2 * n - 8, n - 3) + binomial(2 * n - 10, n - 3) + 2;
    r.es_lower = BigInt(1) << (n - 2);
    r.es_lower += 1;

    if (r.es_upper_new != r.p_upper + 1)
        throw Error(ErrorCode::InternalFailure, "bound ladder broke: es_upper_new != p_upper + 1");
    if (!(r.es_lower <= r.es_upper_new && r.es_upper_new <= r.es_upper_vlachos &&
          r.es_upper_vlachos <= r.es_upper_tv98 && r.es_upper_tv98 <= r.es_upper_es35))
        throw Error(ErrorCode::InternalFailure, "bound ladder is out of order");
    return r;
}

} // namespace cupcap
