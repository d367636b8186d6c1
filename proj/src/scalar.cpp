#include "cupcap/scalar.hpp"

#include "cupcap/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>

namespace cupcap {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::VerticalPair: return "VerticalPair";
    case ErrorCode::CollinearTriple: return "CollinearTriple";
    case ErrorCode::CollinearThroughS: return "CollinearThroughS";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NotXSorted: return "NotXSorted";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoSharedPoint: return "NoSharedPoint";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::BoundNotMet: return "BoundNotMet";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::ContractViolation: return "ContractViolation";
    case ErrorCode::ResolutionFailure: return "ResolutionFailure";
    case ErrorCode::InternalFailure: return "InternalFailure";
    case ErrorCode::DegenerateSetup: return "DegenerateSetup";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownOverlay: return "UnknownOverlay";
    }
    return "UnknownError";
}

Scalar::Scalar(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorCode::ContractViolation, "zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw Error(ErrorCode::ContractViolation, "division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Scalar::to_double() const {
    boost::multiprecision::cpp_rational q(num_, den_);
    return q.convert_to<double>();
}

Scalar Scalar::parse(std::string_view text) {
    auto bad = [&] { throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view part, bool allow_sign) {
        if (part.empty()) bad();
        std::size_t i = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
        if (i == part.size()) bad();
        for (std::size_t j = i; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9') bad();
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos) {
        return Scalar(parse_int(text, true));
    }
    BigInt num = parse_int(text.substr(0, slash), true);
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den.is_zero()) bad();
    return Scalar(std::move(num), std::move(den));
}

std::string Scalar::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact at every step: result is C(n-k+i, i)
    }
    return result;
}

} // namespace cupcap
