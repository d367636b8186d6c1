#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cupcap {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always stored in lowest terms with a positive
// denominator; all arithmetic and comparisons are exact. Nothing on a
// decision path ever goes through floating point.
class Scalar {
public:
    Scalar() : num_(0), den_(1) {}
    Scalar(int v) : num_(v), den_(1) {}
    Scalar(long long v) : num_(v), den_(1) {}
    Scalar(BigInt v) : num_(std::move(v)), den_(1) {}
    Scalar(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws on division by zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Scalar& o) const;

    Scalar abs() const { return num_ < 0 ? -*this : *this; }

    // For SVG emission and test oracles only.
    double to_double() const;

    // "p" or "p/q"; q must be a positive integer.
    static Scalar parse(std::string_view text);
    std::string str() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_; // > 0
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// C(n, k) as an exact big integer; zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

} // namespace cupcap
