#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace efxpo {

using BigInt = boost::multiprecision::cpp_int;

/// Exact signed rational in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) == 1. The only numeric carrier for
/// valuations and utilities; there is no floating-point path.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);  // normalizes; throws on den == 0

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

/// Exact three-way comparison via cross-multiplication: -1, 0, or +1.
int compare(const Rational& a, const Rational& b);

/// Exact ceil(k * v) for k >= 0 and v > 0, computed as (k*a + b - 1) div b
/// where v = a/b. Never rounds.
BigInt ceil_mul(const BigInt& k, const Rational& v);

/// Accepted forms: "123", "-4", "a/b" with positive b, and finite decimals
/// like "0.25" (converted exactly, no binary float intermediate).
/// Anything else (including "3/0" and exponent notation) throws ParseError.
Rational parse_rational(std::string_view text);

/// "num" when the value is integral, otherwise "num/den".
std::string to_string(const Rational& value);

}  // namespace efxpo
