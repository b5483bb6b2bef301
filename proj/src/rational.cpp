#include "efxpo/rational.hpp"

#include <cctype>
#include <utility>

#include "efxpo/errors.hpp"

namespace efxpo {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::invalid_argument("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw std::invalid_argument("rational division by zero");
    }
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = compare(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

int compare(const Rational& a, const Rational& b) {
    // denominators are positive, so the cross product preserves order
    BigInt lhs = a.num() * b.den();
    BigInt rhs = b.num() * a.den();
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

BigInt ceil_mul(const BigInt& k, const Rational& v) {
    if (k < 0 || !v.is_positive()) {
        throw std::invalid_argument("ceil_mul requires k >= 0 and v > 0");
    }
    return (k * v.num() + v.den() - 1) / v.den();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt digits_to_bigint(std::string_view s) {
    return BigInt(std::string(s));
}

BigInt pow10(std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    auto fail = [&] { throw ParseError("malformed rational: '" + std::string(text) + "'"); };

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail();
        BigInt d = digits_to_bigint(den);
        if (d.is_zero()) fail();
        BigInt n = digits_to_bigint(num);
        return Rational(negative ? -n : n, d);
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) fail();
        BigInt scale = pow10(frac.size());
        BigInt n = digits_to_bigint(whole) * scale + digits_to_bigint(frac);
        return Rational(negative ? -n : n, scale);
    }

    if (!all_digits(s)) fail();
    BigInt n = digits_to_bigint(s);
    return Rational(negative ? -n : n, 1);
}

std::string to_string(const Rational& value) {
    if (value.is_integer()) {
        return value.num().str();
    }
    return value.num().str() + "/" + value.den().str();
}

}  // namespace efxpo
