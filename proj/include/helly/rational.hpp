#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace helly {

using BigInt = boost::multiprecision::cpp_int;

// floor(a/b) for b != 0, rounding toward -infinity.
inline BigInt floorDiv(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("floorDiv: zero divisor");
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt ceilDiv(const BigInt& a, const BigInt& b) {
    return -floorDiv(-a, b);
}

// Exact rational scalar. Canonical form is maintained as a class invariant:
// gcd(num, den) == 1 and den >= 1. Zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool isZero() const { return num_ == 0; }
    bool isInteger() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    // Comparison by cross multiplication; denominators are positive.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt l = a.num_ * b.den_;
        BigInt r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    BigInt floor() const { return floorDiv(num_, den_); }
    BigInt ceil() const { return ceilDiv(num_, den_); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Integral power; exponent >= 0.
    Rational pow(unsigned e) const {
        Rational acc(1), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    // Canonical string: "n" for integers, "n/d" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Parses "n" or "n/d". Canonical form is required: rejects d <= 0 and
    // gcd(n, d) > 1 so that serialized values round-trip bit-exactly.
    static Rational parse(std::string_view text);

    double toDouble() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rational Rational::parse(std::string_view text) {
    auto parseInt = [](std::string_view s) -> BigInt {
        if (s.empty()) throw std::domain_error("Rational::parse: empty integer");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::domain_error("Rational::parse: sign only");
        for (size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw std::domain_error("Rational::parse: bad digit in '" + std::string(s) + "'");
        if (s[0] == '+') s.remove_prefix(1);
        return BigInt(std::string(s));
    };
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parseInt(text));
    BigInt n = parseInt(text.substr(0, slash));
    BigInt d = parseInt(text.substr(slash + 1));
    if (d <= 0) throw std::domain_error("Rational::parse: denominator must be positive");
    BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
    if (n == 0 ? d != 1 : g != 1)
        throw std::domain_error("Rational::parse: '" + std::string(text) + "' is not canonical");
    Rational r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

}  // namespace helly
