#pragma once

#include "helly/rational.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace helly {

// Quadratic irrational a + b*sqrt(D) over the rationals, for a single
// positive square-free radicand D. All predicates are exact: signs are
// decided by squaring and comparing, never through floating point.
class Surd {
public:
    Surd() : rat_(0), coef_(0), rad_(2) {}
    Surd(Rational rationalPart, Rational surdPart, BigInt radicand)
        : rat_(std::move(rationalPart)), coef_(std::move(surdPart)), rad_(std::move(radicand)) {
        checkRadicand(rad_);
    }
    static Surd fromRational(Rational r, BigInt radicand) {
        return Surd(std::move(r), Rational(0), std::move(radicand));
    }

    const Rational& rationalPart() const { return rat_; }
    const Rational& surdPart() const { return coef_; }
    const BigInt& radicand() const { return rad_; }

    // sign of a + b*sqrt(D): when a and b disagree in sign the decision
    // reduces to comparing a^2 with b^2 D.
    int sign() const {
        int sa = rat_.sign(), sb = coef_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational lhs = rat_ * rat_;
        Rational rhs = coef_ * coef_ * Rational(rad_);
        auto c = lhs <=> rhs;
        if (c == std::strong_ordering::equal) return 0;  // only if D were square
        bool ratWins = c == std::strong_ordering::greater;
        return ratWins ? sa : sb;
    }

    friend Surd operator+(const Surd& x, const Surd& y) {
        requireSameRadicand(x, y);
        return Surd(x.rat_ + y.rat_, x.coef_ + y.coef_, x.rad_);
    }
    friend Surd operator-(const Surd& x, const Surd& y) {
        requireSameRadicand(x, y);
        return Surd(x.rat_ - y.rat_, x.coef_ - y.coef_, x.rad_);
    }
    friend Surd operator*(const Surd& x, const Surd& y) {
        requireSameRadicand(x, y);
        return Surd(x.rat_ * y.rat_ + x.coef_ * y.coef_ * Rational(x.rad_),
                    x.rat_ * y.coef_ + x.coef_ * y.rat_, x.rad_);
    }
    Surd operator-() const { return Surd(-rat_, -coef_, rad_); }
    Surd scaled(const Rational& r) const { return Surd(rat_ * r, coef_ * r, rad_); }

    int compare(const Surd& other) const {
        requireSameRadicand(*this, other);
        return (*this - other).sign();
    }
    int compare(const Rational& r) const { return Surd(rat_ - r, coef_, rad_).sign(); }

    bool operator<(const Surd& o) const { return compare(o) < 0; }
    bool operator==(const Surd& o) const { return compare(o) == 0; }

    // Exact floor: a float estimate corrected by exact comparisons.
    BigInt floor() const {
        double est = rat_.toDouble() + coef_.toDouble() * std::sqrt(rad_.convert_to<double>());
        if (!(est > -9e15 && est < 9e15))
            throw std::overflow_error("Surd::floor: value out of supported range");
        BigInt k(static_cast<long long>(std::llround(est)));
        while (compare(Rational(k)) < 0) --k;          // k <= value
        while (compare(Rational(k + 1)) >= 0) ++k;     // value < k+1
        return k;
    }
    BigInt ceil() const { return -(-*this).floor(); }

    // Wire format "a/b+c/d*sqrt(D)", denominators always written.
    std::string str() const {
        auto frac = [](const Rational& r) { return r.num().str() + "/" + r.den().str(); };
        return frac(rat_) + (coef_.sign() < 0 ? "-" : "+") + frac(coef_.abs()) +
               "*sqrt(" + rad_.str() + ")";
    }

    static Surd parse(std::string_view text);

    double toDouble() const {
        return rat_.toDouble() + coef_.toDouble() * std::sqrt(rad_.convert_to<double>());
    }

private:
    Rational rat_, coef_;
    BigInt rad_;

    static void requireSameRadicand(const Surd& x, const Surd& y) {
        if (x.rad_ != y.rad_)
            throw std::domain_error("Surd: mismatched radicands " + x.rad_.str() + " vs " + y.rad_.str());
    }

    static void checkRadicand(const BigInt& d) {
        if (d <= 1) throw std::domain_error("Surd: radicand must be > 1");
        // square-free check by trial division; radicands in practice are tiny
        BigInt n = d;
        for (BigInt p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) throw std::domain_error("Surd: radicand " + d.str() + " is not square-free");
            }
        }
    }
};

// Exact three-way comparison of two surds over the same radicand.
inline int surdCompare(const Surd& x, const Surd& y) { return x.compare(y); }

inline Surd Surd::parse(std::string_view text) {
    // grammar: a/b+c/d*sqrt(D) with '-' also accepted before the surd term
    size_t star = text.find("*sqrt(");
    if (star == std::string_view::npos || text.back() != ')')
        throw std::domain_error("Surd::parse: expected a/b+c/d*sqrt(D)");
    std::string_view radTxt = text.substr(star + 6, text.size() - star - 7);
    // split the leading rational from the signed surd coefficient: find the
    // last '+' or '-' before '*sqrt(' that is not a leading sign
    size_t split = std::string_view::npos;
    for (size_t i = star; i-- > 1;) {
        if (text[i] == '+' || text[i] == '-') {
            char prev = text[i - 1];
            if (prev != '+' && prev != '-' && prev != '/') {
                split = i;
                break;
            }
        }
    }
    if (split == std::string_view::npos) throw std::domain_error("Surd::parse: missing sign separator");
    Rational a = Rational::parse(text.substr(0, split));
    Rational b = Rational::parse(text.substr(split + 1, star - split - 1));
    if (text[split] == '-') b = -b;
    BigInt d{std::string(radTxt)};
    return Surd(std::move(a), std::move(b), std::move(d));
}

}  // namespace helly
