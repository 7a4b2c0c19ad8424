#pragma once

#include "helly/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace testsupport {

// Deterministic generator so failures replay exactly on any platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t n) { return next() % n; }

    long long intIn(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // rational in [lo, hi] with denominator at most maxDen
    helly::Rational rationalIn(long long lo, long long hi, long long maxDen) {
        long long den = intIn(1, maxDen);
        long long num = intIn(lo * den, hi * den);
        return helly::Rational(helly::BigInt(num), helly::BigInt(den));
    }

private:
    uint64_t state_;
};

// floor(x^(1/k)) by Newton iteration; x >= 0, k >= 1
inline helly::BigInt nthRootFloor(const helly::BigInt& x, unsigned k) {
    using helly::BigInt;
    if (x < 0 || k == 0) throw std::invalid_argument("nthRootFloor: bad arguments");
    if (x == 0 || x == 1 || k == 1) return x;
    BigInt r = BigInt(1) << (boost::multiprecision::msb(x) / k + 1);
    while (true) {
        BigInt next = ((k - 1) * r + x / boost::multiprecision::pow(r, k - 1)) / k;
        if (next >= r) break;
        r = next;
    }
    while (boost::multiprecision::pow(r, k) > x) --r;
    while (boost::multiprecision::pow(r + 1, k) <= x) ++r;
    return r;
}

}  // namespace testsupport
