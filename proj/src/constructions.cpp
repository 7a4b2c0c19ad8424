#include "helly/constructions.hpp"

#include "helly/linear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace helly {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool isPrime64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : kWitnesses)
        if (n % p == 0) return n == p;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this witness set decides primality exactly for all n < 3.3e24
    for (uint64_t a : kWitnesses) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

namespace {

constexpr uint64_t kSegmentOdds = 1u << 20;  // odd flags per sieve block

// primes in [segLo, segHi], both odd, marked against the odd base primes
void sieveSegment(uint64_t segLo, uint64_t segHi, const std::vector<uint32_t>& base,
                  std::vector<uint64_t>& out) {
    size_t count = static_cast<size_t>((segHi - segLo) / 2 + 1);
    std::vector<bool> composite(count, false);
    for (uint32_t p : base) {
        uint64_t start = static_cast<uint64_t>(p) * p;
        if (start < segLo) {
            uint64_t m = (segLo + p - 1) / p;
            if ((m & 1) == 0) ++m;
            start = m * p;
        }
        for (uint64_t v = start; v <= segHi; v += 2ull * p)
            composite[static_cast<size_t>((v - segLo) / 2)] = true;
    }
    for (size_t i = 0; i < count; ++i)
        if (!composite[i]) out.push_back(segLo + 2 * i);
}

}  // namespace

void sieveRange(uint64_t lo, uint64_t hi, const std::function<void(uint64_t)>& f,
                unsigned threads) {
    if (hi > (1ull << 32)) throw ScaleError("sieveRange: bound above 2^32");
    if (lo > hi) return;

    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi)));
    while (root * root > hi) --root;
    while ((root + 1) * (root + 1) <= hi) ++root;
    std::vector<uint32_t> base;
    {
        std::vector<bool> composite(root + 1, false);
        for (uint64_t i = 3; i * i <= root; i += 2)
            if (!composite[i])
                for (uint64_t j = i * i; j <= root; j += 2 * i) composite[j] = true;
        for (uint64_t i = 3; i <= root; i += 2)
            if (!composite[i]) base.push_back(static_cast<uint32_t>(i));
    }

    if (lo <= 2 && 2 <= hi) f(2);
    uint64_t from = std::max<uint64_t>(lo, 3);
    if ((from & 1) == 0) ++from;
    if (from > hi) return;

    std::vector<std::pair<uint64_t, uint64_t>> segments;
    for (uint64_t s = from; s <= hi; s += 2 * kSegmentOdds)
        segments.push_back({s, std::min(hi, s + 2 * (kSegmentOdds - 1))});
    if ((segments.back().second & 1) == 0) --segments.back().second;

    if (threads <= 1) {
        std::vector<uint64_t> primes;
        for (auto [a, b] : segments) {
            primes.clear();
            sieveSegment(a, b, base, primes);
            for (uint64_t p : primes) f(p);
        }
        return;
    }

    unsigned pool = std::min<unsigned>(threads, 64);
    for (size_t round = 0; round < segments.size(); round += pool) {
        size_t batch = std::min<size_t>(pool, segments.size() - round);
        std::vector<std::vector<uint64_t>> results(batch);
        std::vector<std::thread> workers;
        for (size_t t = 0; t < batch; ++t)
            workers.emplace_back([&, t] {
                sieveSegment(segments[round + t].first, segments[round + t].second, base,
                             results[t]);
            });
        for (auto& w : workers) w.join();
        for (const auto& rs : results)
            for (uint64_t p : rs) f(p);
    }
}

std::vector<uint64_t> primeWindow(uint64_t lo, uint64_t hi, unsigned threads) {
    std::vector<uint64_t> out;
    sieveRange(lo, hi, [&](uint64_t p) { out.push_back(p); }, threads);
    return out;
}

std::vector<BigInt> polynomialSet(const std::vector<Rational>& coeffs, long long lo, long long hi) {
    if (coeffs.empty()) throw std::invalid_argument("polynomialSet: no coefficients");
    if (lo > hi) throw std::invalid_argument("polynomialSet: empty range");
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(hi - lo + 1));
    for (long long n = lo; n <= hi; ++n) {
        Rational v(0);
        for (size_t i = coeffs.size(); i-- > 0;) v = v * Rational(n) + coeffs[i];
        if (!v.isInteger())
            throw std::domain_error("polynomialSet: value at n = " + std::to_string(n) +
                                    " is not an integer");
        out.push_back(v.num());
    }
    return out;
}

std::vector<BigInt> powerSet(const std::optional<BigInt>& base,
                             const std::optional<unsigned>& exponent, long long lo, long long hi) {
    if (base.has_value() == exponent.has_value())
        throw std::invalid_argument("powerSet: exactly one of base or exponent must be given");
    if (lo > hi) throw std::invalid_argument("powerSet: empty range");
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(hi - lo + 1));
    if (base) {
        if (*base == 0) throw std::domain_error("powerSet: zero base");
        if (lo < 0) throw std::domain_error("powerSet: negative exponent is not an integer power");
        BigInt v = boost::multiprecision::pow(*base, static_cast<unsigned>(lo));
        for (long long n = lo; n <= hi; ++n) {
            out.push_back(v);
            v *= *base;
        }
    } else {
        for (long long n = lo; n <= hi; ++n)
            out.push_back(boost::multiprecision::pow(BigInt(n), *exponent));
    }
    return out;
}

namespace {

Halfspace intHalfspace(std::vector<long long> a, long long c) {
    std::vector<Rational> n;
    n.reserve(a.size());
    for (long long v : a) n.emplace_back(v);
    return Halfspace(std::move(n), Rational(c));
}

void addHalfplaneSet(FamilyInstance& F, std::string name, std::vector<long long> a, long long c) {
    F.sets.push_back({std::move(name), Polyhedron(F.dim, {intHalfspace(std::move(a), c)})});
}

}  // namespace

FamilyInstance figure1Family() {
    FamilyInstance F;
    F.dim = 2;
    addHalfplaneSet(F, "west", {-1, 0}, 1);
    addHalfplaneSet(F, "east", {1, 0}, 1);
    addHalfplaneSet(F, "upper-left", {-1, 2}, 2);
    addHalfplaneSet(F, "lower-left", {-1, -2}, 2);
    addHalfplaneSet(F, "upper-right", {1, 2}, 2);
    addHalfplaneSet(F, "lower-right", {1, -2}, 2);
    return F;
}

FamilyInstance hypercubeFamily(size_t d, const Rational& t) {
    if (d < 1 || d > 3) throw std::invalid_argument("hypercubeFamily: dimension must be 1..3");
    if (t.sign() < 0) throw std::invalid_argument("hypercubeFamily: negative side length");
    FamilyInstance F;
    F.dim = d;
    for (size_t i = 0; i < d; ++i) {
        std::vector<Rational> lo(d), hifs(d);
        lo[i] = Rational(-1);
        hifs[i] = Rational(1);
        F.sets.push_back({"lo-" + std::to_string(i + 1),
                          Polyhedron(d, {Halfspace(std::move(lo), Rational(0))})});
        F.sets.push_back(
            {"hi-" + std::to_string(i + 1), Polyhedron(d, {Halfspace(std::move(hifs), t)})});
    }
    return F;
}

FamilyInstance crossPolytopeFamily(size_t d) {
    if (d < 1 || d > 3) throw std::invalid_argument("crossPolytopeFamily: dimension must be 1..3");
    FamilyInstance F;
    F.dim = d;
    for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
        std::vector<long long> a(d);
        std::string name = "face";
        for (size_t i = 0; i < d; ++i) {
            a[i] = (mask >> i) & 1 ? 1 : -1;
            name += a[i] > 0 ? '+' : '-';
        }
        F.sets.push_back({std::move(name), Polyhedron(d, {intHalfspace(std::move(a), 1)})});
    }
    return F;
}

FamilyInstance cubeVertexFamily(size_t d) {
    if (d < 1 || d > 3) throw std::invalid_argument("cubeVertexFamily: dimension must be 1..3");
    FamilyInstance F;
    F.dim = d;
    for (size_t drop = 0; drop < (size_t(1) << d); ++drop) {
        std::vector<Halfspace> hs;
        std::string name = "drop-";
        long long zeros = 0;
        std::vector<long long> cut(d);
        for (size_t i = 0; i < d; ++i) {
            std::vector<long long> lo(d, 0), hi(d, 0);
            lo[i] = -1;
            hi[i] = 1;
            hs.push_back(intHalfspace(std::move(lo), 0));
            hs.push_back(intHalfspace(std::move(hi), 1));
            bool bit = (drop >> i) & 1;
            name += bit ? '1' : '0';
            cut[i] = bit ? 1 : -1;
            zeros += bit ? 0 : 1;
        }
        // the facet separating the dropped vertex: its cube neighbors span it
        hs.push_back(intHalfspace(std::move(cut), static_cast<long long>(d) - 1 - zeros));
        F.sets.push_back({std::move(name), Polyhedron(d, std::move(hs))});
    }
    return F;
}

namespace {

Surd surdInverse(const Surd& s) {
    // 1/(a + b sqrt(D)) = (a - b sqrt(D)) / (a^2 - b^2 D)
    Rational den = s.rationalPart() * s.rationalPart() -
                   s.surdPart() * s.surdPart() * Rational(s.radicand());
    if (den.isZero()) throw std::domain_error("surd inverse: zero norm");
    return Surd(s.rationalPart() / den, -s.surdPart() / den, s.radicand());
}

long long toWindow(const BigInt& v, const char* who) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw ScaleError(std::string(who) + ": coordinate out of range");
    return v.convert_to<long long>();
}

constexpr long long kWindowCap = 200'000'000;

unsigned long long stripColumnBudget() { return 4'000'000ull * scaleGuardFactor(); }

}  // namespace

std::vector<Convergent> dirichletConvergents(const Surd& alpha, size_t count) {
    if (alpha.surdPart().isZero())
        throw std::domain_error("dirichletConvergents: alpha is rational");
    if (alpha.compare(Rational(2)) <= 0)
        throw std::domain_error("dirichletConvergents: alpha must exceed 2");
    std::vector<Convergent> out;
    BigInt pPrev = 1, pPrev2 = 0, qPrev = 0, qPrev2 = 1;
    Surd x = alpha;
    size_t guard = 64 * count + 256;
    std::optional<Rational> lastRatio;
    while (out.size() < count) {
        if (guard-- == 0)
            throw std::logic_error("dirichletConvergents: expansion did not settle");
        BigInt a = x.floor();
        BigInt p = a * pPrev + pPrev2;
        BigInt q = a * qPrev + qPrev2;
        pPrev2 = pPrev;
        pPrev = p;
        qPrev2 = qPrev;
        qPrev = q;
        Surd err = Surd::fromRational(Rational(p), alpha.radicand()) - alpha.scaled(Rational(q));
        if (err.sign() > 0) {
            if (err.scaled(Rational(q)).compare(Rational(1)) > 0)
                throw std::logic_error("dirichletConvergents: approximation above 1/q");
            if (boost::multiprecision::gcd(p, q) != 1)
                throw std::logic_error("dirichletConvergents: pair not coprime");
            Rational ratio(p, q);
            if (lastRatio && !(ratio < *lastRatio))
                throw std::logic_error("dirichletConvergents: quotients must strictly decrease");
            lastRatio = ratio;
            out.push_back({q, p});
        }
        x = surdInverse(x - Surd::fromRational(Rational(a), x.radicand()));
    }
    return out;
}

SyndeticConstruction buildSyndetic(const Surd& alpha, size_t nMax, long long windowBound,
                                   long long projectionGap) {
    if (alpha.surdPart().isZero()) throw std::domain_error("buildSyndetic: alpha is rational");
    if (alpha.compare(Rational(2)) <= 0)
        throw std::domain_error("buildSyndetic: alpha must exceed 2");
    if (nMax < 1) throw std::invalid_argument("buildSyndetic: nMax must be positive");
    if (windowBound < 1) throw std::invalid_argument("buildSyndetic: window must be positive");
    if (projectionGap < 0) throw std::invalid_argument("buildSyndetic: negative projection gap");
    if (windowBound > kWindowCap)
        throw ScaleError("buildSyndetic: window above the classification cap");

    SyndeticConstruction c;
    c.alpha = alpha;
    c.windowBound = windowBound;

    BigInt nBig(static_cast<unsigned long long>(nMax));
    for (size_t want = nMax + 8;; want *= 2) {
        c.convergents = dirichletConvergents(alpha, want);
        size_t j = 0;
        while (j < c.convergents.size() && c.convergents[j].q <= nBig) ++j;
        if (j + nMax <= c.convergents.size()) break;
    }

    unsigned long long columns = stripColumnBudget();
    BigInt cursor = 0;
    for (size_t n = 1; n <= nMax; ++n) {
        size_t j = 0;
        while (c.convergents[j].q <= BigInt(static_cast<unsigned long long>(n))) ++j;

        std::vector<Point2> verts;
        verts.push_back({Rational(0), Rational(0)});
        BigInt X = 0, Y = 0;
        for (size_t k = 0; k < n; ++k) {
            X += c.convergents[j + k].q;
            Y += c.convergents[j + k].p;
            verts.push_back({Rational(X), Rational(Y)});
        }
        if (convexHull2(verts).size() != verts.size())
            throw std::logic_error("buildSyndetic: polygon lost a vertex");
        for (const auto& v : verts) {
            Surd h = Surd::fromRational(v.y, alpha.radicand()) - alpha.scaled(v.x);
            if (h.sign() < 0 || h.compare(Rational(1)) >= 0)
                throw std::logic_error("buildSyndetic: vertex escapes the strip");
        }

        BigInt wx = cursor;
        if (wx + X > windowBound)
            throw std::runtime_error("buildSyndetic: polygon Q_" + std::to_string(n) +
                                     " does not fit the window (x span needs " +
                                     BigInt(wx + X).str() + ")");
        cursor = wx + X + projectionGap;
        BigInt wy = cursor;
        if (wy + Y > windowBound)
            throw std::runtime_error("buildSyndetic: polygon Q_" + std::to_string(n) +
                                     " does not fit the window (y span needs " +
                                     BigInt(wy + Y).str() + ")");
        cursor = wy + Y + projectionGap;

        SyndeticStrip strip;
        strip.xLo = toWindow(wx, "buildSyndetic");
        strip.xHi = toWindow(wx + X, "buildSyndetic");
        strip.yLo = toWindow(wy, "buildSyndetic");
        strip.yHi = toWindow(wy + Y, "buildSyndetic");
        for (long long x = strip.xLo; x <= strip.xHi; ++x) {
            if (columns-- == 0)
                throw ScaleError("buildSyndetic: strip scan budget exhausted "
                                 "(set HELLY_SCALE_GUARD to raise)");
            Surd v = alpha.scaled(Rational(x - strip.xLo)) +
                     Surd::fromRational(Rational(strip.yLo), alpha.radicand());
            BigInt row = v.ceil();
            if (row >= strip.yLo && row <= strip.yHi)
                strip.removedRows.push_back(toWindow(row, "buildSyndetic"));
        }
        c.polygons.push_back(std::move(verts));
        c.translations.push_back({strip.xLo, strip.yLo});
        c.classes.push_back(std::move(strip));
    }

    // everything stays except non-vertex strip rows
    std::vector<bool> inA(static_cast<size_t>(windowBound) + 1, true);
    for (const auto& s : c.classes)
        for (long long r : s.removedRows) inA[static_cast<size_t>(r)] = false;
    for (size_t i = 0; i < c.polygons.size(); ++i)
        for (const auto& v : c.polygons[i])
            inA[static_cast<size_t>(c.classes[i].yLo + v.y.num().convert_to<long long>())] = true;
    for (long long m = 0; m <= windowBound; ++m)
        if (inA[static_cast<size_t>(m)]) c.setA.push_back(m);
    return c;
}

CertCheck verifySyndetic(const SyndeticConstruction& c) {
    auto bad = [](std::string m) { return CertCheck{false, std::move(m)}; };

    if (c.alpha.surdPart().isZero()) return bad("alpha is rational");
    if (c.alpha.compare(Rational(2)) <= 0) return bad("alpha does not exceed 2");
    if (c.windowBound < 1) return bad("empty window");
    if (c.windowBound > kWindowCap)
        throw ScaleError("verifySyndetic: window above the classification cap");
    size_t k = c.polygons.size();
    if (k == 0) return bad("no polygons");
    if (c.translations.size() != k || c.classes.size() != k)
        return bad("translation and strip records do not match the polygon count");

    {
        std::optional<Rational> last;
        for (const auto& cv : c.convergents) {
            if (cv.q < 1 || cv.p < 1) return bad("nonpositive approximation pair");
            if (boost::multiprecision::gcd(cv.p, cv.q) != 1)
                return bad("approximation pair not coprime");
            Surd err = Surd::fromRational(Rational(cv.p), c.alpha.radicand()) -
                       c.alpha.scaled(Rational(cv.q));
            if (err.sign() <= 0) return bad("approximation on the wrong side of alpha");
            if (err.scaled(Rational(cv.q)).compare(Rational(1)) > 0)
                return bad("approximation further than 1/q");
            Rational ratio(cv.p, cv.q);
            if (last && !(ratio < *last)) return bad("approximation quotients do not decrease");
            last = ratio;
        }
    }

    unsigned long long columns = stripColumnBudget();
    for (size_t i = 0; i < k; ++i) {
        const auto& P = c.polygons[i];
        const auto& s = c.classes[i];
        std::string qn = "Q_" + std::to_string(i + 1);
        if (P.size() != i + 2) return bad(qn + " does not have n+1 vertices");
        if (!(P[0].x.isZero() && P[0].y.isZero())) return bad(qn + " does not start at the origin");
        BigInt maxX = 0, maxY = 0;
        for (const auto& v : P) {
            if (!v.x.isInteger() || !v.y.isInteger()) return bad(qn + " has a non-integer vertex");
            if (v.x.sign() < 0 || v.y.sign() < 0) return bad(qn + " has a vertex behind the origin");
            if (v.x.num() > maxX) maxX = v.x.num();
            if (v.y.num() > maxY) maxY = v.y.num();
            Surd h = Surd::fromRational(v.y, c.alpha.radicand()) - c.alpha.scaled(v.x);
            if (h.sign() < 0 || h.compare(Rational(1)) >= 0)
                return bad(qn + " has a vertex outside the unit strip");
        }
        if (convexHull2(P).size() != P.size())
            return bad(qn + " vertices are not in strictly convex position");
        if (s.xLo != c.translations[i].first || s.yLo != c.translations[i].second)
            return bad(qn + " strip record does not match its translation");
        if (BigInt(s.xHi) != s.xLo + maxX || BigInt(s.yHi) != s.yLo + maxY)
            return bad(qn + " strip record does not match its polygon span");
        if (s.xLo < 0 || s.xHi > c.windowBound || s.yLo < 0 || s.yHi > c.windowBound)
            return bad(qn + " strip leaves the window");
    }

    if (c.setA.empty()) return bad("(i) the point set is empty");
    if (c.setA.front() < 0 || c.setA.back() > c.windowBound)
        return bad("(i) point outside the window");
    if (c.setA.front() > 2)
        return bad("(i) gap of " + std::to_string(c.setA.front()) + " at the window start");
    for (size_t t = 1; t < c.setA.size(); ++t) {
        if (c.setA[t] <= c.setA[t - 1]) return bad("(i) point set is not strictly increasing");
        if (c.setA[t] - c.setA[t - 1] > 2)
            return bad("(i) gap of " + std::to_string(c.setA[t] - c.setA[t - 1]) + " after " +
                       std::to_string(c.setA[t - 1]));
    }
    if (c.windowBound - c.setA.back() > 2)
        return bad("(i) gap of " + std::to_string(c.windowBound - c.setA.back()) +
                   " at the window end");

    {
        std::vector<std::pair<long long, long long>> intervals;
        for (const auto& s : c.classes) {
            intervals.push_back({s.xLo, s.xHi});
            intervals.push_back({s.yLo, s.yHi});
        }
        std::sort(intervals.begin(), intervals.end());
        for (size_t t = 1; t < intervals.size(); ++t)
            if (intervals[t].first <= intervals[t - 1].second)
                return bad("(iii) projections overlap near " + std::to_string(intervals[t].first));
    }

    auto inSet = [&](long long m) {
        return std::binary_search(c.setA.begin(), c.setA.end(), m);
    };

    for (size_t i = 0; i < k; ++i) {
        const auto& P = c.polygons[i];
        const auto& s = c.classes[i];
        std::string qn = "Q_" + std::to_string(i + 1);

        for (size_t t = 0; t < s.removedRows.size(); ++t) {
            if (s.removedRows[t] < s.yLo || s.removedRows[t] > s.yHi)
                return bad("(iv) removed row " + std::to_string(s.removedRows[t]) +
                           " outside its strip");
            if (t > 0 && s.removedRows[t] - s.removedRows[t - 1] < 2)
                return bad("(iv) adjacent rows " + std::to_string(s.removedRows[t - 1]) + " and " +
                           std::to_string(s.removedRows[t]) + " both removed");
        }

        std::vector<long long> vertexRows, vertexCols;
        std::vector<Point2> translated;
        for (const auto& v : P) {
            long long vx = s.xLo + v.x.num().convert_to<long long>();
            long long vy = s.yLo + v.y.num().convert_to<long long>();
            vertexCols.push_back(vx);
            vertexRows.push_back(vy);
            translated.push_back({Rational(vx), Rational(vy)});
        }
        std::sort(vertexRows.begin(), vertexRows.end());
        std::vector<Point2> hull = convexHull2(translated);

        std::vector<long long> rows;
        for (long long x = s.xLo; x <= s.xHi; ++x) {
            if (columns-- == 0)
                throw ScaleError("verifySyndetic: strip scan budget exhausted "
                                 "(set HELLY_SCALE_GUARD to raise)");
            Surd v = c.alpha.scaled(Rational(x - s.xLo)) +
                     Surd::fromRational(Rational(s.yLo), c.alpha.radicand());
            BigInt rowBig = v.ceil();
            if (rowBig < s.yLo || rowBig > s.yHi) continue;
            long long row = rowBig.convert_to<long long>();
            rows.push_back(row);
            bool rowInA = inSet(row);
            bool vertexRow = std::binary_search(vertexRows.begin(), vertexRows.end(), row);
            if (rowInA && !vertexRow) {
                Point2 pt{Rational(x), Rational(row)};
                if (hull.size() >= 3 && pointInConvexPolygon(pt, hull, Containment::Interior))
                    return bad("(ii) point (" + std::to_string(x) + ", " + std::to_string(row) +
                               ") of the set's square lies strictly inside " + qn);
                return bad("strip row " + std::to_string(row) + " of " + qn +
                           " is in the set but is not a vertex row");
            }
            if (!rowInA && vertexRow)
                return bad("vertex row " + std::to_string(row) + " of " + qn +
                           " is missing from the set");
        }
        if (rows != s.removedRows)
            return bad("(iv) recorded removed rows of " + qn + " do not match the strip scan");
        for (long long vc : vertexCols)
            if (!inSet(vc))
                return bad("vertex column " + std::to_string(vc) + " of " + qn +
                           " is missing from the set");
    }

    std::vector<bool> inA(static_cast<size_t>(c.windowBound) + 1, true);
    for (const auto& s : c.classes)
        for (long long r : s.removedRows) inA[static_cast<size_t>(r)] = false;
    for (size_t i = 0; i < k; ++i)
        for (const auto& v : c.polygons[i])
            inA[static_cast<size_t>(c.classes[i].yLo + v.y.num().convert_to<long long>())] = true;
    size_t at = 0;
    for (long long m = 0; m <= c.windowBound; ++m) {
        bool want = inA[static_cast<size_t>(m)];
        bool have = at < c.setA.size() && c.setA[at] == m;
        if (want != have)
            return bad("point set does not match the partition formula at " + std::to_string(m));
        if (have) ++at;
    }
    return {true, ""};
}

}  // namespace helly
