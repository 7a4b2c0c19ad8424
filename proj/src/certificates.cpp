#include "helly/certificates.hpp"

#include "helly/linear.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

namespace helly {

namespace {

CertCheck fail(std::string msg) { return {false, std::move(msg)}; }

std::string fmtPoint(const Point2& p) { return "(" + p.x.str() + ", " + p.y.str() + ")"; }

// lambda >= 0, sum lambda = 1, sum lambda p_i = q, solved over the lambda
// columns only. Exact hull membership in any dimension.
bool inHullLP(const std::vector<const std::vector<Rational>*>& pts, const std::vector<Rational>& q) {
    size_t k = pts.size();
    if (k == 0) return false;
    size_t d = q.size();
    LinearSystem sys(k);
    std::vector<size_t> cols(k);
    std::iota(cols.begin(), cols.end(), size_t{0});
    for (size_t i = 0; i < k; ++i) {
        std::vector<Rational> row(k);
        row[i] = Rational(-1);
        sys.addRow(std::move(row), Rational(0));
    }
    std::vector<Rational> ones(k, Rational(1));
    std::vector<Rational> negOnes(k, Rational(-1));
    sys.addRow(std::move(ones), Rational(1));
    sys.addRow(std::move(negOnes), Rational(-1));
    for (size_t j = 0; j < d; ++j) {
        std::vector<Rational> pos(k), neg(k);
        for (size_t i = 0; i < k; ++i) {
            pos[i] = (*pts[i])[j];
            neg[i] = -pos[i];
        }
        sys.addRow(std::move(pos), q[j]);
        sys.addRow(std::move(neg), -q[j]);
    }
    return sys.feasibleOver(cols);
}

bool intersectEmptyCore(const std::vector<std::vector<Rational>>& X,
                        const std::vector<std::vector<Rational>>& S, size_t d) {
    size_t k = X.size();
    if (k == 1) return true;  // the hull of nothing contains nothing
    if (d == 2) {
        std::vector<std::vector<Point2>> hulls(k);
        for (size_t x = 0; x < k; ++x) {
            std::vector<Point2> rest;
            rest.reserve(k - 1);
            for (size_t i = 0; i < k; ++i)
                if (i != x) rest.push_back({X[i][0], X[i][1]});
            hulls[x] = convexHull2(std::move(rest));
        }
        for (const auto& s : S) {
            Point2 p{s[0], s[1]};
            bool inAll = true;
            for (size_t x = 0; x < k && inAll; ++x)
                inAll = pointInConvexPolygon(p, hulls[x], Containment::Closed);
            if (inAll) return false;
        }
        return true;
    }
    for (const auto& s : S) {
        bool inAll = true;
        for (size_t x = 0; x < k && inAll; ++x) {
            std::vector<const std::vector<Rational>*> rest;
            rest.reserve(k - 1);
            for (size_t i = 0; i < k; ++i)
                if (i != x) rest.push_back(&X[i]);
            inAll = inHullLP(rest, s);
        }
        if (inAll) return false;
    }
    return true;
}

size_t pointDim(const std::vector<std::vector<Rational>>& pts, const char* who) {
    if (pts.empty()) return 0;
    size_t d = pts[0].size();
    for (const auto& p : pts)
        if (p.size() != d) throw std::invalid_argument(std::string(who) + ": mixed point dimensions");
    return d;
}

bool nextCombination(std::vector<size_t>& idx, size_t n) {
    size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] != n - k + i) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// ---- largest empty convex polygon ----

unsigned long long polygonBudget() {
    unsigned long long f = scaleGuardFactor();
    if (f > 5000) f = 5000;
    return 200'000'000ULL * f;
}

// Candidate points relative to the current bottom vertex, in an integer or a
// rational flavor. All candidates lie in the open upper half plane or on the
// positive x axis, so cross-product signs give a total angular order.
struct FanInt {
    long long x = 0, y = 0;
    size_t id = 0;
};
struct FanRat {
    Rational x, y;
    size_t id = 0;
};

int crossSign(const FanInt& a, const FanInt& b) {
    __int128 c = (__int128)a.x * b.y - (__int128)a.y * b.x;
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}
int crossSign(const FanRat& a, const FanRat& b) { return (a.x * b.y - a.y * b.x).sign(); }

// orientation of s against the directed chord i -> j (translation invariant,
// so relative coordinates are fine)
int chordSign(const FanInt& i, const FanInt& j, const FanInt& s) {
    __int128 c = (__int128)(j.x - i.x) * (s.y - i.y) - (__int128)(j.y - i.y) * (s.x - i.x);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}
int chordSign(const FanRat& i, const FanRat& j, const FanRat& s) {
    return ((j.x - i.x) * (s.y - i.y) - (j.y - i.y) * (s.x - i.x)).sign();
}

bool closerOnRay(const FanInt& a, const FanInt& b) {
    __int128 la = (__int128)a.x * a.x + (__int128)a.y * a.y;
    __int128 lb = (__int128)b.x * b.x + (__int128)b.y * b.y;
    return la < lb;
}
bool closerOnRay(const FanRat& a, const FanRat& b) {
    return (a.x * a.x + a.y * a.y) < (b.x * b.x + b.y * b.y);
}

// Longest convex chain over the fan of one bottom vertex. A chain edge
// (i, j) is usable when the fan triangle (bottom, i, j) has no candidate
// strictly inside; extending through i additionally needs the open segment
// (bottom, i) clear, because it becomes an internal diagonal. Every stored
// chain closes into a polygon with the bottom: the turns at the closing
// vertex and at the bottom are left turns by construction.
template <class FP>
void fanSearch(std::vector<FP> cand, size_t bottomId, unsigned long long& budget,
               std::vector<uint16_t>& len, std::vector<uint16_t>& par, size_t& bestSize,
               size_t& bestBottom, std::vector<size_t>& bestChain) {
    size_t nc = cand.size();
    if (nc < 2) return;
    if (nc > 3000) throw ScaleError("maxEmptyConvexPolygon: too many points above one bottom vertex");
    std::sort(cand.begin(), cand.end(), [](const FP& a, const FP& b) {
        int c = crossSign(a, b);
        if (c != 0) return c > 0;
        if (closerOnRay(a, b)) return true;
        if (closerOnRay(b, a)) return false;
        return a.id < b.id;
    });
    std::vector<char> diagBlocked(nc, 0);
    for (size_t j = 1; j < nc; ++j) diagBlocked[j] = crossSign(cand[j - 1], cand[j]) == 0;

    constexpr uint16_t kNone = 0xFFFF;
    len.assign(nc * nc, 0);
    par.assign(nc * nc, kNone);
    for (size_t j = 1; j < nc; ++j) {
        for (size_t i = 0; i < j; ++i) {
            if (budget == 0) throw ScaleError("maxEmptyConvexPolygon: work budget exhausted");
            --budget;
            if (crossSign(cand[i], cand[j]) <= 0) continue;
            bool blocked = false;
            for (size_t s = i + 1; s < j && !blocked; ++s) {
                if (budget == 0) throw ScaleError("maxEmptyConvexPolygon: work budget exhausted");
                --budget;
                if (crossSign(cand[i], cand[s]) <= 0) continue;  // on the ray of i: boundary at worst
                if (crossSign(cand[s], cand[j]) <= 0) continue;
                blocked = chordSign(cand[i], cand[j], cand[s]) > 0;
            }
            if (blocked) continue;
            uint16_t best = 2;
            uint16_t bp = kNone;
            if (!diagBlocked[i]) {
                for (size_t h = 0; h < i; ++h) {
                    if (budget == 0) throw ScaleError("maxEmptyConvexPolygon: work budget exhausted");
                    --budget;
                    uint16_t lhi = len[h * nc + i];
                    if (lhi == 0 || lhi + 1 <= best) continue;
                    if (chordSign(cand[h], cand[i], cand[j]) <= 0) continue;  // turn at i
                    best = uint16_t(lhi + 1);
                    bp = uint16_t(h);
                }
            }
            len[i * nc + j] = best;
            par[i * nc + j] = bp;
            if (size_t(best) + 1 > bestSize) {
                bestSize = size_t(best) + 1;
                bestBottom = bottomId;
                bestChain.clear();
                size_t ci = i, cj = j;
                bestChain.push_back(cand[cj].id);
                while (true) {
                    bestChain.push_back(cand[ci].id);
                    uint16_t p = par[ci * nc + cj];
                    if (p == kNone) break;
                    cj = ci;
                    ci = p;
                }
                std::reverse(bestChain.begin(), bestChain.end());
            }
        }
    }
}

// strictly increasing from here on: the t(n) >= t(n+1) comparison on three
// consecutive gaps, +1 strict, 0 equal, -1 violated
int runCompare(const BigInt& g0, const BigInt& g1, const BigInt& g2) {
    BigInt l = g1 * g1, r = g0 * g2;
    if (l > r) return 1;
    if (l == r) return 0;
    return -1;
}

BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace

CertCheck checkEmptyPolygon(const PolygonCertificate& cert, const std::vector<Point2>& S) {
    const auto& V = cert.vertices;
    if (V.empty()) return fail("certificate has no vertices");
    if (cert.windowHi.x < cert.windowLo.x || cert.windowHi.y < cert.windowLo.y)
        return fail("certificate window is empty");
    auto inWindow = [&](const Point2& p) {
        return !(p.x < cert.windowLo.x || p.x > cert.windowHi.x || p.y < cert.windowLo.y ||
                 p.y > cert.windowHi.y);
    };
    size_t n = V.size();
    if (n >= 3) {
        for (size_t i = 0; i < n; ++i) {
            const Point2& a = V[i];
            const Point2& b = V[(i + 1) % n];
            const Point2& c = V[(i + 2) % n];
            if (orientation(a, b, c) != 1)
                return fail("vertices " + fmtPoint(a) + ", " + fmtPoint(b) + ", " + fmtPoint(c) +
                            " do not make a strict left turn");
        }
    }
    std::vector<Point2> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& v : V) {
        if (!std::binary_search(sorted.begin(), sorted.end(), v))
            return fail("vertex " + fmtPoint(v) + " is not a point of the host set");
        if (!inWindow(v)) return fail("vertex " + fmtPoint(v) + " lies outside the stated window");
    }
    if (n >= 3) {
        for (const auto& s : S)
            if (inWindow(s) && pointInConvexPolygon(s, V, Containment::Interior))
                return fail("point " + fmtPoint(s) + " lies strictly inside the polygon");
    }
    return {};
}

bool checkIntersectEmpty(const std::vector<std::vector<Rational>>& X,
                         const std::vector<std::vector<Rational>>& S) {
    if (X.empty()) throw std::invalid_argument("checkIntersectEmpty: X must be nonempty");
    if (X.size() > 12) throw ScaleError("checkIntersectEmpty: more than 12 points in X");
    size_t d = pointDim(X, "checkIntersectEmpty");
    if (d < 1) throw std::invalid_argument("checkIntersectEmpty: points need a coordinate");
    if (d > 3) throw ScaleError("checkIntersectEmpty: dimension above 3");
    size_t ds = pointDim(S, "checkIntersectEmpty");
    if (!S.empty() && ds != d) throw std::invalid_argument("checkIntersectEmpty: X and S dimensions differ");
    return intersectEmptyCore(X, S, d);
}

IntersectEmptyMax maxIntersectEmpty(const std::vector<std::vector<Rational>>& S) {
    if (S.size() > 16) throw ScaleError("maxIntersectEmpty: more than 16 points");
    if (S.empty()) return {};
    size_t d = pointDim(S, "maxIntersectEmpty");
    if (d < 1) throw std::invalid_argument("maxIntersectEmpty: points need a coordinate");
    if (d > 3) throw ScaleError("maxIntersectEmpty: dimension above 3");
    for (size_t k = S.size(); k >= 1; --k) {
        std::vector<size_t> idx(k);
        std::iota(idx.begin(), idx.end(), size_t{0});
        do {
            std::vector<std::vector<Rational>> X;
            X.reserve(k);
            for (size_t i : idx) X.push_back(S[i]);
            if (intersectEmptyCore(X, S, d)) return {k, idx};
        } while (nextCombination(idx, S.size()));
    }
    return {};  // not reached: a single point is always intersect-empty
}

EmptyPolygonMax maxEmptyConvexPolygon(const std::vector<Point2>& S) {
    if (S.size() > 10000) throw ScaleError("maxEmptyConvexPolygon: more than 10^4 points");
    std::vector<Point2> pts = S;
    auto belowLeft = [](const Point2& a, const Point2& b) {
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    };
    std::sort(pts.begin(), pts.end(), belowLeft);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    EmptyPolygonMax out;
    if (n == 0) return out;
    out.size = std::min<size_t>(n, 2);
    out.witness.push_back(pts[0]);
    if (n >= 2) out.witness.push_back(pts[1]);
    if (n < 3) return out;

    const BigInt coordCap = BigInt(1) << 59;
    bool integral = true;
    for (const auto& p : pts) {
        if (!p.x.isInteger() || !p.y.isInteger() || abs(p.x.num()) > coordCap ||
            abs(p.y.num()) > coordCap) {
            integral = false;
            break;
        }
    }

    unsigned long long budget = polygonBudget();
    size_t bestSize = 2, bestBottom = 0;
    std::vector<size_t> bestChain;
    std::vector<uint16_t> len, par;
    if (integral) {
        std::vector<long long> xs(n), ys(n);
        for (size_t i = 0; i < n; ++i) {
            xs[i] = pts[i].x.num().convert_to<long long>();
            ys[i] = pts[i].y.num().convert_to<long long>();
        }
        for (size_t b = 0; b + 1 < n; ++b) {
            std::vector<FanInt> cand;
            cand.reserve(n - b - 1);
            for (size_t c = b + 1; c < n; ++c) cand.push_back({xs[c] - xs[b], ys[c] - ys[b], c});
            fanSearch(std::move(cand), b, budget, len, par, bestSize, bestBottom, bestChain);
        }
    } else {
        for (size_t b = 0; b + 1 < n; ++b) {
            std::vector<FanRat> cand;
            cand.reserve(n - b - 1);
            for (size_t c = b + 1; c < n; ++c)
                cand.push_back({pts[c].x - pts[b].x, pts[c].y - pts[b].y, c});
            fanSearch(std::move(cand), b, budget, len, par, bestSize, bestBottom, bestChain);
        }
    }
    if (bestSize >= 3) {
        out.size = bestSize;
        out.witness.clear();
        out.witness.push_back(pts[bestBottom]);
        for (size_t id : bestChain) out.witness.push_back(pts[id]);
    }
    return out;
}

RatioRunCertificate ratioScan(const std::vector<BigInt>& A, unsigned threads) {
    if (A.size() < 4) throw std::invalid_argument("ratioScan: need at least four values");
    for (size_t i = 1; i < A.size(); ++i)
        if (A[i] <= A[i - 1]) throw std::invalid_argument("ratioScan: values must be strictly increasing");
    size_t N = A.size(), C = N - 3;
    std::vector<BigInt> g(N - 1);
    for (size_t i = 0; i + 1 < N; ++i) g[i] = A[i + 1] - A[i];

    std::vector<int8_t> cmp(C);
    auto fillRange = [&](size_t lo, size_t hi) {
        for (size_t x = lo; x < hi; ++x) cmp[x] = int8_t(runCompare(g[x], g[x + 1], g[x + 2]));
    };
    if (threads <= 1 || C < 256) {
        fillRange(0, C);
    } else {
        size_t T = std::min<size_t>(threads, 64);
        size_t chunk = (C + T - 1) / T;
        std::vector<std::thread> pool;
        for (size_t t = 0; t < T; ++t) {
            size_t lo = t * chunk, hi = std::min(C, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(fillRange, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    size_t bestB = 0, bestM = 0, bestK = 0;
    bool have = false;
    size_t r0 = 0, k = 0;
    bool open = false;
    auto close = [&](size_t end) {
        size_t m = end - r0;
        if (!have || k > bestK) {
            bestB = r0;
            bestM = m;
            bestK = k;
            have = true;
        }
        open = false;
    };
    for (size_t x = 0; x < C; ++x) {
        if (cmp[x] >= 0) {
            if (!open) {
                open = true;
                r0 = x;
                k = 0;
            }
            k += cmp[x] == 1;
        } else if (open) {
            close(x);
        }
    }
    if (open) close(C);

    RatioRunCertificate cert;
    cert.baseIndex = bestB;
    cert.runLength = bestM;
    cert.strictCount = bestK;
    cert.values.assign(A.begin() + bestB, A.begin() + bestB + bestM + 3);
    return cert;
}

CertCheck checkRatioRun(const RatioRunCertificate& cert) {
    const auto& v = cert.values;
    if (v.size() != cert.runLength + 3)
        return fail("window has " + std::to_string(v.size()) + " values, expected runLength + 3 = " +
                    std::to_string(cert.runLength + 3));
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) return fail("values are not strictly increasing at offset " + std::to_string(i));
    size_t k = 0;
    for (size_t x = 0; x < cert.runLength; ++x) {
        int c = runCompare(v[x + 1] - v[x], v[x + 2] - v[x + 1], v[x + 3] - v[x + 2]);
        if (c < 0)
            return fail("t(" + std::to_string(cert.baseIndex + x) + ") < t(" +
                        std::to_string(cert.baseIndex + x + 1) + ")");
        k += c == 1;
    }
    if (k != cert.strictCount)
        return fail("strictCount is " + std::to_string(cert.strictCount) + ", recount gives " +
                    std::to_string(k));
    return {};
}

void RatioRunScanner::push(unsigned long long value) {
    if (count_ > 0 && value <= last_[(count_ - 1) & 3])
        throw std::invalid_argument("RatioRunScanner: values must be strictly increasing");
    last_[count_ & 3] = value;
    if (count_ < 3) firstThree_[count_] = value;
    if (runOpen_) runValues_.push_back(value);
    ++count_;
    if (count_ < 4) return;

    size_t n = count_ - 4;
    auto at = [&](size_t idx) { return last_[idx & 3]; };
    unsigned long long g0 = at(n + 1) - at(n);
    unsigned long long g1 = at(n + 2) - at(n + 1);
    unsigned long long g2 = at(n + 3) - at(n + 2);
    unsigned __int128 l = (unsigned __int128)g1 * g1;
    unsigned __int128 r = (unsigned __int128)g0 * g2;
    if (l >= r) {
        if (!runOpen_) {
            runOpen_ = true;
            runB_ = n;
            runK_ = 0;
            runValues_ = {at(n), at(n + 1), at(n + 2), at(n + 3)};
        }
        runK_ += l > r;
    } else if (runOpen_) {
        closeRun(n);
    }
}

void RatioRunScanner::closeRun(size_t failedAt) {
    size_t m = failedAt - runB_;
    if (!haveBest_ || runK_ > bestK_) {
        bestB_ = runB_;
        bestM_ = m;
        bestK_ = runK_;
        bestValues_.assign(runValues_.begin(), runValues_.begin() + (m + 3));
        haveBest_ = true;
    }
    runOpen_ = false;
    runValues_.clear();
}

RatioRunCertificate RatioRunScanner::best() const {
    if (count_ < 4) throw std::invalid_argument("RatioRunScanner: need at least four values");
    bool have = haveBest_;
    size_t b = bestB_, m = bestM_, k = bestK_;
    std::vector<unsigned long long> window = bestValues_;
    if (runOpen_) {
        size_t mo = count_ - 3 - runB_;
        if (!have || runK_ > k) {
            b = runB_;
            m = mo;
            k = runK_;
            window.assign(runValues_.begin(), runValues_.begin() + (m + 3));
        }
        have = true;
    }
    if (!have) {
        b = 0;
        m = 0;
        k = 0;
        window.assign(firstThree_, firstThree_ + 3);
    }
    RatioRunCertificate cert;
    cert.baseIndex = b;
    cert.runLength = m;
    cert.strictCount = k;
    cert.values.reserve(window.size());
    for (unsigned long long v : window) cert.values.push_back(BigInt(v));
    return cert;
}

RunPolygonBuild buildProp31Polygon(const std::vector<BigInt>& A, size_t b, size_t m,
                                   const std::string& host) {
    if (A.size() < m + 3 || b > A.size() - (m + 3))
        throw std::invalid_argument("buildProp31Polygon: window does not cover b .. b+m+2");
    for (size_t i = b + 1; i <= b + m + 2; ++i)
        if (A[i] <= A[i - 1])
            throw std::invalid_argument("buildProp31Polygon: values must be strictly increasing");

    RunPolygonBuild out;
    size_t k = 0;
    for (size_t x = b; x < b + m; ++x) {
        int c = runCompare(A[x + 1] - A[x], A[x + 2] - A[x + 1], A[x + 3] - A[x + 2]);
        if (c < 0) {
            out.diagnostic = "t(" + std::to_string(x) + ") < t(" + std::to_string(x + 1) +
                             "): gaps " + BigInt(A[x + 1] - A[x]).str() + ", " +
                             BigInt(A[x + 2] - A[x + 1]).str() + ", " +
                             BigInt(A[x + 3] - A[x + 2]).str();
            return out;
        }
        k += c == 1;
    }
    out.hypothesisOk = true;
    out.strictCount = k;

    std::vector<Point2> candidates;
    candidates.reserve(m + 4);
    candidates.push_back({Rational(A[b]), Rational(A[b])});
    candidates.push_back({Rational(A[b + m + 2]), Rational(A[b + m + 2])});
    for (size_t i = b; i <= b + m + 1; ++i) candidates.push_back({Rational(A[i]), Rational(A[i + 1])});
    out.certificate.vertices = convexHull2(std::move(candidates));
    out.certificate.host = host;
    out.certificate.windowLo = {Rational(A[b]), Rational(A[b])};
    out.certificate.windowHi = {Rational(A[b + m + 2]), Rational(A[b + m + 2])};
    out.certificate.provenance =
        "ratio-run b=" + std::to_string(b) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
    return out;
}

BoundRecord unionBound(const BoundRecord& r1, const BoundRecord& r2) {
    if (r1.kind != BoundKind::Upper || r2.kind != BoundKind::Upper)
        throw std::invalid_argument("unionBound: both records must be upper bounds");
    if (r1.quantity != r2.quantity || r1.n != r2.n)
        throw std::invalid_argument("unionBound: records bound different quantities");
    BoundRecord out;
    out.setDescriptor = "union(" + r1.setDescriptor + ", " + r2.setDescriptor + ")";
    out.quantity = r1.quantity;
    out.n = r1.n;
    out.kind = BoundKind::Upper;
    out.value = r1.value + r2.value;
    out.provenance = "union-additivity(" + r1.provenance + "; " + r2.provenance + ")";
    return out;
}

BoundRecord restrictBound(const BoundRecord& r, const std::string& convexDescriptor) {
    if (r.kind != BoundKind::Upper)
        throw std::invalid_argument("restrictBound: needs an upper bound");
    BoundRecord out = r;
    out.setDescriptor = "intersect(" + r.setDescriptor + ", " + convexDescriptor + ")";
    out.provenance = "convex-restriction(" + r.provenance + ")";
    return out;
}

BoundRecord formulaBound(const std::string& theoremId, const FormulaParams& params) {
    auto need = [&](const std::optional<BigInt>& v, const char* name) -> const BigInt& {
        if (!v)
            throw std::invalid_argument("formulaBound: missing parameter " + std::string(name) +
                                        " for " + theoremId);
        return *v;
    };
    auto small = [&](const BigInt& v, const char* name) -> unsigned {
        if (v < 0 || v > 1024)
            throw std::invalid_argument("formulaBound: parameter " + std::string(name) +
                                        " out of range [0, 1024]");
        return v.convert_to<unsigned>();
    };
    BoundRecord out;
    out.kind = BoundKind::Upper;
    if (theoremId == "mixedInteger") {
        unsigned a = small(need(params.a, "a"), "a");
        unsigned b = small(need(params.b, "b"), "b");
        if (a + b < 1) throw std::invalid_argument("formulaBound: a + b must be at least 1");
        out.setDescriptor = "R^" + std::to_string(a) + " x Z^" + std::to_string(b);
        out.quantity = "H";
        out.n = 1;
        out.value = BigInt(a + 1) * pow2(b);
        out.provenance = "mixedInteger(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")";
    } else if (theoremId == "boxIntegerLattice") {
        unsigned d = small(need(params.d, "d"), "d");
        if (d < 1) throw std::invalid_argument("formulaBound: d must be at least 1");
        out.setDescriptor = "Z^" + std::to_string(d);
        out.quantity = "H_box";
        out.n = 0;
        out.value = pow2(2 * d - 1);
        out.provenance = "boxIntegerLattice(d=" + std::to_string(d) + ")";
    } else if (theoremId == "boxPeriodic") {
        unsigned d = small(need(params.d, "d"), "d");
        const BigInt& rho = need(params.rho, "rho");
        if (d < 1) throw std::invalid_argument("formulaBound: d must be at least 1");
        if (rho < 1) throw std::invalid_argument("formulaBound: rho must be at least 1");
        out.setDescriptor = "periodic-product(d=" + std::to_string(d) + ", rho=" + rho.str() + ")";
        out.quantity = "H_box";
        out.n = 0;
        out.value = pow2(2 * d) * rho * rho;
        out.provenance = "boxPeriodic(d=" + std::to_string(d) + ", rho=" + rho.str() + ")";
    } else {
        throw std::invalid_argument("formulaBound: unknown theorem id '" + theoremId + "'");
    }
    return out;
}

BoundRecord certificateBound(const std::string& setDescriptor, const std::string& quantity,
                             const BigInt& n, const BigInt& value, const std::string& certificateRef) {
    if (certificateRef.empty())
        throw std::invalid_argument("certificateBound: certificate reference required");
    if (quantity != "H" && quantity != "H_box")
        throw std::invalid_argument("certificateBound: quantity must be H or H_box");
    BoundRecord out;
    out.setDescriptor = setDescriptor;
    out.quantity = quantity;
    out.n = n;
    out.kind = BoundKind::Lower;
    out.value = value;
    out.provenance = "certificate(" + certificateRef + ")";
    return out;
}

GuaranteedFraction guaranteedFraction(size_t d, size_t m, const Rational& t,
                                      FractionVariant variant) {
    if (d < 1 || d > 1024 || m < 1 || m > d)
        throw std::invalid_argument("guaranteedFraction: need 1 <= m <= d");
    GuaranteedFraction out;
    if (variant == FractionVariant::P218) {
        if (t.sign() < 0) throw std::invalid_argument("guaranteedFraction: P218 needs t >= 0");
        BigInt f = t.floor();
        out.hellyNumber = BigInt(m + 1) * pow2(unsigned(2 * d - m - 1));
        out.factor = Rational(f + 2, f + 1).pow(unsigned(m));
    } else {
        if (t < Rational(1)) throw std::invalid_argument("guaranteedFraction: P219 needs t >= 1");
        BigInt f = t.floor();
        out.hellyNumber = m == d ? BigInt(2 * d) : BigInt(d + m + 1) * pow2(unsigned(d - m - 1));
        out.factor =
            Rational(f + 2, f + 1).pow(unsigned(d - m)) * Rational(f + 2, f).pow(unsigned(m));
    }
    return out;
}

}  // namespace helly
