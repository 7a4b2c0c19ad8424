#pragma once

#include "helly/geometry.hpp"
#include "helly/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace helly {

// Certificates are finite, re-checkable artifacts: a convex polygon that is
// empty within a stated window, a run of nonincreasing gap ratios in a 1D
// set, or a named bound on a Helly number with its provenance. Checkers are
// pure; a certificate that fails produces a violation message naming the
// offending point or triple, never a silent false.

struct PolygonCertificate {
    std::vector<Point2> vertices;  // counterclockwise, strictly convex
    std::string host;              // how the ambient point set is generated
    Point2 windowLo{Rational(0), Rational(0)};
    Point2 windowHi{Rational(0), Rational(0)};
    std::string provenance;
};

struct CertCheck {
    bool valid = true;
    std::string violation;  // empty iff valid
};

// Convex position, vertex membership in S, and strict interior emptiness,
// all scoped to the certificate window. The caller supplies every point of
// S inside the window; points outside it are ignored.
CertCheck checkEmptyPolygon(const PolygonCertificate& cert, const std::vector<Point2>& S);

// Decides whether some point of S lies in conv(X \ {x}) for every x in X,
// i.e. whether X is intersect-empty relative to S. Exact membership tests;
// guards |X| <= 12 and dimension <= 3.
bool checkIntersectEmpty(const std::vector<std::vector<Rational>>& X,
                         const std::vector<std::vector<Rational>>& S);

struct IntersectEmptyMax {
    size_t size = 0;
    std::vector<size_t> witness;  // indices into S, ascending
};

// Maximum cardinality of an intersect-empty subset of S by exhaustive subset
// search, largest size first (|S| <= 16). For finite S this is the Helly
// number of S.
IntersectEmptyMax maxIntersectEmpty(const std::vector<std::vector<Rational>>& S);

struct EmptyPolygonMax {
    size_t size = 0;
    std::vector<Point2> witness;  // counterclockwise from the lowest vertex
};

// Largest empty convex polygon with vertices in S: cubic dynamic program
// over angularly sorted candidates above each bottom vertex. Points on the
// polygon boundary do not count as interior. Guard |S| <= 10^4, plus a work
// budget scaled by HELLY_SCALE_GUARD. Ties: first in scan order (bottoms by
// (y, x), then lexicographic edge order).
EmptyPolygonMax maxEmptyConvexPolygon(const std::vector<Point2>& S);

// A run certificate for a strictly increasing 1D window a_b .. a_{b+m+2}
// with gap ratios t(n) = (a_{n+2}-a_{n+1})/(a_{n+1}-a_n) satisfying
// t(n) >= t(n+1) for b <= n <= b+m-1, strictly for strictCount of them.
// Such a run forces an empty (k+4)-gon on the diagonal of the product set.
struct RatioRunCertificate {
    std::vector<BigInt> values;  // a_b .. a_{b+m+2}
    size_t baseIndex = 0;
    size_t runLength = 0;
    size_t strictCount = 0;
    size_t lowerBound() const { return strictCount + 4; }
};

// Single left-to-right pass over the comparisons t(n) >= t(n+1), kept exact
// by cross multiplication of gap products. Returns the maximal run with the
// most strict drops (ties: earliest). Comparisons are partitioned across
// threads; the run assembly over the comparison flags is serial.
RatioRunCertificate ratioScan(const std::vector<BigInt>& A, unsigned threads = 1);

CertCheck checkRatioRun(const RatioRunCertificate& cert);

// Streaming equivalent of ratioScan for values that are produced one at a
// time (sieve scans). Agrees exactly with the batch scan on the same data.
class RatioRunScanner {
public:
    void push(unsigned long long value);
    size_t count() const { return count_; }
    // Best certificate over everything pushed so far. At least 4 values.
    RatioRunCertificate best() const;

private:
    size_t count_ = 0;
    unsigned long long last_[4] = {0, 0, 0, 0};  // ring of trailing values
    unsigned long long firstThree_[3] = {0, 0, 0};
    bool runOpen_ = false;
    size_t runB_ = 0;
    size_t runK_ = 0;
    std::vector<unsigned long long> runValues_;
    bool haveBest_ = false;
    size_t bestB_ = 0, bestM_ = 0, bestK_ = 0;
    std::vector<unsigned long long> bestValues_;

    void closeRun(size_t failedAt);
};

struct RunPolygonBuild {
    bool hypothesisOk = false;
    std::string diagnostic;  // failing comparison, when !hypothesisOk
    PolygonCertificate certificate;
    size_t strictCount = 0;
};

// Builds the diagonal polygon of a ratio run: the hull of the two diagonal
// points (a_b, a_b), (a_{b+m+2}, a_{b+m+2}) and the chain (a_i, a_{i+1}).
// The run hypothesis is checked first; a failed comparison yields a
// diagnostic instead of a certificate, so a small hull is never mistaken
// for a valid one. On success the hull has strictCount + 4 vertices.
RunPolygonBuild buildProp31Polygon(const std::vector<BigInt>& A, size_t b, size_t m,
                                   const std::string& host);

enum class BoundKind { Lower, Upper };

struct BoundRecord {
    std::string setDescriptor;
    std::string quantity;  // "H" or "H_box"
    BigInt n{1};           // 0 means the bound holds for every n
    BoundKind kind = BoundKind::Upper;
    BigInt value{0};
    std::string provenance;
};

// H(S u T) <= H(S) + H(T): adds the values of two upper bounds on the same
// quantity at the same n.
BoundRecord unionBound(const BoundRecord& r1, const BoundRecord& r2);

// H(S n C) <= H(S) for convex C: copies the value with restriction
// provenance.
BoundRecord restrictBound(const BoundRecord& r, const std::string& convexDescriptor);

struct FormulaParams {
    std::optional<BigInt> d;
    std::optional<BigInt> a;
    std::optional<BigInt> b;
    std::optional<BigInt> rho;
};

// Closed-form upper bounds. Ids:
//   mixedInteger      H(R^a x Z^b) = (a+1) 2^b           (params a, b)
//   boxIntegerLattice H_box(Z^d, n) <= 2^(2d-1), every n (param d)
//   boxPeriodic       H_box(Q, n) <= 4^d rho(Q)^2        (params d, rho)
BoundRecord formulaBound(const std::string& theoremId, const FormulaParams& params);

// Lower bounds enter the algebra only through a reference to a checkable
// certificate.
BoundRecord certificateBound(const std::string& setDescriptor, const std::string& quantity,
                             const BigInt& n, const BigInt& value,
                             const std::string& certificateRef);

enum class FractionVariant { P218, P219 };

struct GuaranteedFraction {
    BigInt hellyNumber{0};
    Rational factor{0};  // the intersection keeps at least n / factor points
};

// Helly number and guaranteed-fraction denominator for t-thick box theorems
// with m thick coordinates in dimension d.
//   P218: h = (m+1) 2^(2d-m-1),            factor (1 + 1/(floor(t)+1))^m, t >= 0
//   P219: h = (d+m+1) 2^(d-m-1), 2d if m=d,
//         factor (1 + 1/(floor(t)+1))^(d-m) (1 + 2/floor(t))^m, t >= 1
GuaranteedFraction guaranteedFraction(size_t d, size_t m, const Rational& t,
                                      FractionVariant variant);

}  // namespace helly
