#pragma once

#include "helly/certificates.hpp"
#include "helly/family.hpp"
#include "helly/geometry.hpp"
#include "helly/surd.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace helly {

// Deterministic primality for any 64-bit integer (Miller-Rabin with a fixed
// witness set that is exact over the full range).
bool isPrime64(uint64_t n);

// Calls f(p) for every prime in [lo, hi] in ascending order. Segmented sieve;
// hi <= 2^32. threads > 1 sieves segments concurrently and still delivers in
// order.
void sieveRange(uint64_t lo, uint64_t hi, const std::function<void(uint64_t)>& f,
                unsigned threads = 1);

// The primes in [lo, hi], ascending.
std::vector<uint64_t> primeWindow(uint64_t lo, uint64_t hi, unsigned threads = 1);

// { p(n) : lo <= n <= hi } in order of n. Coefficients are ascending-degree
// rationals; every value on the range must be an integer (this admits
// binomial-coefficient polynomials), else domain_error.
std::vector<BigInt> polynomialSet(const std::vector<Rational>& coeffs, long long lo, long long hi);

// Exactly one of base/exponent must be set: {base^n : n in [lo, hi]} (lo >= 0)
// or {n^exponent : n in [lo, hi]}.
std::vector<BigInt> powerSet(const std::optional<BigInt>& base,
                             const std::optional<unsigned>& exponent, long long lo, long long hi);

// The six closed half-planes of the hexagonal lower-bound picture: vertical
// lines x = +-1 and four slope +-1/2 lines, each side containing the origin.
FamilyInstance figure1Family();

// The 2d half-spaces whose intersection is the hypercube [0, t]^d.
FamilyInstance hypercubeFamily(size_t d, const Rational& t);

// The 2^d half-spaces whose intersection is conv(+-e_1, ..., +-e_d).
FamilyInstance crossPolytopeFamily(size_t d);

// The 2^d sets conv({0,1}^d minus one vertex), each as cube facets plus one
// corner cut. d <= 3.
FamilyInstance cubeVertexFamily(size_t d);

// One rational approximation q*alpha ~ p with 0 < p - q*alpha < 1/q.
struct Convergent {
    BigInt q, p;
};

// Continued-fraction convergents of alpha filtered to the side p - q*alpha > 0,
// in order. Each returned pair is verified exactly: coprime, within 1/q, and
// with p/q strictly decreasing along the list. alpha must be an irrational
// surd greater than 2.
std::vector<Convergent> dirichletConvergents(const Surd& alpha, size_t count);

// Integer data of one placed polygon Q_n and its covering strip M_n.
struct SyndeticStrip {
    long long xLo = 0, xHi = 0;          // integer span of the x projection
    long long yLo = 0, yHi = 0;          // integer span of the y projection
    std::vector<long long> removedRows;  // rows of lattice points inside the strip
};

// A finite window of the syndetic set whose square contains the empty
// polygons Q_1, ..., Q_nMax.
struct SyndeticConstruction {
    Surd alpha;
    std::vector<Convergent> convergents;        // approximation pool, in order
    std::vector<std::vector<Point2>> polygons;  // untranslated vertices: 0, v_0, ..., v_{n-1}
    std::vector<std::pair<long long, long long>> translations;  // w_n
    long long windowBound = 0;
    std::vector<long long> setA;  // the set restricted to [0, windowBound], ascending
    std::vector<SyndeticStrip> classes;  // one record per polygon, defining the partition
};

// Builds polygons P_1..P_nMax from partial sums of the approximation pairs,
// places them greedily so all x/y projections are pairwise separated by at
// least projectionGap, and fills in the surrounding 2-syndetic set over
// [0, windowBound]. Throws when a polygon does not fit the window.
SyndeticConstruction buildSyndetic(const Surd& alpha, size_t nMax, long long windowBound,
                                   long long projectionGap = 2);

// Recomputes every claim of the construction from first principles: gap bound
// on the point set, strip geometry, projection disjointness, removed-row
// spacing, emptiness of each polygon in the set's square, and the defining
// partition formula. Violations are results, not errors.
CertCheck verifySyndetic(const SyndeticConstruction& c);

}  // namespace helly
