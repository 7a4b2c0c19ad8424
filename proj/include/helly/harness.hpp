#pragma once

#include "helly/family.hpp"
#include "helly/lift.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace helly {

// Instance parameters for the verifiers. Each statement reads the fields it
// uses and rejects the rest: a stray parameter usually means a mixed-up
// invocation, not a harmless default.
struct TheoremParams {
    std::optional<BigInt> n;    // lattice point threshold
    Rational t{0};              // box thickness
    std::optional<size_t> m;    // thick coordinates; real coordinates in colorful mixed mode
    std::optional<size_t> k;    // box dimension / skeleton order
    std::optional<Rational> w;  // volume threshold
};

enum class Outcome { Confirmed, PremiseUnmet, Counterexample };

// "CONFIRMED" | "PREMISE_UNMET" | "COUNTEREXAMPLE"
std::string outcomeName(Outcome o);

// One statement instantiated on one family. Every statement in the catalog
// is proven, so Counterexample always indicts the artifact, never the
// mathematics; the property suites treat it as a failure.
struct VerificationReport {
    std::string theoremId;
    size_t dim = 0;
    size_t familySize = 0;
    BigInt helly{0};  // subfamily size actually checked
    TheoremParams params;
    Outcome outcome = Outcome::Confirmed;

    // PremiseUnmet: the offending subfamily (or rainbow selection).
    std::vector<size_t> failingSubfamily;

    // Conclusion-side data. Box witnesses replay through latticeCountBox,
    // point witnesses through the defining inequalities of their sets.
    std::optional<Box> witness;
    std::optional<BigInt> witnessCount;
    std::optional<Rational> witnessVolume;
    std::optional<std::vector<Rational>> witnessPoint;

    std::string note;
};

// Checks one quantitative Helly statement on a concrete family: the premise
// on every h-subfamily first (h is the statement's Helly number; a family
// with at most h members stands for itself), then the conclusion on the full
// intersection. Statement ids and the parameters they read:
//
//   boxIntegerLattice  n        h = 2^(2d-1); every h-subfamily holds a box
//                               with n lattice points, so does the family
//   unitThickFraction  n        h = 2d; 1-thick boxes with n points in the
//                               subfamilies, a box with ceil(n/3^(d-1)) in
//                               the intersection. The conservative product
//                               bound ceil(n/3^d) is checked as a fallback
//                               and the note always reports both thresholds.
//   kBoxLattice        n, k     h = 2^(2d-1); boxes of dimension at most k,
//                               the intersection keeps ceil(n/C(d,k)) points
//   kVolume            w, k     h = 2d; k-volume w, conclusion w/C(d,k)
//   skeletonVolume     w, k     h = 2d; k-skeleton volume w on both sides
//   P218               n, t, m  h = (m+1)2^(2d-m-1); t-thick boxes, the
//                               intersection keeps n over the
//                               guaranteedFraction factor
//   P219               n, t, m  h = (d+m+1)2^(d-m-1), 2d when m = d
//
// Unknown id or invalid parameters raise std::invalid_argument; subfamily
// enumeration is budgeted (ScaleError).
VerificationReport verifyTheoremInstance(const FamilyInstance& F, const std::string& theoremId,
                                         const TheoremParams& params, unsigned threads = 1);

enum class ColorfulMode { Doignon, MixedInteger, BoxInteger };

// "doignon" | "mixedInteger" | "boxInteger"; parse accepts exactly these.
std::string colorfulModeName(ColorfulMode mode);
ColorfulMode parseColorfulMode(const std::string& name);

// Colorful verification: the family's colors split it into classes, the
// premise ranges over rainbow selections (one set per class) and the
// conclusion must hold for the full intersection of a single class.
//   Doignon       2^d classes, witness a lattice point
//   MixedInteger  (m+1)2^(d-m) classes, witness a point whose first m
//                 coordinates are real and the rest integer
//   BoxInteger    2^(2d-1) classes, witness a box with n lattice points
// The class count must equal the mode's Helly number and every class must be
// nonempty (std::domain_error); the rainbow product is budgeted (ScaleError).
VerificationReport verifyColorfulInstance(const FamilyInstance& F, ColorfulMode mode,
                                          const TheoremParams& params, unsigned threads = 1);

struct CensusResult {
    Rational alpha;  // fraction of 2d-subfamilies holding a t-thick box with n points
    Rational beta;   // largest |G|/|F| over subfamilies G holding such a box
    BigInt goodCount{0};
    BigInt subfamilyCount{0};          // number of 2d-subfamilies
    size_t bestSize = 0;               // largest good subfamily size; 0 when none
    std::vector<size_t> bestSubfamily; // witness for beta
};

// Exact census behind the fractional statements: alpha enumerates all
// 2d-subfamilies, beta searches subfamilies largest-first. Requires
// 2d <= |F| (std::invalid_argument) and |F| <= 16 (ScaleError).
CensusResult fractionalCensus(const FamilyInstance& F, const BigInt& n, const Rational& t);

// Deterministic family generator: `count` sets in dimension d <= 3 named
// "set-1".., each cut by 1 to d+1 halfspaces with nonzero half-integer
// normals and offsets bounded by coefficientBound >= 1. With probability 1/2
// the last set becomes the window [-4B, 4B]^d (named "window") so bounded
// and unbounded instances both occur. Same arguments, bit-identical family,
// any platform.
FamilyInstance randomFamily(uint64_t seed, size_t d, size_t count, long long coefficientBound);

}  // namespace helly
