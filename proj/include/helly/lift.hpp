#pragma once

#include "helly/boxes.hpp"
#include "helly/linear.hpp"

#include <optional>
#include <vector>

namespace helly {

// Closed halfspace {z : normal . z <= offset}.
struct Halfspace {
    std::vector<Rational> normal;
    Rational offset;

    Halfspace(std::vector<Rational> n, Rational c);
};

// Intersection of finitely many halfspaces in R^dim (empty list = all of R^dim).
struct Polyhedron {
    size_t dim;
    std::vector<Halfspace> halfspaces;

    Polyhedron(size_t d, std::vector<Halfspace> hs);
};

// A halfspace a.z <= c holds on all of box(x, y) iff it holds at the corner
// that puts y_i wherever a_i > 0 and x_i wherever a_i < 0. The lifted
// constraint lives over (x, y) in R^{2d}: columns 0..d-1 are x, d..2d-1 are y.
Halfspace liftHalfspace(const Halfspace& h);

// One lifted inequality; source is the index of the originating set, or -1
// for structural rows (ordering, thickness).
struct LiftedRow {
    Halfspace constraint;
    int source;
};

// Inequality description of {(x, y) : y >= x + t, box(x, y) subseteq every set}.
struct LiftedSystem {
    size_t dim;
    std::vector<LiftedRow> rows;

    LinearSystem toSystem() const;
};

LiftedSystem liftFamily(size_t dim, const std::vector<Polyhedron>& sets, const Rational& thickness);

// Fourier-Motzkin projection of one column (exposed for diagnostics).
LinearSystem axisProject(const LiftedSystem& sys, size_t col);

// Which corner coordinates are required to be integers during box search;
// the others range over the reals.
struct CornerMode {
    std::vector<bool> lowerInteger, upperInteger;

    static CornerMode allInteger(size_t d);
    static CornerMode allReal(size_t d);
    // integer lower corner; upper corner real in the first m coordinates
    static CornerMode upperMixed(size_t d, size_t m);
    // lower corner real in the first m coordinates; upper corner fully real
    static CornerMode lowerMixed(size_t d, size_t m);
};

enum class BoxSearchStatus {
    Found,      // best conforming box located; count is its lattice count
    Unbounded,  // conforming boxes with arbitrarily many lattice points exist
    NoBox,      // no t-thick box lies in the intersection at all
};

struct BoxSearchResult {
    BoxSearchStatus status = BoxSearchStatus::NoBox;
    std::optional<Box> box;  // witness; absent only for NoBox
    BigInt count = 0;

    // count == 0 with status Found means boxes exist but no corner-conforming
    // box contains a lattice point; the witness is then unconstrained by the
    // corner mode.
};

// Maximum number of lattice points of any t-thick box contained in every set,
// over boxes whose corners obey the mode. Exhaustive for rational data.
// Guards: dim <= 3, and the shape enumeration is budgeted (ScaleError).
BoxSearchResult maxLatticeBox(const std::vector<Polyhedron>& sets, const Rational& thickness,
                              const CornerMode& mode);

// Same search restricted to boxes that are degenerate outside `support`:
// those coordinates sit at a single integer value.
BoxSearchResult maxLatticeBoxSupported(const std::vector<Polyhedron>& sets,
                                       const Rational& thickness, const CornerMode& mode,
                                       const std::vector<bool>& support);

// True iff some conforming t-thick box contains at least n lattice points.
// Decides by testing only shapes minimal for the threshold, cheapest first.
bool hasBoxCountAtLeast(const std::vector<Polyhedron>& sets, const Rational& thickness,
                        const CornerMode& mode, const BigInt& n);

struct SubfamilyCheckResult {
    bool pass = true;
    std::vector<size_t> failing;  // first failing h-subfamily, by index
    BoxSearchResult detail;       // its best search result
};

// Checks that every size-h subfamily (the whole family when |F| <= h) admits
// a t-thick box with at least minPoints lattice points under the mode. Since
// boxes persist under shrinking intersections, this settles "every h or
// fewer". Guard: C(|F|, h) <= 10^6 x scale factor.
SubfamilyCheckResult subfamilyCheck(const std::vector<Polyhedron>& sets, size_t h,
                                    const Rational& thickness, const BigInt& minPoints,
                                    const CornerMode& mode, unsigned threads = 1);

struct VolumeSearchResult {
    bool feasible = false;   // some conforming box exists
    bool unbounded = false;  // volume can be made arbitrarily large
    Rational best;           // attained maximum when bounded; 0 if infeasible
    std::vector<size_t> support;  // maximizing coordinate subset
};

// Largest k-dimensional volume of a box of dimension at most k contained in
// every set. Exact for k <= 2 (linear, respectively product-over-polygon
// optimization); throws std::invalid_argument for k >= 3.
VolumeSearchResult maxKVolumeBox(const std::vector<Polyhedron>& sets, size_t k);

// Largest k-volume of the k-skeleton over boxes in the intersection.
// Supported exactly for k = 1 (any d) and k = d = 2; throws otherwise.
VolumeSearchResult maxSkeletonVolumeBox(const std::vector<Polyhedron>& sets, size_t k);

}  // namespace helly
