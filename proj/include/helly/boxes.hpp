#pragma once

#include "helly/rational.hpp"

#include <cstddef>
#include <vector>

namespace helly {

// Axis-parallel box given by its lower and upper corner. Degenerate edges
// (upper == lower in a coordinate) are permitted; upper < lower is not.
struct Box {
    std::vector<Rational> lower, upper;

    Box() = default;
    Box(std::vector<Rational> lo, std::vector<Rational> hi);

    size_t dim() const { return lower.size(); }
    Rational edge(size_t i) const { return upper[i] - lower[i]; }
    Rational minEdge() const;
};

// Number of integer lattice points in the closed box:
// prod_i max(0, floor(upper_i) - ceil(lower_i) + 1).
BigInt latticeCountBox(const Box& b);

// Full-dimensional product weight prod_i (upper_i - lower_i + 1); matches the
// lattice count exactly on integer corners.
Rational boxProductWeight(const Box& b);

// k-skeleton volume: 2^(d-k) * e_k(edge lengths), e_k the elementary
// symmetric polynomial. k = d gives the volume, k = 0 counts the vertices.
Rational skeletonVolume(const Box& b, size_t k);

struct SymmetricWeight {
    Rational total;                 // sum over all k-subsets of prod (edge+1)
    std::vector<size_t> bestSubset; // subset attaining the largest product
    Rational bestProduct;
};

// Symmetric lattice weight over k-subsets of coordinates, together with the
// majority subset: bestProduct * C(d,k) >= total.
SymmetricWeight symmetricLatticeWeight(const Box& b, size_t k);

// prod_i (upper_i - lower_i + 1) when every edge is at least t, else 0.
Rational thickGateWeight(const Box& b, const Rational& t);

// 1-D periodic set: residues mod period. Residues are reduced, sorted and
// deduplicated on construction, so equal sets compare equal.
class PeriodicSet1D {
public:
    PeriodicSet1D(Rational period, std::vector<Rational> residues);

    const Rational& period() const { return period_; }
    const std::vector<Rational>& residues() const { return residues_; }
    size_t countPerPeriod() const { return residues_.size(); }

    bool contains(const Rational& t) const;

    bool operator==(const PeriodicSet1D& o) const {
        return period_ == o.period_ && residues_ == o.residues_;
    }

private:
    Rational period_;
    std::vector<Rational> residues_;
};

// |[a, b] ∩ A| for a periodic set A; empty when b < a.
BigInt periodicCountInterval(const PeriodicSet1D& A, const Rational& a, const Rational& b);

// Product of 1-D periodic sets.
class PeriodicProductSet {
public:
    explicit PeriodicProductSet(std::vector<PeriodicSet1D> factors);

    size_t dim() const { return factors_.size(); }
    const PeriodicSet1D& factor(size_t i) const { return factors_[i]; }
    BigInt rho() const;  // number of points in the fundamental box [0,p_1) x ... x [0,p_d)

private:
    std::vector<PeriodicSet1D> factors_;
};

// Number of points of the product set in the closed box.
BigInt periodicCountBox(const PeriodicProductSet& Q, const Box& b);

}  // namespace helly
