#pragma once

#include "helly/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace helly {

// Raised when an exact search would exceed its enumeration budget. The CLI
// maps it to the usage/scale exit code. Budgets scale with the
// HELLY_SCALE_GUARD environment variable (an integer factor; unsafe).
class ScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

unsigned long long scaleGuardFactor();

// One inequality a·v <= c.
struct LinearRow {
    std::vector<Rational> a;
    Rational c;
};

struct Bounds {
    std::optional<Rational> lo, hi;  // absent side = unbounded
    bool bounded() const { return lo && hi; }
};

// A system of linear inequalities over a fixed set of columns. Elimination
// keeps the width and zeroes the column, which saves a lot of index
// bookkeeping in the callers. All arithmetic is exact.
class LinearSystem {
public:
    explicit LinearSystem(size_t width) : width_(width) {}

    size_t width() const { return width_; }
    const std::vector<LinearRow>& rows() const { return rows_; }
    bool knownInfeasible() const { return contradiction_; }

    void addRow(std::vector<Rational> coeffs, Rational offset);

    // Fourier-Motzkin projection of one column. Parallel derived rows are
    // merged, keeping the tightest offset per normal direction; a pair-count
    // budget guards against blowup.
    LinearSystem eliminated(size_t col) const;
    // Substitute v_col = value.
    LinearSystem pinned(size_t col, const Rational& value) const;

    bool feasibleOver(const std::vector<size_t>& cols) const;
    // Bounds of v_col after projecting out the other listed columns.
    // Meaningful only for feasible systems.
    Bounds columnBounds(size_t col, const std::vector<size_t>& cols) const;
    // Bounds of the functional f·v over the listed columns.
    Bounds functionalBounds(const std::vector<Rational>& f, const std::vector<size_t>& cols) const;
    // Feasible point over the listed columns, minimized coordinate by
    // coordinate in ascending column order (greedy lexicographic minimum;
    // a coordinate unbounded below is clamped to its upper bound, or 0).
    // Other columns of the returned vector are zero.
    std::optional<std::vector<Rational>> witnessOver(const std::vector<size_t>& cols) const;

private:
    size_t width_;
    std::vector<LinearRow> rows_;
    bool contradiction_ = false;

    void insertRow(LinearRow r);
};

// Extended gcd: returns g = gcd(a, b) and x, y with a x + b y = g.
BigInt extendedGcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

// Exact integer point search over the listed columns (assumed to carry every
// nonzero coefficient). Returns a full-width vector with integral values in
// those columns, or nullopt when no integer point exists. Complete for
// rational data: enumerates a bounded column if there is one, else reduces
// along a constraint normal with bounded value range, else walks a strictly
// interior recession direction far enough that rounding stays feasible.
std::optional<std::vector<Rational>> integerPointOver(const LinearSystem& sys,
                                                      const std::vector<size_t>& cols);

// Mixed search: realCols are projected out first, then the integer search
// runs, then the real columns are re-solved greedily. Returns a full-width
// witness or nullopt.
std::optional<std::vector<Rational>> mixedPointOver(const LinearSystem& sys,
                                                    const std::vector<size_t>& realCols,
                                                    const std::vector<size_t>& intCols);

}  // namespace helly
