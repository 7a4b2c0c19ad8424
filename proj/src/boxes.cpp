#include "helly/boxes.hpp"

#include <algorithm>
#include <stdexcept>

namespace helly {

Box::Box(std::vector<Rational> lo, std::vector<Rational> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size()) throw std::invalid_argument("Box: corner dimensions differ");
    if (lower.empty()) throw std::invalid_argument("Box: dimension zero");
    for (size_t i = 0; i < lower.size(); ++i)
        if (upper[i] < lower[i]) throw std::invalid_argument("Box: upper corner below lower corner");
}

Rational Box::minEdge() const {
    Rational m = edge(0);
    for (size_t i = 1; i < dim(); ++i) m = std::min(m, edge(i));
    return m;
}

BigInt latticeCountBox(const Box& b) {
    BigInt total = 1;
    for (size_t i = 0; i < b.dim(); ++i) {
        BigInt f = b.upper[i].floor() - b.lower[i].ceil() + 1;
        if (f <= 0) return BigInt(0);
        total *= f;
    }
    return total;
}

Rational boxProductWeight(const Box& b) {
    Rational w(1);
    for (size_t i = 0; i < b.dim(); ++i) w *= b.edge(i) + Rational(1);
    return w;
}

Rational skeletonVolume(const Box& b, size_t k) {
    size_t d = b.dim();
    if (k > d) throw std::invalid_argument("skeletonVolume: k exceeds dimension");
    // elementary symmetric polynomial by the usual one-pass DP
    std::vector<Rational> e(k + 1, Rational(0));
    e[0] = Rational(1);
    for (size_t i = 0; i < d; ++i) {
        Rational len = b.edge(i);
        for (size_t j = std::min(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * len;
    }
    Rational scale(1);
    for (size_t i = 0; i + k < d; ++i) scale *= Rational(2);
    return scale * e[k];
}

SymmetricWeight symmetricLatticeWeight(const Box& b, size_t k) {
    size_t d = b.dim();
    if (k < 1 || k > d) throw std::invalid_argument("symmetricLatticeWeight: k out of range");
    SymmetricWeight out;
    out.total = Rational(0);
    out.bestProduct = Rational(-1);
    std::vector<size_t> pick(k);
    // enumerate k-subsets in lexicographic order; d is tiny here
    for (size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        Rational prod(1);
        for (size_t i : pick) prod *= b.edge(i) + Rational(1);
        out.total += prod;
        if (prod > out.bestProduct) {
            out.bestProduct = prod;
            out.bestSubset = pick;
        }
        bool advanced = false;
        for (size_t i = k; i-- > 0;) {
            if (pick[i] < d - k + i) {
                ++pick[i];
                for (size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

Rational thickGateWeight(const Box& b, const Rational& t) {
    if (t.sign() < 0) throw std::invalid_argument("thickGateWeight: negative thickness");
    if (b.minEdge() < t) return Rational(0);
    return boxProductWeight(b);
}

namespace {
// value reduced into [0, period)
Rational reduceMod(const Rational& v, const Rational& period) {
    Rational q(floorDiv(v.num() * period.den(), v.den() * period.num()));
    return v - period * q;
}
}  // namespace

PeriodicSet1D::PeriodicSet1D(Rational period, std::vector<Rational> residues)
    : period_(std::move(period)) {
    if (period_.sign() <= 0) throw std::invalid_argument("PeriodicSet1D: period must be positive");
    if (residues.empty()) throw std::invalid_argument("PeriodicSet1D: no residues");
    for (auto& r : residues) residues_.push_back(reduceMod(r, period_));
    std::sort(residues_.begin(), residues_.end());
    residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
}

bool PeriodicSet1D::contains(const Rational& t) const {
    Rational r = reduceMod(t, period_);
    return std::binary_search(residues_.begin(), residues_.end(), r);
}

BigInt periodicCountInterval(const PeriodicSet1D& A, const Rational& a, const Rational& b) {
    if (b < a) return BigInt(0);
    // per residue r: integers k with a <= r + k p <= b
    BigInt total = 0;
    for (const Rational& r : A.residues()) {
        Rational lo = (a - r) / A.period();
        Rational hi = (b - r) / A.period();
        BigInt cnt = hi.floor() - lo.ceil() + 1;
        if (cnt > 0) total += cnt;
    }
    return total;
}

PeriodicProductSet::PeriodicProductSet(std::vector<PeriodicSet1D> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("PeriodicProductSet: no factors");
}

BigInt PeriodicProductSet::rho() const {
    BigInt r = 1;
    for (const auto& f : factors_) r *= BigInt(f.countPerPeriod());
    return r;
}

BigInt periodicCountBox(const PeriodicProductSet& Q, const Box& b) {
    if (Q.dim() != b.dim()) throw std::invalid_argument("periodicCountBox: dimension mismatch");
    BigInt total = 1;
    for (size_t i = 0; i < Q.dim(); ++i) {
        total *= periodicCountInterval(Q.factor(i), b.lower[i], b.upper[i]);
        if (total == 0) return total;
    }
    return total;
}

}  // namespace helly
