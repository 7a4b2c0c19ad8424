#include "helly/linear.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace helly {

unsigned long long scaleGuardFactor() {
    static unsigned long long factor = [] {
        const char* env = std::getenv("HELLY_SCALE_GUARD");
        if (!env) return 1ull;
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        return (end && *end == '\0' && v >= 1) ? v : 1ull;
    }();
    return factor;
}

namespace {

constexpr unsigned long long kEnumBudget = 1u << 17;

bool isZeroVector(const std::vector<Rational>& a) {
    for (const auto& x : a)
        if (!x.isZero()) return false;
    return true;
}

// scale so the first nonzero coefficient has magnitude 1; canonical for dedup
void normalizeRow(LinearRow& r) {
    for (const auto& x : r.a) {
        if (!x.isZero()) {
            Rational s = x.abs();
            for (auto& y : r.a) y /= s;
            r.c /= s;
            return;
        }
    }
}

}  // namespace

void LinearSystem::addRow(std::vector<Rational> coeffs, Rational offset) {
    if (coeffs.size() != width_) throw std::invalid_argument("LinearSystem::addRow: width mismatch");
    LinearRow r{std::move(coeffs), std::move(offset)};
    insertRow(std::move(r));
}

void LinearSystem::insertRow(LinearRow r) {
    if (isZeroVector(r.a)) {
        if (r.c.sign() < 0) contradiction_ = true;
        return;  // 0 <= c carries no information when c >= 0
    }
    normalizeRow(r);
    rows_.push_back(std::move(r));
}

LinearSystem LinearSystem::eliminated(size_t col) const {
    LinearSystem out(width_);
    out.contradiction_ = contradiction_;

    std::vector<const LinearRow*> pos, neg;
    for (const auto& r : rows_) {
        int s = r.a[col].sign();
        if (s > 0) pos.push_back(&r);
        else if (s < 0) neg.push_back(&r);
        else out.rows_.push_back(r);
    }
    unsigned long long pairs = static_cast<unsigned long long>(pos.size()) * neg.size();
    if (pairs > 4'000'000ull * scaleGuardFactor())
        throw ScaleError("linear projection: row pair budget exhausted "
                         "(set HELLY_SCALE_GUARD to raise)");
    for (const LinearRow* p : pos) {
        for (const LinearRow* n : neg) {
            Rational sp = p->a[col];         // > 0
            Rational sn = -(n->a[col]);      // > 0
            LinearRow r;
            r.a.resize(width_);
            for (size_t j = 0; j < width_; ++j) r.a[j] = p->a[j] / sp + n->a[j] / sn;
            r.c = p->c / sp + n->c / sn;
            r.a[col] = Rational(0);  // exact by construction; avoid residue from reduction
            out.insertRow(std::move(r));
        }
    }

    // duplicate rows and parallel rows with slacker offsets add nothing
    std::map<std::vector<std::string>, size_t> seen;
    std::vector<LinearRow> kept;
    for (auto& r : out.rows_) {
        std::vector<std::string> key;
        key.reserve(width_);
        for (const auto& x : r.a) key.push_back(x.str());
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(std::move(key), kept.size());
            kept.push_back(std::move(r));
        } else if (r.c < kept[it->second].c) {
            kept[it->second] = std::move(r);
        }
    }
    out.rows_ = std::move(kept);
    return out;
}

LinearSystem LinearSystem::pinned(size_t col, const Rational& value) const {
    LinearSystem out(width_);
    out.contradiction_ = contradiction_;
    for (const auto& r : rows_) {
        LinearRow nr = r;
        if (!nr.a[col].isZero()) {
            nr.c -= nr.a[col] * value;
            nr.a[col] = Rational(0);
        }
        out.insertRow(std::move(nr));
    }
    return out;
}

namespace {

// elimination order heuristic: fewest pos*neg products first
size_t cheapestColumn(const LinearSystem& sys, const std::vector<size_t>& cols) {
    size_t best = cols[0];
    long long bestCost = -1;
    for (size_t col : cols) {
        long long p = 0, n = 0;
        for (const auto& r : sys.rows()) {
            int s = r.a[col].sign();
            if (s > 0) ++p;
            else if (s < 0) ++n;
        }
        long long cost = p * n - (p + n);
        if (bestCost == -1 || cost < bestCost) {
            bestCost = cost;
            best = col;
        }
    }
    return best;
}

LinearSystem projectAll(LinearSystem sys, std::vector<size_t> cols) {
    while (!cols.empty() && !sys.knownInfeasible()) {
        size_t col = cheapestColumn(sys, cols);
        sys = sys.eliminated(col);
        cols.erase(std::find(cols.begin(), cols.end(), col));
    }
    return sys;
}

}  // namespace

bool LinearSystem::feasibleOver(const std::vector<size_t>& cols) const {
    if (contradiction_) return false;
    LinearSystem proj = projectAll(*this, cols);
    return !proj.knownInfeasible();
}

Bounds LinearSystem::columnBounds(size_t col, const std::vector<size_t>& cols) const {
    std::vector<size_t> others;
    for (size_t c : cols)
        if (c != col) others.push_back(c);
    LinearSystem proj = projectAll(*this, others);
    Bounds b;
    for (const auto& r : proj.rows()) {
        int s = r.a[col].sign();
        if (s == 0) continue;
        Rational v = r.c / r.a[col];
        if (s > 0) {
            if (!b.hi || v < *b.hi) b.hi = v;
        } else {
            if (!b.lo || v > *b.lo) b.lo = v;
        }
    }
    return b;
}

Bounds LinearSystem::functionalBounds(const std::vector<Rational>& f,
                                      const std::vector<size_t>& cols) const {
    // introduce u = f·v, then bound u
    LinearSystem aug(width_ + 1);
    for (const auto& r : rows_) {
        std::vector<Rational> a = r.a;
        a.push_back(Rational(0));
        aug.addRow(std::move(a), r.c);
    }
    std::vector<Rational> up(width_ + 1, Rational(0)), down(width_ + 1, Rational(0));
    for (size_t c : cols) {
        up[c] = -f[c];
        down[c] = f[c];
    }
    up[width_] = Rational(1);    //  u - f·v <= 0
    down[width_] = Rational(-1); //  f·v - u <= 0
    aug.addRow(std::move(up), Rational(0));
    aug.addRow(std::move(down), Rational(0));
    return aug.columnBounds(width_, [&] {
        std::vector<size_t> cs(cols);
        cs.push_back(width_);
        return cs;
    }());
}

std::optional<std::vector<Rational>> LinearSystem::witnessOver(const std::vector<size_t>& cols) const {
    if (!feasibleOver(cols)) return std::nullopt;
    LinearSystem cur = *this;
    std::vector<size_t> remaining = cols;
    std::vector<Rational> v(width_, Rational(0));
    std::sort(remaining.begin(), remaining.end());
    for (size_t col : remaining) {
        Bounds b = cur.columnBounds(col, remaining);
        Rational val = b.lo ? *b.lo : (b.hi ? *b.hi : Rational(0));
        v[col] = val;
        cur = cur.pinned(col, val);
    }
    return v;
}

BigInt extendedGcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return a < 0 ? BigInt(-a) : a;
    }
    BigInt x1, y1;
    BigInt g = extendedGcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

namespace {

LinearSystem compactCopyImpl(const LinearSystem& sys, const std::vector<size_t>& cols) {
    LinearSystem out(cols.size());
    for (const auto& r : sys.rows()) {
        std::vector<Rational> a(cols.size());
        for (size_t i = 0; i < cols.size(); ++i) a[i] = r.a[cols[i]];
        out.addRow(std::move(a), r.c);
    }
    return out;
}

std::vector<size_t> allCols(const LinearSystem& sys) {
    std::vector<size_t> cols(sys.width());
    for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return cols;
}

LinearSystem dropColumn(const LinearSystem& sys, size_t col) {
    LinearSystem out(sys.width() - 1);
    for (const auto& r : sys.rows()) {
        std::vector<Rational> a;
        a.reserve(sys.width() - 1);
        for (size_t j = 0; j < sys.width(); ++j)
            if (j != col) a.push_back(r.a[j]);
        out.addRow(std::move(a), r.c);
    }
    if (sys.knownInfeasible()) out.addRow(std::vector<Rational>(sys.width() - 1, Rational(0)), Rational(-1));
    return out;
}

// integer primitive normal of a row over all columns, or empty if zero
std::vector<BigInt> primitiveNormal(const LinearRow& r) {
    BigInt lcm = 1;
    for (const auto& x : r.a) lcm = boost::multiprecision::lcm(lcm, x.den());
    std::vector<BigInt> w;
    w.reserve(r.a.size());
    BigInt g = 0;
    for (const auto& x : r.a) {
        BigInt v = x.num() * (lcm / x.den());
        g = boost::multiprecision::gcd(g, v < 0 ? BigInt(-v) : v);
        w.push_back(std::move(v));
    }
    if (g == 0) return {};
    if (g > 1)
        for (auto& v : w) v /= g;
    return w;
}

// Unimodular U with w·U = (1, 0, ..., 0); requires gcd(w) = 1.
std::vector<std::vector<BigInt>> unimodularCompletion(std::vector<BigInt> w) {
    size_t k = w.size();
    std::vector<std::vector<BigInt>> U(k, std::vector<BigInt>(k, 0));
    for (size_t i = 0; i < k; ++i) U[i][i] = 1;
    for (size_t i = 1; i < k; ++i) {
        if (w[i] == 0) continue;
        BigInt x, y;
        BigInt g = extendedGcd(w[0], w[i], x, y);
        BigInt p = w[0] / g, q = w[i] / g;
        // columns 0 and i: [[x, -q], [y, p]] has determinant xp + yq = 1
        for (size_t r = 0; r < k; ++r) {
            BigInt c0 = U[r][0] * x + U[r][i] * y;
            BigInt ci = U[r][0] * (-q) + U[r][i] * p;
            U[r][0] = std::move(c0);
            U[r][i] = std::move(ci);
        }
        w[0] = g;
        w[i] = 0;
    }
    if (w[0] == -1)
        for (size_t r = 0; r < k; ++r) U[r][0] = -U[r][0];
    return U;
}

Rational dotRow(const std::vector<Rational>& a, const std::vector<Rational>& v) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].isZero()) s += a[i] * v[i];
    return s;
}

void spendCandidate(unsigned long long& budget) {
    if (budget == 0)
        throw ScaleError("integer search: candidate budget exhausted "
                         "(set HELLY_SCALE_GUARD to raise)");
    --budget;
}

// all columns active; returns one integral solution; budget counts candidate
// values tried across the whole recursion
std::optional<std::vector<BigInt>> intSearch(const LinearSystem& sys, unsigned long long& budget) {
    size_t k = sys.width();
    if (!sys.feasibleOver(allCols(sys))) return std::nullopt;
    if (k == 0) return std::vector<BigInt>{};

    // 1: enumerate a bounded column (narrowest first)
    std::optional<size_t> bestCol;
    BigInt bestWidth;
    std::vector<Bounds> colBounds(k);
    for (size_t j = 0; j < k; ++j) {
        colBounds[j] = sys.columnBounds(j, allCols(sys));
        if (colBounds[j].bounded()) {
            BigInt w = colBounds[j].hi->floor() - colBounds[j].lo->ceil() + 1;
            if (!bestCol || w < bestWidth) {
                bestCol = j;
                bestWidth = w;
            }
        }
    }
    if (bestCol) {
        if (bestWidth <= 0) return std::nullopt;
        BigInt lo = colBounds[*bestCol].lo->ceil(), hi = colBounds[*bestCol].hi->floor();
        for (BigInt z = lo; z <= hi; ++z) {
            spendCandidate(budget);
            LinearSystem sub = dropColumn(sys.pinned(*bestCol, Rational(z)), *bestCol);
            auto rest = intSearch(sub, budget);
            if (rest) {
                rest->insert(rest->begin() + static_cast<long>(*bestCol), z);
                return rest;
            }
        }
        return std::nullopt;
    }

    // 2: every column is unbounded; look for a constraint normal whose value
    // range is bounded and slice along its integer levels
    for (const auto& row : sys.rows()) {
        std::vector<BigInt> w = primitiveNormal(row);
        if (w.empty()) continue;
        std::vector<Rational> f(k);
        for (size_t j = 0; j < k; ++j) f[j] = Rational(w[j]);
        Bounds b = sys.functionalBounds(f, allCols(sys));
        if (!b.bounded()) continue;
        BigInt lo = b.lo->ceil(), hi = b.hi->floor();
        if (hi < lo) return std::nullopt;  // integer normal: w·u is integral on Z^k
        auto U = unimodularCompletion(w);  // u = U (s, z)^T enumerates w·u = s
        // transformed rows a·U are shared by every slice; only offsets move
        std::vector<std::vector<Rational>> az(sys.rows().size(), std::vector<Rational>(k - 1));
        std::vector<Rational> as(sys.rows().size());
        for (size_t ri = 0; ri < sys.rows().size(); ++ri) {
            const auto& a = sys.rows()[ri].a;
            for (size_t col = 0; col < k; ++col) {
                Rational acc(0);
                for (size_t rr = 0; rr < k; ++rr)
                    if (!a[rr].isZero()) acc += a[rr] * Rational(U[rr][col]);
                if (col == 0) as[ri] = std::move(acc);
                else az[ri][col - 1] = std::move(acc);
            }
        }
        for (BigInt s = lo; s <= hi; ++s) {
            spendCandidate(budget);
            LinearSystem zsys(k - 1);
            for (size_t ri = 0; ri < sys.rows().size(); ++ri)
                zsys.addRow(az[ri], sys.rows()[ri].c - as[ri] * Rational(s));
            auto z = intSearch(zsys, budget);
            if (z) {
                std::vector<BigInt> u(k);
                for (size_t r = 0; r < k; ++r) {
                    BigInt acc = U[r][0] * s;
                    for (size_t j = 0; j + 1 < k; ++j) acc += U[r][j + 1] * (*z)[j];
                    u[r] = std::move(acc);
                }
                return u;
            }
        }
        return std::nullopt;
    }

    // 3: no normal is bounded, so {a·v <= -1 for all rows} is feasible
    // (otherwise a Farkas combination would bound one of them); walk that
    // direction until every slack exceeds the l1 norm of its row, then round.
    LinearSystem dir(k);
    for (const auto& r : sys.rows()) dir.addRow(r.a, Rational(-1));
    auto v = dir.witnessOver(allCols(dir));
    if (!v) throw std::logic_error("integer search: interior direction must exist here");
    auto base = sys.witnessOver(allCols(sys));
    Rational tau(0);
    for (const auto& r : sys.rows()) {
        Rational l1(0);
        for (const auto& x : r.a) l1 += x.abs();
        Rational slack0 = r.c - dotRow(r.a, *base);
        Rational need = l1 - slack0;  // slack grows at rate >= 1 along v
        if (need > tau) tau = need;
    }
    std::vector<BigInt> u(k);
    for (size_t j = 0; j < k; ++j) {
        Rational pj = (*base)[j] + tau * (*v)[j];
        u[j] = (pj + Rational(BigInt(1), BigInt(2))).floor();
    }
    for (const auto& r : sys.rows()) {
        Rational lhs(0);
        for (size_t j = 0; j < k; ++j) lhs += r.a[j] * Rational(u[j]);
        if (lhs > r.c) throw std::logic_error("integer search: rounded interior point infeasible");
    }
    return u;
}

}  // namespace

std::optional<std::vector<Rational>> integerPointOver(const LinearSystem& sys,
                                                      const std::vector<size_t>& cols) {
    if (sys.knownInfeasible()) return std::nullopt;
    LinearSystem compact = compactCopyImpl(sys, cols);
    unsigned long long budget = kEnumBudget * scaleGuardFactor();
    auto sol = intSearch(compact, budget);
    if (!sol) return std::nullopt;
    std::vector<Rational> out(sys.width(), Rational(0));
    for (size_t i = 0; i < cols.size(); ++i) out[cols[i]] = Rational((*sol)[i]);
    return out;
}

std::optional<std::vector<Rational>> mixedPointOver(const LinearSystem& sys,
                                                    const std::vector<size_t>& realCols,
                                                    const std::vector<size_t>& intCols) {
    // project the reals out (descending order), remember each stage
    std::vector<size_t> realsAsc = realCols;
    std::sort(realsAsc.begin(), realsAsc.end());
    std::vector<LinearSystem> stages;  // stages[i] still contains realsAsc[0..i]
    stages.reserve(realsAsc.size());
    LinearSystem cur = sys;
    for (size_t i = realsAsc.size(); i-- > 0;) {
        stages.push_back(cur);
        cur = cur.eliminated(realsAsc[i]);
    }
    std::reverse(stages.begin(), stages.end());  // stages[i] has reals 0..i live

    auto ints = integerPointOver(cur, intCols);
    if (!ints) return std::nullopt;

    std::vector<Rational> v = *ints;
    for (size_t i = 0; i < realsAsc.size(); ++i) {
        // pin everything already decided, then bound this real column
        LinearSystem st = stages[i];
        for (size_t c : intCols) st = st.pinned(c, v[c]);
        for (size_t j = 0; j < i; ++j) st = st.pinned(realsAsc[j], v[realsAsc[j]]);
        std::vector<size_t> live;
        for (size_t j = i; j < realsAsc.size(); ++j) live.push_back(realsAsc[j]);
        Bounds b = st.columnBounds(realsAsc[i], live);
        v[realsAsc[i]] = b.lo ? *b.lo : (b.hi ? *b.hi : Rational(0));
    }
    return v;
}

}  // namespace helly
