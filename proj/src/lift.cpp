#include "helly/lift.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

namespace helly {

namespace {

bool allZero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.isZero()) return false;
    return true;
}

std::vector<size_t> iotaCols(size_t n, size_t from = 0) {
    std::vector<size_t> cols(n);
    std::iota(cols.begin(), cols.end(), from);
    return cols;
}

long long toLong(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<long long>::max()) ||
        v < BigInt(std::numeric_limits<long long>::min()))
        throw ScaleError("box search: shape bound exceeds machine range");
    return static_cast<long long>(v);
}

Box boxFromCorners(const std::vector<Rational>& w, size_t d) {
    std::vector<Rational> lo(w.begin(), w.begin() + d), hi(w.begin() + d, w.begin() + 2 * d);
    return Box(std::move(lo), std::move(hi));
}

// Anchored search space: columns 0..d-1 are x, d..2d-1 are y, 2d..3d-1 the
// integer anchors u with x <= u and u + shape <= y. A box conforming to the
// mode and feasible here contains the shape's full integer grid.
LinearSystem anchoredSystem(const LiftedSystem& ls, const std::vector<bool>& support,
                            const std::vector<long long>& shape) {
    size_t d = ls.dim;
    LinearSystem sys(3 * d);
    for (const auto& r : ls.rows) {
        std::vector<Rational> a(3 * d);
        for (size_t i = 0; i < 2 * d; ++i) a[i] = r.constraint.normal[i];
        sys.addRow(std::move(a), r.constraint.offset);
    }
    for (size_t i = 0; i < d; ++i) {
        std::vector<Rational> low(3 * d);
        low[i] = Rational(1);
        low[2 * d + i] = Rational(-1);
        sys.addRow(std::move(low), Rational(0));  // x_i <= u_i

        std::vector<Rational> high(3 * d);
        high[2 * d + i] = Rational(1);
        high[d + i] = Rational(-1);
        sys.addRow(std::move(high), Rational(-shape[i]));  // u_i + g_i <= y_i

        if (!support[i]) {
            std::vector<Rational> deg(3 * d);
            deg[d + i] = Rational(1);
            deg[i] = Rational(-1);
            sys.addRow(std::move(deg), Rational(0));  // y_i <= x_i
        }
    }
    return sys;
}

// Corner-pair system over (x, y) only, with degeneracy rows for coordinates
// outside the support.
LinearSystem cornerSystem(const LiftedSystem& ls, const std::vector<bool>& support) {
    size_t d = ls.dim;
    LinearSystem sys = ls.toSystem();
    for (size_t i = 0; i < d; ++i) {
        if (support[i]) continue;
        std::vector<Rational> deg(2 * d);
        deg[d + i] = Rational(1);
        deg[i] = Rational(-1);
        sys.addRow(std::move(deg), Rational(0));
    }
    return sys;
}

void partitionColumns(const CornerMode& mode, size_t d, std::vector<size_t>& realCols,
                      std::vector<size_t>& intCols) {
    for (size_t i = 0; i < d; ++i) (mode.lowerInteger[i] ? intCols : realCols).push_back(i);
    for (size_t i = 0; i < d; ++i) (mode.upperInteger[i] ? intCols : realCols).push_back(d + i);
    for (size_t i = 0; i < d; ++i) intCols.push_back(2 * d + i);
}

unsigned long long shapeBudget() {
    const unsigned long long hardCap = 1000000000000ull;
    unsigned long long cap = 1000000ull * scaleGuardFactor();
    return std::min(cap, hardCap);
}

struct Shape {
    unsigned long long product;
    std::array<long long, 3> g;
};

// All shapes 0 <= g <= gmax as (product, coordinates), product = prod(g_i + 1).
std::vector<Shape> enumerateShapes(const std::vector<long long>& gmax) {
    size_t d = gmax.size();
    std::vector<Shape> out;
    std::array<long long, 3> g{0, 0, 0};
    while (true) {
        unsigned long long p = 1;
        for (size_t i = 0; i < d; ++i) p *= static_cast<unsigned long long>(g[i] + 1);
        out.push_back({p, g});
        size_t i = 0;
        while (i < d && g[i] == gmax[i]) g[i++] = 0;
        if (i == d) break;
        ++g[i];
    }
    return out;
}

bool dominatesAny(const std::vector<std::array<long long, 3>>& minimals,
                  const std::array<long long, 3>& g, size_t d) {
    for (const auto& m : minimals) {
        bool dom = true;
        for (size_t i = 0; i < d; ++i)
            if (g[i] < m[i]) {
                dom = false;
                break;
            }
        if (dom) return true;
    }
    return false;
}

void recordInfeasible(std::vector<std::array<long long, 3>>& minimals,
                      const std::array<long long, 3>& g, size_t d) {
    std::erase_if(minimals, [&](const std::array<long long, 3>& m) {
        for (size_t i = 0; i < d; ++i)
            if (m[i] < g[i]) return false;
        return true;
    });
    minimals.push_back(g);
}

struct SearchSpace {
    size_t d;
    LiftedSystem lifted;
    std::vector<bool> support;
    std::vector<size_t> realCols, intCols;
    LinearSystem corner;   // width 2d
    LinearSystem anchor0;  // width 3d, shape 0
};

SearchSpace prepare(const std::vector<Polyhedron>& sets, const Rational& thickness,
                    const CornerMode& mode, const std::vector<bool>& support) {
    if (sets.empty()) throw std::invalid_argument("box search: empty family");
    size_t d = sets.front().dim;
    if (d > 3) throw ScaleError("box search: dimension above 3 is not supported");
    if (mode.lowerInteger.size() != d || mode.upperInteger.size() != d)
        throw std::invalid_argument("box search: corner mode has the wrong dimension");
    if (support.size() != d) throw std::invalid_argument("box search: support mask has the wrong dimension");

    SearchSpace s{d, liftFamily(d, sets, thickness), support, {}, {}, LinearSystem(0), LinearSystem(0)};
    partitionColumns(mode, d, s.realCols, s.intCols);
    s.corner = cornerSystem(s.lifted, support);
    s.anchor0 = anchoredSystem(s.lifted, support, std::vector<long long>(d, 0));
    return s;
}

// Edge headroom of the anchored relaxation: sup(y_i - u_i) per coordinate.
// An infinite side means conforming boxes of unbounded count exist whenever
// the shape-0 system has a point: a rational recession direction with growth
// in that edge can be stepped in integer multiples, preserving anchors and
// corner integrality.
struct EdgeBounds {
    bool unbounded = false;
    std::vector<long long> gmax;
};

EdgeBounds edgeBounds(const SearchSpace& s) {
    EdgeBounds eb;
    eb.gmax.assign(s.d, 0);
    std::vector<size_t> all = iotaCols(3 * s.d);
    for (size_t i = 0; i < s.d; ++i) {
        if (!s.support[i]) continue;
        std::vector<Rational> f(3 * s.d);
        f[s.d + i] = Rational(1);
        f[2 * s.d + i] = Rational(-1);
        Bounds b = s.anchor0.functionalBounds(f, all);
        if (!b.hi) {
            eb.unbounded = true;
            return eb;
        }
        BigInt g = b.hi->floor();
        eb.gmax[i] = g > 0 ? toLong(g) : 0;
    }
    return eb;
}

BoxSearchResult runSearch(const std::vector<Polyhedron>& sets, const Rational& thickness,
                          const CornerMode& mode, const std::vector<bool>& support) {
    SearchSpace s = prepare(sets, thickness, mode, support);

    std::vector<size_t> cols2d = iotaCols(2 * s.d);
    if (!s.corner.feasibleOver(cols2d)) return {};

    auto w0 = mixedPointOver(s.anchor0, s.realCols, s.intCols);
    if (!w0) {
        auto wr = s.corner.witnessOver(cols2d);
        BoxSearchResult r;
        r.status = BoxSearchStatus::Found;
        r.box = boxFromCorners(*wr, s.d);
        r.count = 0;
        return r;
    }

    EdgeBounds eb = edgeBounds(s);
    if (eb.unbounded) {
        BoxSearchResult r;
        r.status = BoxSearchStatus::Unbounded;
        r.box = boxFromCorners(*w0, s.d);
        r.count = latticeCountBox(*r.box);
        return r;
    }

    unsigned long long total = 1;
    for (size_t i = 0; i < s.d; ++i) {
        unsigned long long side = static_cast<unsigned long long>(eb.gmax[i]) + 1;
        if (total > shapeBudget() / side)
            throw ScaleError("box search: shape enumeration over budget (HELLY_SCALE_GUARD raises it)");
        total *= side;
    }

    std::vector<Shape> shapes = enumerateShapes(eb.gmax);
    std::sort(shapes.begin(), shapes.end(), [](const Shape& a, const Shape& b) {
        if (a.product != b.product) return a.product > b.product;
        return a.g < b.g;
    });

    std::vector<std::array<long long, 3>> infeasible;
    for (const Shape& sh : shapes) {
        if (dominatesAny(infeasible, sh.g, s.d)) continue;
        if (sh.product == 1) {
            // the all-zero shape; already solved
            BoxSearchResult r;
            r.status = BoxSearchStatus::Found;
            r.box = boxFromCorners(*w0, s.d);
            r.count = latticeCountBox(*r.box);
            return r;
        }
        LinearSystem sys =
            anchoredSystem(s.lifted, s.support, std::vector<long long>(sh.g.begin(), sh.g.begin() + s.d));
        auto w = mixedPointOver(sys, s.realCols, s.intCols);
        if (w) {
            BoxSearchResult r;
            r.status = BoxSearchStatus::Found;
            r.box = boxFromCorners(*w, s.d);
            r.count = latticeCountBox(*r.box);
            return r;
        }
        recordInfeasible(infeasible, sh.g, s.d);
    }
    throw std::logic_error("box search: shape enumeration skipped the base shape");
}

unsigned long long binomialCapped(size_t n, size_t k, unsigned long long cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (size_t i = 1; i <= k; ++i) {
        BigInt next = BigInt(r) * BigInt(n - k + i) / BigInt(i);
        if (next > BigInt(cap)) return cap + 1;
        r = static_cast<unsigned long long>(next);
    }
    return r;
}

std::vector<size_t> comboFromRank(unsigned long long rank, size_t n, size_t k,
                                  unsigned long long cap) {
    std::vector<size_t> combo;
    combo.reserve(k);
    size_t start = 0;
    for (size_t pos = 0; pos < k; ++pos) {
        for (size_t v = start; v < n; ++v) {
            unsigned long long c = binomialCapped(n - 1 - v, k - 1 - pos, cap);
            if (rank < c) {
                combo.push_back(v);
                start = v + 1;
                break;
            }
            rank -= c;
        }
    }
    return combo;
}

std::vector<Polyhedron> subsetOf(const std::vector<Polyhedron>& sets,
                                 const std::vector<size_t>& idx) {
    std::vector<Polyhedron> out;
    out.reserve(idx.size());
    for (size_t i : idx) out.push_back(sets[i]);
    return out;
}

// Exact maximum of c1*c2 over the feasible region of a two-column system.
struct PlaneProductMax {
    enum class Kind { Empty, Unbounded, Value } kind;
    Rational value;
};

PlaneProductMax maxPlaneProduct(const LinearSystem& sys, size_t c1, size_t c2) {
    std::vector<size_t> cols = {c1, c2};
    if (!sys.feasibleOver(cols)) return {PlaneProductMax::Kind::Empty, Rational(0)};

    // effective rows over the two columns
    struct Row {
        Rational a1, a2, c;
    };
    std::vector<Row> rows;
    for (const auto& r : sys.rows()) {
        if (r.a[c1].isZero() && r.a[c2].isZero()) continue;
        rows.push_back({r.a[c1], r.a[c2], r.c});
    }

    auto recessionFeasible = [&](bool needFirst, bool needSecond) {
        LinearSystem cone(2);
        for (const auto& r : rows) cone.addRow({r.a1, r.a2}, Rational(0));
        if (needFirst) cone.addRow({Rational(-1), Rational(0)}, Rational(-1));
        if (needSecond) cone.addRow({Rational(0), Rational(-1)}, Rational(-1));
        return cone.feasibleOver({0, 1});
    };

    Bounds b1 = sys.columnBounds(c1, cols);
    Bounds b2 = sys.columnBounds(c2, cols);
    if (recessionFeasible(true, true)) return {PlaneProductMax::Kind::Unbounded, Rational(0)};
    if (recessionFeasible(true, false)) {
        if (b2.hi && b2.hi->sign() <= 0) return {PlaneProductMax::Kind::Value, Rational(0)};
        return {PlaneProductMax::Kind::Unbounded, Rational(0)};
    }
    if (recessionFeasible(false, true)) {
        if (b1.hi && b1.hi->sign() <= 0) return {PlaneProductMax::Kind::Value, Rational(0)};
        return {PlaneProductMax::Kind::Unbounded, Rational(0)};
    }

    // compact region: the maximum sits at a vertex or at a per-edge critical
    // point of the product restricted to that edge's line
    auto inside = [&](const Rational& e1, const Rational& e2) {
        for (const auto& r : rows)
            if (r.a1 * e1 + r.a2 * e2 > r.c) return false;
        return true;
    };
    bool any = false;
    Rational best(0);
    auto consider = [&](const Rational& e1, const Rational& e2) {
        if (!inside(e1, e2)) return;
        Rational v = e1 * e2;
        if (!any || v > best) best = v;
        any = true;
    };
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = i + 1; j < rows.size(); ++j) {
            Rational det = rows[i].a1 * rows[j].a2 - rows[j].a1 * rows[i].a2;
            if (det.isZero()) continue;
            Rational e1 = (rows[i].c * rows[j].a2 - rows[j].c * rows[i].a2) / det;
            Rational e2 = (rows[i].a1 * rows[j].c - rows[j].a1 * rows[i].c) / det;
            consider(e1, e2);
        }
        if (!rows[i].a1.isZero() && !rows[i].a2.isZero())
            consider(rows[i].c / (Rational(2) * rows[i].a1), rows[i].c / (Rational(2) * rows[i].a2));
    }
    if (!any) throw std::logic_error("plane product: compact region without candidate points");
    return {PlaneProductMax::Kind::Value, best};
}

// System over (x, y, E1[, E2]) pinning E_j = y_{V_j} - x_{V_j} and collapsing
// coordinates outside V, with the corner columns projected away.
LinearSystem edgePlaneSystem(const LiftedSystem& ls, const std::vector<size_t>& V,
                             bool collapseOthers) {
    size_t d = ls.dim;
    size_t k = V.size();
    LinearSystem sys(2 * d + k);
    for (const auto& r : ls.rows) {
        std::vector<Rational> a(2 * d + k);
        for (size_t i = 0; i < 2 * d; ++i) a[i] = r.constraint.normal[i];
        sys.addRow(std::move(a), r.constraint.offset);
    }
    if (collapseOthers) {
        for (size_t i = 0; i < d; ++i) {
            if (std::find(V.begin(), V.end(), i) != V.end()) continue;
            std::vector<Rational> deg(2 * d + k);
            deg[d + i] = Rational(1);
            deg[i] = Rational(-1);
            sys.addRow(std::move(deg), Rational(0));
        }
    }
    for (size_t j = 0; j < k; ++j) {
        std::vector<Rational> def(2 * d + k);
        def[2 * d + j] = Rational(1);
        def[d + V[j]] = Rational(-1);
        def[V[j]] = Rational(1);
        sys.addRow(def, Rational(0));
        for (auto& v : def) v = -v;
        sys.addRow(std::move(def), Rational(0));
    }
    for (size_t i = 0; i < 2 * d; ++i) sys = sys.eliminated(i);
    return sys;
}

void forEachSubset(size_t d, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> V(k);
    std::iota(V.begin(), V.end(), 0);
    while (true) {
        fn(V);
        size_t i = k;
        while (i > 0) {
            --i;
            if (V[i] != i + d - k) {
                ++V[i];
                for (size_t j = i + 1; j < k; ++j) V[j] = V[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

}  // namespace

Halfspace::Halfspace(std::vector<Rational> n, Rational c) : normal(std::move(n)), offset(std::move(c)) {
    if (normal.empty() || allZero(normal)) throw std::invalid_argument("Halfspace: zero normal");
}

Polyhedron::Polyhedron(size_t d, std::vector<Halfspace> hs) : dim(d), halfspaces(std::move(hs)) {
    if (dim == 0) throw std::invalid_argument("Polyhedron: dimension must be positive");
    for (const auto& h : halfspaces)
        if (h.normal.size() != dim) throw std::invalid_argument("Polyhedron: constraint width mismatch");
}

Halfspace liftHalfspace(const Halfspace& h) {
    size_t d = h.normal.size();
    std::vector<Rational> a(2 * d);
    for (size_t i = 0; i < d; ++i) {
        if (h.normal[i].sign() > 0)
            a[d + i] = h.normal[i];
        else
            a[i] = h.normal[i];
    }
    return Halfspace(std::move(a), h.offset);
}

LinearSystem LiftedSystem::toSystem() const {
    LinearSystem sys(2 * dim);
    for (const auto& r : rows) sys.addRow(r.constraint.normal, r.constraint.offset);
    return sys;
}

LiftedSystem liftFamily(size_t dim, const std::vector<Polyhedron>& sets, const Rational& thickness) {
    if (dim == 0) throw std::invalid_argument("liftFamily: dimension must be positive");
    if (thickness.sign() < 0) throw std::invalid_argument("liftFamily: negative thickness");
    size_t d = dim;
    LiftedSystem ls{d, {}};
    for (size_t s = 0; s < sets.size(); ++s) {
        if (sets[s].dim != d) throw std::invalid_argument("liftFamily: mixed dimensions");
        for (const auto& h : sets[s].halfspaces)
            ls.rows.push_back({liftHalfspace(h), static_cast<int>(s)});
    }
    for (size_t i = 0; i < d; ++i) {
        std::vector<Rational> ord(2 * d);
        ord[i] = Rational(1);
        ord[d + i] = Rational(-1);
        ls.rows.push_back({Halfspace(ord, Rational(0)), -1});
        if (thickness.sign() > 0) {
            ls.rows.push_back({Halfspace(std::move(ord), -thickness), -1});
        }
    }
    return ls;
}

LinearSystem axisProject(const LiftedSystem& sys, size_t col) { return sys.toSystem().eliminated(col); }

CornerMode CornerMode::allInteger(size_t d) {
    return {std::vector<bool>(d, true), std::vector<bool>(d, true)};
}

CornerMode CornerMode::allReal(size_t d) {
    return {std::vector<bool>(d, false), std::vector<bool>(d, false)};
}

CornerMode CornerMode::upperMixed(size_t d, size_t m) {
    if (m > d) throw std::invalid_argument("CornerMode: m exceeds dimension");
    CornerMode mode = allInteger(d);
    for (size_t i = 0; i < m; ++i) mode.upperInteger[i] = false;
    return mode;
}

CornerMode CornerMode::lowerMixed(size_t d, size_t m) {
    if (m > d) throw std::invalid_argument("CornerMode: m exceeds dimension");
    CornerMode mode = allReal(d);
    for (size_t i = m; i < d; ++i) mode.lowerInteger[i] = true;
    return mode;
}

BoxSearchResult maxLatticeBox(const std::vector<Polyhedron>& sets, const Rational& thickness,
                              const CornerMode& mode) {
    size_t d = sets.empty() ? 0 : sets.front().dim;
    return runSearch(sets, thickness, mode, std::vector<bool>(d, true));
}

BoxSearchResult maxLatticeBoxSupported(const std::vector<Polyhedron>& sets,
                                       const Rational& thickness, const CornerMode& mode,
                                       const std::vector<bool>& support) {
    return runSearch(sets, thickness, mode, support);
}

bool hasBoxCountAtLeast(const std::vector<Polyhedron>& sets, const Rational& thickness,
                        const CornerMode& mode, const BigInt& n) {
    size_t d = sets.empty() ? 0 : sets.front().dim;
    SearchSpace s = prepare(sets, thickness, mode, std::vector<bool>(d, true));

    std::vector<size_t> cols2d = iotaCols(2 * s.d);
    if (!s.corner.feasibleOver(cols2d)) return false;

    if (n <= 0) {
        // any conforming box will do; anchors are irrelevant
        std::vector<size_t> realXY, intXY;
        for (size_t c = 0; c < 2 * s.d; ++c) {
            bool integral = c < s.d ? mode.lowerInteger[c] : mode.upperInteger[c - s.d];
            (integral ? intXY : realXY).push_back(c);
        }
        if (intXY.empty()) return true;
        return mixedPointOver(s.corner, realXY, intXY).has_value();
    }

    auto w0 = mixedPointOver(s.anchor0, s.realCols, s.intCols);
    if (!w0) return false;
    if (n == 1) return true;

    EdgeBounds eb = edgeBounds(s);
    if (eb.unbounded) return true;

    unsigned long long total = 1;
    bool overflow = false;
    for (size_t i = 0; i < s.d; ++i) {
        unsigned long long side = static_cast<unsigned long long>(eb.gmax[i]) + 1;
        if (total > shapeBudget() / side) {
            overflow = true;
            break;
        }
        total *= side;
    }
    if (!overflow && BigInt(total) < n) return false;
    if (overflow) throw ScaleError("box search: shape enumeration over budget (HELLY_SCALE_GUARD raises it)");

    // test only shapes minimal for the threshold, cheapest first
    std::vector<Shape> shapes = enumerateShapes(eb.gmax);
    std::vector<Shape> minimal;
    for (const Shape& sh : shapes) {
        if (BigInt(sh.product) < n) continue;
        bool isMin = true;
        for (size_t i = 0; i < s.d && isMin; ++i) {
            if (sh.g[i] == 0) continue;
            unsigned long long shrunk =
                sh.product / static_cast<unsigned long long>(sh.g[i] + 1) *
                static_cast<unsigned long long>(sh.g[i]);
            if (BigInt(shrunk) >= n) isMin = false;
        }
        if (isMin) minimal.push_back(sh);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Shape& a, const Shape& b) {
        if (a.product != b.product) return a.product < b.product;
        return a.g < b.g;
    });
    for (const Shape& sh : minimal) {
        LinearSystem sys =
            anchoredSystem(s.lifted, s.support, std::vector<long long>(sh.g.begin(), sh.g.begin() + s.d));
        if (mixedPointOver(sys, s.realCols, s.intCols)) return true;
    }
    return false;
}

SubfamilyCheckResult subfamilyCheck(const std::vector<Polyhedron>& sets, size_t h,
                                    const Rational& thickness, const BigInt& minPoints,
                                    const CornerMode& mode, unsigned threads) {
    if (h == 0) throw std::invalid_argument("subfamilyCheck: subfamily size must be positive");
    size_t n = sets.size();
    size_t k = std::min(h, n);
    unsigned long long cap = 1000000ull * scaleGuardFactor();
    unsigned long long total = binomialCapped(n, k, cap);
    if (total > cap)
        throw ScaleError("subfamilyCheck: too many subfamilies (HELLY_SCALE_GUARD raises the cap)");

    std::atomic<unsigned long long> firstFail(total);
    unsigned workers = std::clamp(threads, 1u, 64u);
    workers = static_cast<unsigned>(std::min<unsigned long long>(workers, total));
    std::vector<std::exception_ptr> errors(workers);

    auto runWorker = [&](unsigned w) {
        try {
            for (unsigned long long rank = w; rank < total; rank += workers) {
                if (rank >= firstFail.load()) break;
                std::vector<size_t> combo = comboFromRank(rank, n, k, cap);
                if (!hasBoxCountAtLeast(subsetOf(sets, combo), thickness, mode, minPoints)) {
                    unsigned long long cur = firstFail.load();
                    while (rank < cur && !firstFail.compare_exchange_weak(cur, rank)) {
                    }
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers <= 1) {
        runWorker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(runWorker, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    SubfamilyCheckResult result;
    unsigned long long fail = firstFail.load();
    if (fail == total) return result;
    result.pass = false;
    result.failing = comboFromRank(fail, n, k, cap);
    result.detail = maxLatticeBox(subsetOf(sets, result.failing), thickness, mode);
    return result;
}

VolumeSearchResult maxKVolumeBox(const std::vector<Polyhedron>& sets, size_t k) {
    if (sets.empty()) throw std::invalid_argument("volume search: empty family");
    size_t d = sets.front().dim;
    if (k == 0 || k > d) throw std::invalid_argument("volume search: k out of range");
    if (k > 2) throw std::invalid_argument("volume search: exact optimization supports k <= 2");

    LiftedSystem ls = liftFamily(d, sets, Rational(0));
    LinearSystem base = ls.toSystem();
    std::vector<size_t> cols2d = iotaCols(2 * d);
    VolumeSearchResult result;
    if (!base.feasibleOver(cols2d)) return result;
    result.feasible = true;

    forEachSubset(d, k, [&](const std::vector<size_t>& V) {
        if (result.unbounded) return;
        if (k == 1) {
            LinearSystem sys = edgePlaneSystem(ls, V, true);
            // single edge column at index 2d; its upper bound is the answer
            Bounds b = sys.columnBounds(2 * d, {2 * d});
            if (!b.hi) {
                result.unbounded = true;
                result.support = V;
                return;
            }
            if (result.support.empty() || *b.hi > result.best) {
                result.best = *b.hi;
                result.support = V;
            }
            return;
        }
        LinearSystem sys = edgePlaneSystem(ls, V, true);
        PlaneProductMax pm = maxPlaneProduct(sys, 2 * d, 2 * d + 1);
        if (pm.kind == PlaneProductMax::Kind::Empty)
            throw std::logic_error("volume search: edge polygon empty for a feasible family");
        if (pm.kind == PlaneProductMax::Kind::Unbounded) {
            result.unbounded = true;
            result.support = V;
            return;
        }
        if (result.support.empty() || pm.value > result.best) {
            result.best = pm.value;
            result.support = V;
        }
    });
    return result;
}

VolumeSearchResult maxSkeletonVolumeBox(const std::vector<Polyhedron>& sets, size_t k) {
    if (sets.empty()) throw std::invalid_argument("skeleton search: empty family");
    size_t d = sets.front().dim;
    if (k == 0 || k > d) throw std::invalid_argument("skeleton search: k out of range");
    if (k != 1 && !(k == 2 && d == 2))
        throw std::invalid_argument("skeleton search: exact optimization supports k = 1 or k = d = 2");

    LiftedSystem ls = liftFamily(d, sets, Rational(0));
    LinearSystem base = ls.toSystem();
    std::vector<size_t> cols2d = iotaCols(2 * d);
    VolumeSearchResult result;
    if (!base.feasibleOver(cols2d)) return result;
    result.feasible = true;

    Rational scale = Rational(2).pow(static_cast<unsigned>(d - k));
    if (k == 1) {
        std::vector<Rational> f(2 * d);
        for (size_t i = 0; i < d; ++i) {
            f[i] = Rational(-1);
            f[d + i] = Rational(1);
        }
        Bounds b = base.functionalBounds(f, cols2d);
        if (!b.hi)
            result.unbounded = true;
        else
            result.best = scale * *b.hi;
        return result;
    }
    LinearSystem sys = edgePlaneSystem(ls, {0, 1}, false);
    PlaneProductMax pm = maxPlaneProduct(sys, 2 * d, 2 * d + 1);
    if (pm.kind == PlaneProductMax::Kind::Empty)
        throw std::logic_error("skeleton search: edge polygon empty for a feasible family");
    if (pm.kind == PlaneProductMax::Kind::Unbounded)
        result.unbounded = true;
    else
        result.best = scale * pm.value;
    return result;
}

}  // namespace helly
