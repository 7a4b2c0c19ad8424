#include "helly/harness.hpp"

#include "helly/certificates.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace helly {

namespace {

constexpr size_t kNone = static_cast<size_t>(-1);

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

BigInt binomial(size_t n, size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (size_t i = 0; i < k; ++i) r = r * BigInt(n - i) / BigInt(i + 1);
    return r;
}

// ceil(n / f) for a positive rational f
BigInt ceilOverFactor(const BigInt& n, const Rational& f) {
    return ceilDiv(n * f.den(), f.num());
}

std::vector<Polyhedron> select(const std::vector<Polyhedron>& shapes,
                               const std::vector<size_t>& idxs) {
    std::vector<Polyhedron> out;
    out.reserve(idxs.size());
    for (size_t i : idxs) out.push_back(shapes[i]);
    return out;
}

// All h-subfamilies of [n] in lexicographic order; the whole family stands
// for itself when n <= h. Budgeted like subfamilyCheck.
std::vector<std::vector<size_t>> subfamilies(size_t n, size_t h, const char* who) {
    std::vector<std::vector<size_t>> out;
    if (n <= h) {
        std::vector<size_t> all(n);
        std::iota(all.begin(), all.end(), size_t{0});
        out.push_back(std::move(all));
        return out;
    }
    if (binomial(n, h) > BigInt(1000000) * scaleGuardFactor())
        throw ScaleError(std::string(who) +
                         ": subfamily enumeration exceeds the budget (set HELLY_SCALE_GUARD to raise)");
    std::vector<size_t> idx(h);
    std::iota(idx.begin(), idx.end(), size_t{0});
    while (true) {
        out.push_back(idx);
        size_t i = h;
        while (i > 0 && idx[i - 1] == n - h + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < h; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// Lowest index on which pred fails, or kNone. Workers stride the index space
// and retire once every index they still own exceeds the best hit; a worker
// exception counts as a hit at its index and the earlier of exception or
// failure wins, so the result matches a serial scan exactly.
size_t firstFailing(size_t count, unsigned threads, const std::function<bool(size_t)>& pred) {
    unsigned pool = std::max(1u, std::min(threads, 64u));
    if (pool == 1 || count < 2) {
        for (size_t i = 0; i < count; ++i)
            if (!pred(i)) return i;
        return kNone;
    }
    std::atomic<size_t> stop{kNone}, fail{kNone};
    std::mutex excMu;
    size_t excAt = kNone;
    std::exception_ptr exc;
    auto lower = [](std::atomic<size_t>& a, size_t v) {
        size_t cur = a.load();
        while (v < cur && !a.compare_exchange_weak(cur, v)) {
        }
    };
    std::vector<std::thread> workers;
    workers.reserve(pool);
    for (unsigned w = 0; w < pool; ++w) {
        workers.emplace_back([&, w] {
            for (size_t i = w; i < count; i += pool) {
                if (i >= stop.load()) break;
                bool ok = true;
                try {
                    ok = pred(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(excMu);
                    if (i < excAt) {
                        excAt = i;
                        exc = std::current_exception();
                    }
                    lower(stop, i);
                    break;
                }
                if (!ok) {
                    lower(fail, i);
                    lower(stop, i);
                    break;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (excAt < fail.load()) std::rethrow_exception(exc);
    return fail.load();
}

std::string describeBoxResult(const BoxSearchResult& r) {
    switch (r.status) {
        case BoxSearchStatus::NoBox:
            return "no conforming box";
        case BoxSearchStatus::Unbounded:
            return "boxes with arbitrarily many lattice points";
        case BoxSearchStatus::Found:
            break;
    }
    return "best box holds " + BigInt(r.count).str() + " lattice point(s)";
}

void fillPremiseUnmet(VerificationReport& rep, std::vector<size_t> failing,
                      const std::string& detail) {
    rep.outcome = Outcome::PremiseUnmet;
    rep.failingSubfamily = std::move(failing);
    rep.note = "premise fails on the listed subfamily: " + detail;
}

void attachBoxWitness(VerificationReport& rep, const BoxSearchResult& r) {
    if (!r.box) return;
    rep.witness = r.box;
    rep.witnessCount = latticeCountBox(*r.box);
}

void fillBoxConclusion(VerificationReport& rep, const BoxSearchResult& r, const BigInt& threshold) {
    attachBoxWitness(rep, r);
    if (r.status == BoxSearchStatus::Unbounded) {
        rep.outcome = Outcome::Confirmed;
        rep.note = "conclusion threshold " + threshold.str() + " met: " + describeBoxResult(r);
    } else if (r.status == BoxSearchStatus::Found && r.count >= threshold) {
        rep.outcome = Outcome::Confirmed;
        rep.note = "conclusion threshold " + threshold.str() + " met with " +
                   BigInt(r.count).str() + " lattice point(s)";
    } else {
        rep.outcome = Outcome::Counterexample;
        rep.note = "conclusion threshold " + threshold.str() + " missed: " + describeBoxResult(r);
    }
}

std::string describeVolumeResult(const VolumeSearchResult& r) {
    if (!r.feasible) return "no conforming box";
    if (r.unbounded) return "unbounded volume";
    return "best volume " + r.best.str();
}

void fillVolumeConclusion(VerificationReport& rep, const VolumeSearchResult& r,
                          const Rational& bound) {
    if (r.feasible && !r.unbounded) rep.witnessVolume = r.best;
    if (r.feasible && (r.unbounded || r.best >= bound)) {
        rep.outcome = Outcome::Confirmed;
        rep.note = "conclusion bound " + bound.str() + " met: " + describeVolumeResult(r);
    } else {
        rep.outcome = Outcome::Counterexample;
        rep.note = "conclusion bound " + bound.str() + " missed: " + describeVolumeResult(r);
    }
}

void checkDims(const FamilyInstance& F, const char* who) {
    if (F.dim < 1 || F.dim > 3)
        throw std::invalid_argument(std::string(who) + ": dimension must be between 1 and 3");
    for (const auto& s : F.sets)
        if (s.shape.dim != F.dim)
            throw std::invalid_argument(std::string(who) + ": set " + s.name +
                                        " does not match the family dimension");
}

}  // namespace

std::string outcomeName(Outcome o) {
    switch (o) {
        case Outcome::Confirmed: return "CONFIRMED";
        case Outcome::PremiseUnmet: return "PREMISE_UNMET";
        case Outcome::Counterexample: break;
    }
    return "COUNTEREXAMPLE";
}

VerificationReport verifyTheoremInstance(const FamilyInstance& F, const std::string& theoremId,
                                         const TheoremParams& params, unsigned threads) {
    checkDims(F, "verifyTheoremInstance");
    const std::string who = "verifyTheoremInstance: " + theoremId;
    const size_t d = F.dim;
    const auto shapes = F.shapes();

    VerificationReport rep;
    rep.theoremId = theoremId;
    rep.dim = d;
    rep.familySize = F.sets.size();

    auto needN = [&]() -> BigInt {
        if (!params.n || *params.n < 1) throw std::invalid_argument(who + " needs n >= 1");
        return *params.n;
    };
    auto needK = [&]() -> size_t {
        if (!params.k || *params.k < 1 || *params.k > d)
            throw std::invalid_argument(who + " needs k between 1 and d");
        return *params.k;
    };
    auto needM = [&]() -> size_t {
        if (!params.m || *params.m < 1 || *params.m > d)
            throw std::invalid_argument(who + " needs m between 1 and d");
        return *params.m;
    };
    auto needW = [&]() -> Rational {
        if (!params.w || *params.w < 0) throw std::invalid_argument(who + " needs w >= 0");
        return *params.w;
    };
    auto noN = [&] {
        if (params.n) throw std::invalid_argument(who + " does not take n");
    };
    auto noT = [&] {
        if (params.t != 0) throw std::invalid_argument(who + " does not take a thickness");
    };
    auto noM = [&] {
        if (params.m) throw std::invalid_argument(who + " does not take m");
    };
    auto noK = [&] {
        if (params.k) throw std::invalid_argument(who + " does not take k");
    };
    auto noW = [&] {
        if (params.w) throw std::invalid_argument(who + " does not take w");
    };

    if (theoremId == "boxIntegerLattice") {
        BigInt n = needN();
        noT(), noM(), noK(), noW();
        size_t h = size_t{1} << (2 * d - 1);
        rep.helly = h;
        rep.params.n = n;
        auto mode = CornerMode::allInteger(d);
        auto pre = subfamilyCheck(shapes, h, Rational(0), n, mode, threads);
        if (!pre.pass) {
            fillPremiseUnmet(rep, pre.failing, describeBoxResult(pre.detail));
            return rep;
        }
        fillBoxConclusion(rep, maxLatticeBox(shapes, Rational(0), mode), n);
        return rep;
    }

    if (theoremId == "unitThickFraction") {
        BigInt n = needN();
        noM(), noK(), noW();
        if (params.t != 0 && params.t != 1)
            throw std::invalid_argument(who + " uses thickness 1");
        size_t h = 2 * d;
        rep.helly = h;
        rep.params.n = n;
        rep.params.t = Rational(1);
        auto pre = subfamilyCheck(shapes, h, Rational(1), n, CornerMode::allReal(d), threads);
        if (!pre.pass) {
            fillPremiseUnmet(rep, pre.failing, describeBoxResult(pre.detail));
            return rep;
        }
        BigInt primary = ceilDiv(n, boost::multiprecision::pow(BigInt(3), unsigned(d - 1)));
        BigInt fallback = ceilDiv(n, boost::multiprecision::pow(BigInt(3), unsigned(d)));
        auto r = maxLatticeBox(shapes, Rational(0), CornerMode::allInteger(d));
        attachBoxWitness(rep, r);
        std::string both = " (primary threshold " + primary.str() + ", fallback " +
                           fallback.str() + ")";
        if (r.status == BoxSearchStatus::Unbounded) {
            rep.outcome = Outcome::Confirmed;
            rep.note = "boxes with arbitrarily many lattice points" + both;
        } else if (r.status == BoxSearchStatus::Found && r.count >= primary) {
            rep.outcome = Outcome::Confirmed;
            rep.note = "meets the primary threshold with " + BigInt(r.count).str() +
                       " lattice point(s)" + both;
        } else if (r.status == BoxSearchStatus::Found && r.count >= fallback) {
            rep.outcome = Outcome::Confirmed;
            rep.note = "misses the primary threshold but meets the fallback with " +
                       BigInt(r.count).str() + " lattice point(s)" + both;
        } else {
            rep.outcome = Outcome::Counterexample;
            rep.note = "misses even the fallback threshold: " + describeBoxResult(r) + both;
        }
        return rep;
    }

    if (theoremId == "kBoxLattice") {
        BigInt n = needN();
        size_t k = needK();
        noT(), noM(), noW();
        size_t h = size_t{1} << (2 * d - 1);
        rep.helly = h;
        rep.params.n = n;
        rep.params.k = k;
        auto mode = CornerMode::allInteger(d);
        // supports of size k; a box of dimension <= k fits under one of them
        std::vector<std::vector<bool>> masks;
        for (const auto& pick : subfamilies(d, k, "verifyTheoremInstance")) {
            std::vector<bool> mask(d, false);
            for (size_t i : pick) mask[i] = true;
            masks.push_back(std::move(mask));
        }
        auto bestSupported = [&](const std::vector<Polyhedron>& sel) {
            BoxSearchResult best;
            for (const auto& mask : masks) {
                auto r = maxLatticeBoxSupported(sel, Rational(0), mode, mask);
                if (r.status == BoxSearchStatus::Unbounded) return r;
                if (r.status == BoxSearchStatus::Found &&
                    (best.status != BoxSearchStatus::Found || r.count > best.count))
                    best = r;
            }
            return best;
        };
        auto combos = subfamilies(shapes.size(), h, "verifyTheoremInstance");
        size_t bad = firstFailing(combos.size(), threads, [&](size_t i) {
            auto r = bestSupported(select(shapes, combos[i]));
            return r.status == BoxSearchStatus::Unbounded ||
                   (r.status == BoxSearchStatus::Found && r.count >= n);
        });
        if (bad != kNone) {
            fillPremiseUnmet(rep, combos[bad],
                             describeBoxResult(bestSupported(select(shapes, combos[bad]))));
            return rep;
        }
        fillBoxConclusion(rep, bestSupported(shapes), ceilDiv(n, binomial(d, k)));
        return rep;
    }

    if (theoremId == "kVolume" || theoremId == "skeletonVolume") {
        Rational w = needW();
        size_t k = needK();
        noN(), noT(), noM();
        bool skeleton = theoremId == "skeletonVolume";
        if (!skeleton && k > 2)
            throw std::invalid_argument(who + ": the exact k-volume search supports k <= 2");
        if (skeleton && !(k == 1 || (k == 2 && d == 2)))
            throw std::invalid_argument(who +
                                        ": the exact skeleton search supports k = 1, or k = 2 in the plane");
        size_t h = 2 * d;
        rep.helly = h;
        rep.params.w = w;
        rep.params.k = k;
        auto search = [&](const std::vector<Polyhedron>& sel) {
            return skeleton ? maxSkeletonVolumeBox(sel, k) : maxKVolumeBox(sel, k);
        };
        auto combos = subfamilies(shapes.size(), h, "verifyTheoremInstance");
        size_t bad = firstFailing(combos.size(), threads, [&](size_t i) {
            auto r = search(select(shapes, combos[i]));
            return r.feasible && (r.unbounded || r.best >= w);
        });
        if (bad != kNone) {
            fillPremiseUnmet(rep, combos[bad],
                             describeVolumeResult(search(select(shapes, combos[bad]))));
            return rep;
        }
        Rational bound = skeleton ? w : w / Rational(binomial(d, k));
        fillVolumeConclusion(rep, search(shapes), bound);
        return rep;
    }

    if (theoremId == "P218" || theoremId == "P219") {
        BigInt n = needN();
        size_t m = needM();
        noK(), noW();
        auto variant = theoremId == "P218" ? FractionVariant::P218 : FractionVariant::P219;
        auto gf = guaranteedFraction(d, m, params.t, variant);
        rep.helly = gf.hellyNumber;
        rep.params.n = n;
        rep.params.t = params.t;
        rep.params.m = m;
        size_t h = gf.hellyNumber.convert_to<size_t>();
        auto mode = CornerMode::allReal(d);
        auto pre = subfamilyCheck(shapes, h, params.t, n, mode, threads);
        if (!pre.pass) {
            fillPremiseUnmet(rep, pre.failing, describeBoxResult(pre.detail));
            return rep;
        }
        fillBoxConclusion(rep, maxLatticeBox(shapes, params.t, mode),
                          ceilOverFactor(n, gf.factor));
        return rep;
    }

    throw std::invalid_argument("verifyTheoremInstance: unknown theorem id " + theoremId);
}

std::string colorfulModeName(ColorfulMode mode) {
    switch (mode) {
        case ColorfulMode::Doignon: return "doignon";
        case ColorfulMode::MixedInteger: return "mixedInteger";
        case ColorfulMode::BoxInteger: break;
    }
    return "boxInteger";
}

ColorfulMode parseColorfulMode(const std::string& name) {
    if (name == "doignon") return ColorfulMode::Doignon;
    if (name == "mixedInteger") return ColorfulMode::MixedInteger;
    if (name == "boxInteger") return ColorfulMode::BoxInteger;
    throw std::invalid_argument("parseColorfulMode: unknown mode " + name);
}

VerificationReport verifyColorfulInstance(const FamilyInstance& F, ColorfulMode mode,
                                          const TheoremParams& params, unsigned threads) {
    checkDims(F, "verifyColorfulInstance");
    const std::string who = "verifyColorfulInstance: " + colorfulModeName(mode);
    const size_t d = F.dim;
    const auto shapes = F.shapes();

    if (F.colors.size() != F.sets.size())
        throw std::domain_error(who + ": every set needs a color");
    size_t classCount = 0;
    for (size_t c : F.colors) classCount = std::max(classCount, c + 1);
    std::vector<std::vector<size_t>> byClass(classCount);
    for (size_t i = 0; i < F.colors.size(); ++i) byClass[F.colors[i]].push_back(i);
    for (size_t c = 0; c < classCount; ++c)
        if (byClass[c].empty())
            throw std::domain_error(who + ": color class " + std::to_string(c) + " is empty");

    VerificationReport rep;
    rep.theoremId = colorfulModeName(mode);
    rep.dim = d;
    rep.familySize = F.sets.size();

    BigInt n{0};
    size_t a = 0;  // real coordinates in mixed mode
    BigInt h;
    switch (mode) {
        case ColorfulMode::Doignon:
            h = BigInt(1) << d;
            break;
        case ColorfulMode::MixedInteger:
            if (!params.m || *params.m > d)
                throw std::invalid_argument(who + " needs m between 0 and d");
            a = *params.m;
            h = BigInt(a + 1) << (d - a);
            rep.params.m = a;
            break;
        case ColorfulMode::BoxInteger:
            if (!params.n || *params.n < 1)
                throw std::invalid_argument(who + " needs n >= 1");
            n = *params.n;
            h = BigInt(1) << (2 * d - 1);
            rep.params.n = n;
            break;
    }
    rep.helly = h;
    if (BigInt(classCount) != h)
        throw std::domain_error(who + ": expected " + h.str() + " color classes, found " +
                                std::to_string(classCount));

    BigInt product = 1;
    for (const auto& cls : byClass) product *= BigInt(cls.size());
    if (product > BigInt(1000000) * scaleGuardFactor())
        throw ScaleError(who +
                         ": rainbow enumeration exceeds the budget (set HELLY_SCALE_GUARD to raise)");
    size_t total = product.convert_to<size_t>();

    // rainbow r: one set per class, class 0 varying fastest
    auto rainbowAt = [&](size_t r) {
        std::vector<size_t> sel(classCount);
        for (size_t c = 0; c < classCount; ++c) {
            sel[c] = byClass[c][r % byClass[c].size()];
            r /= byClass[c].size();
        }
        return sel;
    };
    auto stack = [&](const std::vector<size_t>& idxs) {
        LinearSystem sys(d);
        for (size_t i : idxs)
            for (const auto& hs : shapes[i].halfspaces) sys.addRow(hs.normal, hs.offset);
        return sys;
    };
    std::vector<size_t> cols(d), realCols(a), intCols(d - a);
    std::iota(cols.begin(), cols.end(), size_t{0});
    std::iota(realCols.begin(), realCols.end(), size_t{0});
    std::iota(intCols.begin(), intCols.end(), a);
    auto findPoint = [&](const std::vector<size_t>& idxs) {
        return mode == ColorfulMode::Doignon ? integerPointOver(stack(idxs), cols)
                                             : mixedPointOver(stack(idxs), realCols, intCols);
    };
    auto holds = [&](const std::vector<size_t>& idxs) {
        if (mode == ColorfulMode::BoxInteger)
            return hasBoxCountAtLeast(select(shapes, idxs), Rational(0),
                                      CornerMode::allInteger(d), n);
        return findPoint(idxs).has_value();
    };

    size_t bad = firstFailing(total, threads, [&](size_t r) { return holds(rainbowAt(r)); });
    if (bad != kNone) {
        rep.outcome = Outcome::PremiseUnmet;
        rep.failingSubfamily = rainbowAt(bad);
        rep.note = mode == ColorfulMode::BoxInteger
                       ? "rainbow selection lacks a box with " + n.str() + " lattice point(s)"
                       : "rainbow selection lacks a common point of the required kind";
        return rep;
    }

    for (size_t c = 0; c < classCount; ++c) {
        if (mode == ColorfulMode::BoxInteger) {
            auto r = maxLatticeBox(select(shapes, byClass[c]), Rational(0),
                                   CornerMode::allInteger(d));
            if (r.status == BoxSearchStatus::Unbounded ||
                (r.status == BoxSearchStatus::Found && r.count >= n)) {
                rep.outcome = Outcome::Confirmed;
                attachBoxWitness(rep, r);
                rep.note = "class " + std::to_string(c) + " meets the conclusion: " +
                           describeBoxResult(r);
                return rep;
            }
        } else {
            auto p = findPoint(byClass[c]);
            if (p) {
                rep.outcome = Outcome::Confirmed;
                rep.witnessPoint = *p;
                rep.note = "class " + std::to_string(c) + " holds the witness point";
                return rep;
            }
        }
    }
    rep.outcome = Outcome::Counterexample;
    rep.note = "every rainbow selection meets the premise but no class meets the conclusion";
    return rep;
}

CensusResult fractionalCensus(const FamilyInstance& F, const BigInt& n, const Rational& t) {
    checkDims(F, "fractionalCensus");
    if (n < 1) throw std::invalid_argument("fractionalCensus: n must be at least 1");
    if (t < 0) throw std::invalid_argument("fractionalCensus: thickness must be nonnegative");
    if (F.sets.size() > 16) throw ScaleError("fractionalCensus: more than 16 sets");
    const size_t h = 2 * F.dim;
    if (F.sets.size() < h)
        throw std::invalid_argument("fractionalCensus: the family needs at least 2d sets");
    const auto shapes = F.shapes();
    const auto mode = CornerMode::allReal(F.dim);
    auto good = [&](const std::vector<size_t>& idxs) {
        return hasBoxCountAtLeast(select(shapes, idxs), t, mode, n);
    };

    CensusResult out;
    std::vector<size_t> firstGood;
    for (const auto& combo : subfamilies(F.sets.size(), h, "fractionalCensus")) {
        ++out.subfamilyCount;
        if (good(combo)) {
            if (firstGood.empty()) firstGood = combo;
            ++out.goodCount;
        }
    }
    out.alpha = Rational(out.goodCount, out.subfamilyCount);

    const BigInt total(F.sets.size());
    for (size_t s = F.sets.size(); s >= 1; --s) {
        if (s == h && out.goodCount > 0) {
            out.bestSize = s;
            out.bestSubfamily = firstGood;
            break;
        }
        if (s == h && out.goodCount == 0) continue;
        bool hit = false;
        for (const auto& combo : subfamilies(F.sets.size(), s, "fractionalCensus")) {
            if (good(combo)) {
                out.bestSize = s;
                out.bestSubfamily = combo;
                hit = true;
                break;
            }
        }
        if (hit) break;
    }
    out.beta = out.bestSize == 0 ? Rational(0) : Rational(BigInt(out.bestSize), total);
    return out;
}

FamilyInstance randomFamily(uint64_t seed, size_t d, size_t count, long long coefficientBound) {
    if (d < 1 || d > 3) throw std::invalid_argument("randomFamily: d must be between 1 and 3");
    if (count < 1) throw std::invalid_argument("randomFamily: count must be at least 1");
    if (coefficientBound < 1)
        throw std::invalid_argument(
            "randomFamily: coefficientBound must be at least 1 (normals cannot vanish)");

    uint64_t state = seed;
    const long long B = coefficientBound;
    auto intIn = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(splitmix64(state) %
                                           static_cast<uint64_t>(hi - lo + 1));
    };
    auto half = [&] { return Rational(BigInt(intIn(-2 * B, 2 * B)), BigInt(2)); };

    FamilyInstance F;
    F.dim = d;
    for (size_t i = 0; i < count; ++i) {
        size_t rows = 1 + static_cast<size_t>(splitmix64(state) % (d + 1));
        std::vector<Halfspace> hs;
        for (size_t r = 0; r < rows; ++r) {
            std::vector<Rational> normal(d);
            do {
                for (size_t j = 0; j < d; ++j) normal[j] = half();
            } while (std::all_of(normal.begin(), normal.end(),
                                 [](const Rational& x) { return x == 0; }));
            Rational offset = half();
            hs.emplace_back(std::move(normal), offset);
        }
        F.sets.push_back({"set-" + std::to_string(i + 1), Polyhedron(d, std::move(hs))});
    }
    if (splitmix64(state) % 2 == 0) {
        Rational reach(4 * B);
        std::vector<Halfspace> walls;
        for (size_t j = 0; j < d; ++j) {
            std::vector<Rational> up(d, Rational(0)), down(d, Rational(0));
            up[j] = Rational(1);
            down[j] = Rational(-1);
            walls.emplace_back(up, reach);
            walls.emplace_back(down, reach);
        }
        F.sets.back() = {"window", Polyhedron(d, std::move(walls))};
    }
    return F;
}

}  // namespace helly
