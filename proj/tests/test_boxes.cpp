#include "helly/boxes.hpp"

#include "doctest.h"
#include "support.hpp"

using helly::BigInt;
using helly::Box;
using helly::PeriodicProductSet;
using helly::PeriodicSet1D;
using helly::Rational;

namespace {

Box boxOf(std::vector<long long> lo, std::vector<long long> hi) {
    std::vector<Rational> l, u;
    for (auto v : lo) l.push_back(Rational(v));
    for (auto v : hi) u.push_back(Rational(v));
    return Box(std::move(l), std::move(u));
}

// comparison-only count of integers in [lo, hi], scanning a generous window
BigInt scanAxisCount(const Rational& lo, const Rational& hi) {
    BigInt n = 0;
    for (long long k = -40; k <= 40; ++k)
        if (Rational(k) >= lo && Rational(k) <= hi) ++n;
    return n;
}

}  // namespace

TEST_CASE("box constructor guards") {
    CHECK_THROWS_AS(Box({Rational(0)}, {Rational(0), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(Box({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Box({Rational(1)}, {Rational(0)}), std::invalid_argument);
    Box b = boxOf({0, 0}, {0, 2});
    CHECK(b.dim() == 2);
    CHECK(b.edge(0) == Rational(0));
    CHECK(b.minEdge() == Rational(0));
}

TEST_CASE("lattice point count, frozen cases") {
    CHECK(helly::latticeCountBox(boxOf({0, 0}, {3, 3})) == 16);
    CHECK(helly::latticeCountBox(Box({Rational(1, 2)}, {Rational(5, 2)})) == 2);
    CHECK(helly::latticeCountBox(Box({Rational(1, 3)}, {Rational(2, 3)})) == 0);
    CHECK(helly::latticeCountBox(boxOf({1, 1}, {1, 1})) == 1);
    CHECK(helly::latticeCountBox(boxOf({-3, -1}, {-1, 4})) == 18);
}

TEST_CASE("lattice point count matches an axis scan") {
    testsupport::Rng rng(41);
    for (int iter = 0; iter < 10000; ++iter) {
        size_t d = 1 + rng.below(4);
        std::vector<Rational> lo, hi;
        for (size_t i = 0; i < d; ++i) {
            Rational a = rng.rationalIn(-12, 12, 5);
            Rational b = rng.rationalIn(-12, 12, 5);
            if (b < a) std::swap(a, b);
            lo.push_back(a);
            hi.push_back(b);
        }
        Box b(lo, hi);
        BigInt want = 1;
        for (size_t i = 0; i < d; ++i) want *= scanAxisCount(lo[i], hi[i]);
        CHECK(helly::latticeCountBox(b) == want);
    }
}

TEST_CASE("product weight and thickness gate") {
    Box b = boxOf({0, 0}, {2, 3});
    CHECK(helly::boxProductWeight(b) == Rational(12));
    CHECK(helly::thickGateWeight(b, Rational(2)) == Rational(12));
    CHECK(helly::thickGateWeight(b, Rational(5, 2)) == Rational(0));  // one edge too short
    CHECK(helly::thickGateWeight(b, Rational(0)) == Rational(12));
    CHECK_THROWS_AS(helly::thickGateWeight(b, Rational(-1)), std::invalid_argument);
}

TEST_CASE("skeleton volume, frozen d = 3 case") {
    Box b = boxOf({0, 0, 0}, {1, 2, 3});
    CHECK(helly::skeletonVolume(b, 0) == Rational(8));
    CHECK(helly::skeletonVolume(b, 1) == Rational(24));  // 4 * (1+2+3)
    CHECK(helly::skeletonVolume(b, 2) == Rational(22));  // 2 * (2+3+6)
    CHECK(helly::skeletonVolume(b, 3) == Rational(6));
    CHECK_THROWS_AS(helly::skeletonVolume(b, 4), std::invalid_argument);
}

TEST_CASE("skeleton volume matches subset enumeration") {
    testsupport::Rng rng(42);
    for (int iter = 0; iter < 80; ++iter) {
        size_t d = 1 + rng.below(4);
        std::vector<Rational> lo(d), hi(d);
        for (size_t i = 0; i < d; ++i) {
            lo[i] = rng.rationalIn(-5, 5, 3);
            hi[i] = lo[i] + rng.rationalIn(0, 6, 3);
        }
        Box b(lo, hi);
        for (size_t k = 0; k <= d; ++k) {
            Rational sum(0);
            for (unsigned mask = 0; mask < (1u << d); ++mask) {
                if (static_cast<size_t>(__builtin_popcount(mask)) != k) continue;
                Rational prod(1);
                for (size_t i = 0; i < d; ++i)
                    if (mask & (1u << i)) prod *= b.edge(i);
                sum += prod;
            }
            Rational scale = Rational(2).pow(static_cast<unsigned>(d - k));
            CHECK(helly::skeletonVolume(b, k) == scale * sum);
        }
    }
}

TEST_CASE("symmetric lattice weight matches subset enumeration") {
    testsupport::Rng rng(43);
    for (int iter = 0; iter < 80; ++iter) {
        size_t d = 1 + rng.below(5);
        size_t k = 1 + rng.below(d);
        std::vector<Rational> lo(d), hi(d);
        for (size_t i = 0; i < d; ++i) {
            lo[i] = rng.rationalIn(-4, 4, 3);
            hi[i] = lo[i] + rng.rationalIn(0, 7, 3);
        }
        Box b(lo, hi);
        auto got = helly::symmetricLatticeWeight(b, k);

        Rational total(0), best(-1);
        long long subsets = 0;
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            if (static_cast<size_t>(__builtin_popcount(mask)) != k) continue;
            ++subsets;
            Rational prod(1);
            for (size_t i = 0; i < d; ++i)
                if (mask & (1u << i)) prod *= b.edge(i) + Rational(1);
            total += prod;
            if (prod > best) best = prod;
        }
        CHECK(got.total == total);
        CHECK(got.bestProduct == best);
        CHECK(got.bestProduct * Rational(subsets) >= got.total);

        REQUIRE(got.bestSubset.size() == k);
        Rational check(1);
        for (size_t i : got.bestSubset) check *= b.edge(i) + Rational(1);
        CHECK(check == got.bestProduct);
    }
}

TEST_CASE("periodic set normalization") {
    PeriodicSet1D a(Rational(3), {Rational(5), Rational(-1), Rational(2), Rational(8)});
    CHECK(a.residues() == std::vector<Rational>{Rational(2)});
    CHECK(a.countPerPeriod() == 1);
    CHECK(a.contains(Rational(5)));
    CHECK(a.contains(Rational(-4)));
    CHECK(!a.contains(Rational(1)));

    PeriodicSet1D b(Rational(3, 2), {Rational(1, 3), Rational(11, 6)});
    CHECK(b.residues() == std::vector<Rational>{Rational(1, 3)});
    CHECK(b.contains(Rational(1, 3) + Rational(3)));

    CHECK_THROWS_AS(PeriodicSet1D(Rational(0), {Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(PeriodicSet1D(Rational(2), {}), std::invalid_argument);
}

TEST_CASE("periodic interval count matches a scan") {
    testsupport::Rng rng(44);
    const Rational periods[] = {Rational(1), Rational(1, 2), Rational(3, 2), Rational(7, 3),
                                Rational(2)};
    for (int iter = 0; iter < 200; ++iter) {
        Rational p = periods[rng.below(5)];
        std::vector<Rational> res;
        size_t nr = 1 + rng.below(3);
        for (size_t i = 0; i < nr; ++i) res.push_back(rng.rationalIn(-6, 6, 4));
        PeriodicSet1D A(p, res);
        Rational a = rng.rationalIn(-10, 10, 4);
        Rational b = rng.rationalIn(-10, 10, 4);
        if (b < a) std::swap(a, b);

        BigInt want = 0;
        for (const Rational& r : A.residues())
            for (long long k = -90; k <= 90; ++k) {
                Rational t = r + Rational(k) * p;
                if (t >= a && t <= b) ++want;
            }
        CHECK(helly::periodicCountInterval(A, a, b) == want);
        CHECK(helly::periodicCountInterval(A, b, a - Rational(1)) == 0);
    }
}

TEST_CASE("integer lattice as the trivial periodic set") {
    PeriodicSet1D z(Rational(1), {Rational(0)});
    CHECK(helly::periodicCountInterval(z, Rational(-3, 2), Rational(7, 2)) == 5);
    Box b(std::vector<Rational>{Rational(-3, 2)}, std::vector<Rational>{Rational(7, 2)});
    CHECK(helly::latticeCountBox(b) == 5);
}

TEST_CASE("product set rho and box count") {
    PeriodicSet1D f0(Rational(2), {Rational(0)});
    PeriodicSet1D f1(Rational(3, 2), {Rational(0), Rational(1, 2)});
    PeriodicProductSet Q({f0, f1});
    CHECK(Q.rho() == 2);  // 1 residue * 2 residues

    // frozen: x in {0, 2, 4, ...} ∩ [0, 4] has 3 values, y in [0, 3] has
    // {0, 1/2, 3/2, 2, 3} -> 5 values
    Box b = boxOf({0, 0}, {4, 3});
    CHECK(helly::periodicCountBox(Q, b) == 15);

    testsupport::Rng rng(45);
    for (int iter = 0; iter < 60; ++iter) {
        size_t d = 1 + rng.below(3);
        std::vector<PeriodicSet1D> fs;
        std::vector<Rational> lo, hi;
        BigInt want = 1;
        for (size_t i = 0; i < d; ++i) {
            Rational p = Rational(1 + (long long)rng.below(3), 1 + (long long)rng.below(2));
            std::vector<Rational> res;
            size_t nr = 1 + rng.below(2);
            for (size_t j = 0; j < nr; ++j) res.push_back(rng.rationalIn(-3, 3, 3));
            fs.emplace_back(p, res);
            Rational a = rng.rationalIn(-8, 8, 3);
            Rational b2 = rng.rationalIn(-8, 8, 3);
            if (b2 < a) std::swap(a, b2);
            lo.push_back(a);
            hi.push_back(b2);

            BigInt axis = 0;
            for (const Rational& r : fs.back().residues())
                for (long long k = -80; k <= 80; ++k) {
                    Rational t = r + Rational(k) * fs.back().period();
                    if (t >= a && t <= b2) ++axis;
                }
            want *= axis;
        }
        PeriodicProductSet Q2(fs);
        CHECK(helly::periodicCountBox(Q2, Box(lo, hi)) == want);
    }
}

TEST_CASE("rho counts the points in one fundamental box") {
    testsupport::Rng rng(46);
    for (int iter = 0; iter < 120; ++iter) {
        size_t d = 1 + rng.below(3);
        std::vector<PeriodicSet1D> fs;
        BigInt viaCounts = 1;
        for (size_t i = 0; i < d; ++i) {
            Rational p = Rational(1 + (long long)rng.below(4), 1 + (long long)rng.below(3));
            std::vector<Rational> res;
            size_t nr = 1 + rng.below(4);
            for (size_t j = 0; j < nr; ++j) res.push_back(rng.rationalIn(-5, 5, 4));
            fs.emplace_back(p, res);

            // [0, p] closed double-counts the residue at 0 (p is congruent to 0)
            BigInt closed = helly::periodicCountInterval(fs.back(), Rational(0), p);
            viaCounts *= closed - (fs.back().contains(Rational(0)) ? 1 : 0);
        }
        PeriodicProductSet Q(fs);
        CHECK(Q.rho() == viaCounts);
    }
}

TEST_CASE("periodic box count is invariant under period translation") {
    testsupport::Rng rng(47);
    for (int iter = 0; iter < 150; ++iter) {
        size_t d = 1 + rng.below(3);
        std::vector<PeriodicSet1D> fs;
        std::vector<Rational> lo, hi, lo2, hi2;
        for (size_t i = 0; i < d; ++i) {
            Rational p = Rational(1 + (long long)rng.below(3), 1 + (long long)rng.below(2));
            std::vector<Rational> res;
            size_t nr = 1 + rng.below(3);
            for (size_t j = 0; j < nr; ++j) res.push_back(rng.rationalIn(-4, 4, 3));
            fs.emplace_back(p, res);
            Rational a = rng.rationalIn(-6, 6, 3);
            Rational b = a + rng.rationalIn(0, 8, 3);
            lo.push_back(a);
            hi.push_back(b);
            Rational shift = Rational(rng.intIn(-3, 3)) * p;
            lo2.push_back(a + shift);
            hi2.push_back(b + shift);
        }
        PeriodicProductSet Q(fs);
        CHECK(helly::periodicCountBox(Q, Box(lo, hi)) == helly::periodicCountBox(Q, Box(lo2, hi2)));
    }
}

TEST_CASE("interval product weight is log-concave and shift-invariant") {
    testsupport::Rng rng(48);
    for (int iter = 0; iter < 250; ++iter) {
        size_t d = 1 + rng.below(4);
        std::vector<Rational> lo1(d), hi1(d), lo2(d), hi2(d), mlo(d), mhi(d), slo(d), shi(d);
        for (size_t i = 0; i < d; ++i) {
            lo1[i] = rng.rationalIn(-6, 6, 4);
            hi1[i] = lo1[i] + rng.rationalIn(0, 9, 4);
            lo2[i] = rng.rationalIn(-6, 6, 4);
            hi2[i] = lo2[i] + rng.rationalIn(0, 9, 4);
            mlo[i] = (lo1[i] + lo2[i]) / Rational(2);
            mhi[i] = (hi1[i] + hi2[i]) / Rational(2);
            Rational k = Rational(rng.intIn(-5, 5));
            slo[i] = lo1[i] + k;
            shi[i] = hi1[i] + k;
        }
        Rational f1 = helly::boxProductWeight(Box(lo1, hi1));
        Rational f2 = helly::boxProductWeight(Box(lo2, hi2));
        Rational fm = helly::boxProductWeight(Box(mlo, mhi));
        CHECK(fm * fm >= f1 * f2);
        CHECK(helly::boxProductWeight(Box(slo, shi)) == f1);
    }
}

TEST_CASE("thickness-gated weight is min-concave along segments") {
    testsupport::Rng rng(49);
    for (int iter = 0; iter < 250; ++iter) {
        size_t d = 1 + rng.below(3);
        Rational t = Rational((long long)rng.below(3), 1 + (long long)rng.below(2));
        std::vector<Rational> lo1(d), hi1(d), lo2(d), hi2(d), clo(d), chi(d);
        // mostly t-thick endpoints, occasionally thin ones to hit the zero branch
        for (size_t i = 0; i < d; ++i) {
            lo1[i] = rng.rationalIn(-6, 6, 4);
            hi1[i] = lo1[i] + (rng.below(5) ? t : Rational(0)) + rng.rationalIn(0, 6, 4);
            lo2[i] = rng.rationalIn(-6, 6, 4);
            hi2[i] = lo2[i] + (rng.below(5) ? t : Rational(0)) + rng.rationalIn(0, 6, 4);
        }
        Rational lam(1 + (long long)rng.below(4), 5);  // in (0, 1)
        for (size_t i = 0; i < d; ++i) {
            clo[i] = lam * lo1[i] + (Rational(1) - lam) * lo2[i];
            chi[i] = lam * hi1[i] + (Rational(1) - lam) * hi2[i];
        }
        Rational w1 = helly::thickGateWeight(Box(lo1, hi1), t);
        Rational w2 = helly::thickGateWeight(Box(lo2, hi2), t);
        Rational wc = helly::thickGateWeight(Box(clo, chi), t);
        CHECK(wc >= std::min(w1, w2));
    }
}

TEST_CASE("skeleton volume k-th root is superadditive in the edges") {
    // Homogeneity turns midpoint concavity of skeletonVolume^{1/k} into
    // superadditivity over edge vectors; checked exactly on integer edges via
    // the proportional-case identity or escalating integer-root intervals.
    testsupport::Rng rng(50);
    auto ekOf = [](const std::vector<long long>& e, size_t k) {
        std::vector<Rational> lo(e.size(), Rational(0)), hi(e.size());
        for (size_t i = 0; i < e.size(); ++i) hi[i] = Rational(e[i]);
        Rational sv = helly::skeletonVolume(Box(lo, hi), k);
        Rational ek = sv / Rational(2).pow(static_cast<unsigned>(e.size() - k));
        REQUIRE(ek.isInteger());
        return ek.floor();
    };
    for (int iter = 0; iter < 200; ++iter) {
        size_t d = 2 + rng.below(3);
        size_t k = 1 + rng.below(d);
        std::vector<long long> u(d), v(d), s(d);
        bool proportional = rng.below(4) == 0;
        long long c = 1 + (long long)rng.below(3);
        for (size_t i = 0; i < d; ++i) {
            u[i] = 1 + (long long)rng.below(30);
            v[i] = proportional ? c * u[i] : 1 + (long long)rng.below(30);
            s[i] = u[i] + v[i];
        }
        BigInt A = ekOf(s, k), B = ekOf(u, k), C = ekOf(v, k);

        if (k == 1) {
            CHECK(A == B + C);
            continue;
        }
        bool prop = true;
        for (size_t i = 0; i + 1 < d; ++i)
            if (BigInt(u[i]) * v[i + 1] != BigInt(v[i]) * u[i + 1]) prop = false;
        if (prop) {
            // v = c u with rational c, so equality holds and is checkable without roots
            Rational lam{BigInt(v[0]), BigInt(u[0])};
            CHECK(Rational(C) == lam.pow(static_cast<unsigned>(k)) * Rational(B));
            CHECK(Rational(A) == (Rational(1) + lam).pow(static_cast<unsigned>(k)) * Rational(B));
            continue;
        }
        bool settled = false;
        for (unsigned prec = 8; prec <= 512 && !settled; prec *= 2) {
            BigInt la = testsupport::nthRootFloor(A << (k * prec), static_cast<unsigned>(k));
            BigInt lb = testsupport::nthRootFloor(B << (k * prec), static_cast<unsigned>(k));
            BigInt lc = testsupport::nthRootFloor(C << (k * prec), static_cast<unsigned>(k));
            if (la >= (lb + 1) + (lc + 1)) settled = true;        // A^{1/k} certainly larger
            REQUIRE(la + 1 >= lb + lc);                           // would refute concavity
        }
        CHECK(settled);
    }
}
