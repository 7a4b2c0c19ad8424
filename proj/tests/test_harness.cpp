#include "doctest.h"

#include "helly/constructions.hpp"
#include "helly/harness.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace helly;

namespace {

// Containment oracle: a halfspace holds on a box iff it holds at the corner
// picked coordinatewise by the sign of the normal.
bool boxInFamily(const FamilyInstance& F, const Box& b) {
    for (const auto& s : F.sets)
        for (const auto& h : s.shape.halfspaces) {
            Rational worst(0);
            for (size_t i = 0; i < F.dim; ++i)
                worst = worst + h.normal[i] * (h.normal[i] > 0 ? b.upper[i] : b.lower[i]);
            if (worst > h.offset) return false;
        }
    return true;
}

void replayBoxWitness(const FamilyInstance& F, const VerificationReport& rep,
                      const Rational& thickness) {
    if (!rep.witness) return;
    REQUIRE(rep.witnessCount.has_value());
    CHECK(latticeCountBox(*rep.witness) == *rep.witnessCount);
    CHECK(boxInFamily(F, *rep.witness));
    CHECK(rep.witness->minEdge() >= thickness);
}

bool noteHas(const VerificationReport& rep, const std::string& phrase) {
    return rep.note.find(phrase) != std::string::npos;
}

Polyhedron axisBox2(long long xLo, long long xHi, long long yLo, long long yHi) {
    std::vector<Halfspace> hs;
    hs.emplace_back(std::vector<Rational>{Rational(-1), Rational(0)}, Rational(-xLo));
    hs.emplace_back(std::vector<Rational>{Rational(1), Rational(0)}, Rational(xHi));
    hs.emplace_back(std::vector<Rational>{Rational(0), Rational(-1)}, Rational(-yLo));
    hs.emplace_back(std::vector<Rational>{Rational(0), Rational(1)}, Rational(yHi));
    return Polyhedron(2, hs);
}

Polyhedron wholePlane() { return Polyhedron(2, {}); }

Polyhedron emptyPlaneSet() {
    std::vector<Halfspace> hs;
    hs.emplace_back(std::vector<Rational>{Rational(1), Rational(0)}, Rational(0));
    hs.emplace_back(std::vector<Rational>{Rational(-1), Rational(0)}, Rational(-1));
    return Polyhedron(2, hs);
}

TheoremParams withN(long long n) {
    TheoremParams p;
    p.n = BigInt(n);
    return p;
}

}  // namespace

TEST_CASE("integer-corner box statement on hypercubes") {
    FamilyInstance cube = hypercubeFamily(2, Rational(5));

    VerificationReport rep = verifyTheoremInstance(cube, "boxIntegerLattice", withN(4));
    CHECK(rep.outcome == Outcome::Confirmed);
    CHECK(rep.theoremId == "boxIntegerLattice");
    CHECK(rep.dim == 2);
    CHECK(rep.familySize == 4);
    CHECK(rep.helly == 8);
    REQUIRE(rep.witnessCount.has_value());
    CHECK(*rep.witnessCount == 36);
    replayBoxWitness(cube, rep, Rational(0));

    // threshold above the full count: already the whole-family premise fails
    VerificationReport miss = verifyTheoremInstance(cube, "boxIntegerLattice", withN(100));
    CHECK(miss.outcome == Outcome::PremiseUnmet);
    CHECK(miss.failingSubfamily == std::vector<size_t>{0, 1, 2, 3});
    CHECK(noteHas(miss, "36"));

    FamilyInstance half;
    half.dim = 2;
    half.sets.push_back(
        {"half", Polyhedron(2, {Halfspace({Rational(1), Rational(0)}, Rational(0))})});
    VerificationReport open = verifyTheoremInstance(half, "boxIntegerLattice", withN(1000));
    CHECK(open.outcome == Outcome::Confirmed);
    CHECK(noteHas(open, "arbitrarily many"));
}

TEST_CASE("hexagon family and the thick-coordinate fraction") {
    FamilyInstance hex = figure1Family();

    TheoremParams p = withN(1);
    p.m = 1;
    VerificationReport rep = verifyTheoremInstance(hex, "P218", p);
    CHECK(rep.outcome == Outcome::Confirmed);
    CHECK(rep.helly == 8);  // family of six checks itself
    REQUIRE(rep.witnessCount.has_value());
    CHECK(*rep.witnessCount == 3);
    CHECK(noteHas(rep, "threshold 1 met"));
    replayBoxWitness(hex, rep, Rational(0));

    TheoremParams p4 = withN(4);
    p4.m = 1;
    VerificationReport miss = verifyTheoremInstance(hex, "P218", p4);
    CHECK(miss.outcome == Outcome::PremiseUnmet);
    CHECK(miss.failingSubfamily == std::vector<size_t>{0, 1, 2, 3, 4, 5});
    CHECK(noteHas(miss, "3 lattice point"));
}

TEST_CASE("unit-thick premise on the cross-polytope") {
    FamilyInstance cross = crossPolytopeFamily(2);

    TheoremParams p = withN(4);
    p.t = Rational(1);
    VerificationReport rep = verifyTheoremInstance(cross, "unitThickFraction", p);
    CHECK(rep.outcome == Outcome::PremiseUnmet);
    CHECK(rep.failingSubfamily == std::vector<size_t>{0, 1, 2, 3});
    CHECK(noteHas(rep, "1 lattice point"));

    // dropping one face frees a 1-thick unit square with all four corners
    FamilyInstance dropped;
    dropped.dim = 2;
    for (size_t i = 0; i + 1 < cross.sets.size(); ++i) dropped.sets.push_back(cross.sets[i]);
    VerificationReport ok = verifyTheoremInstance(dropped, "unitThickFraction", p);
    CHECK(ok.outcome == Outcome::Confirmed);
    CHECK(noteHas(ok, "meets the primary threshold"));
    CHECK(noteHas(ok, "primary threshold 2, fallback 1"));
    REQUIRE(ok.witnessCount.has_value());
    CHECK(*ok.witnessCount == 4);
    replayBoxWitness(dropped, ok, Rational(0));
}

TEST_CASE("low-dimensional box and volume statements on a cube") {
    FamilyInstance cube = hypercubeFamily(2, Rational(5));

    TheoremParams pBox = withN(6);
    pBox.k = 1;
    VerificationReport seg = verifyTheoremInstance(cube, "kBoxLattice", pBox);
    CHECK(seg.outcome == Outcome::Confirmed);
    CHECK(seg.helly == 8);
    REQUIRE(seg.witnessCount.has_value());
    CHECK(*seg.witnessCount == 6);  // a full edge of lattice points
    CHECK(noteHas(seg, "threshold 3 met"));
    replayBoxWitness(cube, seg, Rational(0));

    TheoremParams pBox7 = withN(7);
    pBox7.k = 1;
    VerificationReport segMiss = verifyTheoremInstance(cube, "kBoxLattice", pBox7);
    CHECK(segMiss.outcome == Outcome::PremiseUnmet);
    CHECK(segMiss.failingSubfamily == std::vector<size_t>{0, 1, 2, 3});

    TheoremParams pVol;
    pVol.k = 1;
    pVol.w = Rational(5);
    VerificationReport vol = verifyTheoremInstance(cube, "kVolume", pVol);
    CHECK(vol.outcome == Outcome::Confirmed);
    CHECK(vol.helly == 4);
    REQUIRE(vol.witnessVolume.has_value());
    CHECK(*vol.witnessVolume == 5);
    CHECK(noteHas(vol, "bound 5/2 met"));

    TheoremParams pArea;
    pArea.k = 2;
    pArea.w = Rational(25);
    VerificationReport area = verifyTheoremInstance(cube, "kVolume", pArea);
    CHECK(area.outcome == Outcome::Confirmed);
    CHECK(*area.witnessVolume == 25);

    TheoremParams pAreaMiss;
    pAreaMiss.k = 2;
    pAreaMiss.w = Rational(26);
    VerificationReport areaMiss = verifyTheoremInstance(cube, "kVolume", pAreaMiss);
    CHECK(areaMiss.outcome == Outcome::PremiseUnmet);

    TheoremParams pSkel;
    pSkel.k = 1;
    pSkel.w = Rational(20);  // 2^(d-1) * (5 + 5)
    VerificationReport skel = verifyTheoremInstance(cube, "skeletonVolume", pSkel);
    CHECK(skel.outcome == Outcome::Confirmed);
    CHECK(*skel.witnessVolume == 20);

    TheoremParams pSkel2;
    pSkel2.k = 2;
    pSkel2.w = Rational(25);
    VerificationReport skel2 = verifyTheoremInstance(cube, "skeletonVolume", pSkel2);
    CHECK(skel2.outcome == Outcome::Confirmed);
    CHECK(*skel2.witnessVolume == 25);

    TheoremParams pSkelMiss;
    pSkelMiss.k = 2;
    pSkelMiss.w = Rational(26);
    CHECK(verifyTheoremInstance(cube, "skeletonVolume", pSkelMiss).outcome ==
          Outcome::PremiseUnmet);

    FamilyInstance cube3 = hypercubeFamily(3, Rational(2));
    TheoremParams pSkel3;
    pSkel3.k = 1;
    pSkel3.w = Rational(24);  // 2^2 * (2 + 2 + 2)
    VerificationReport skel3 = verifyTheoremInstance(cube3, "skeletonVolume", pSkel3);
    CHECK(skel3.outcome == Outcome::Confirmed);
    CHECK(*skel3.witnessVolume == 24);
    TheoremParams pSkelBad;
    pSkelBad.k = 2;
    pSkelBad.w = Rational(1);
    CHECK_THROWS_AS(verifyTheoremInstance(cube3, "skeletonVolume", pSkelBad),
                    std::invalid_argument);
}

TEST_CASE("thick fractions across the parameter grid") {
    FamilyInstance cube = hypercubeFamily(2, Rational(3));

    TheoremParams p;
    p.n = BigInt(8);
    p.t = Rational(1);
    p.m = 1;
    VerificationReport r218 = verifyTheoremInstance(cube, "P218", p);
    CHECK(r218.outcome == Outcome::Confirmed);
    CHECK(r218.helly == 8);
    CHECK(*r218.witnessCount == 16);
    CHECK(noteHas(r218, "threshold 6 met"));  // ceil(8 / (3/2))
    replayBoxWitness(cube, r218, Rational(1));

    VerificationReport r219 = verifyTheoremInstance(cube, "P219", p);
    CHECK(r219.outcome == Outcome::Confirmed);
    CHECK(r219.helly == 4);
    CHECK(noteHas(r219, "threshold 2 met"));  // ceil(8 / (9/2))

    TheoremParams pFull;
    pFull.n = BigInt(9);
    pFull.t = Rational(1);
    pFull.m = 2;
    VerificationReport rFull = verifyTheoremInstance(cube, "P219", pFull);
    CHECK(rFull.outcome == Outcome::Confirmed);
    CHECK(rFull.helly == 4);  // the m = d degenerate Helly number
    CHECK(noteHas(rFull, "threshold 1 met"));

    FamilyInstance segment = hypercubeFamily(1, Rational(3));
    TheoremParams pLine = withN(4);
    pLine.m = 1;
    VerificationReport rLine = verifyTheoremInstance(segment, "P218", pLine);
    CHECK(rLine.outcome == Outcome::Confirmed);
    CHECK(rLine.helly == 2);
    CHECK(noteHas(rLine, "threshold 2 met"));  // factor 2 at t = 0
}

TEST_CASE("instance parameter validation") {
    FamilyInstance cube = hypercubeFamily(2, Rational(2));

    CHECK_THROWS_AS(verifyTheoremInstance(cube, "noSuchStatement", withN(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "boxIntegerLattice", TheoremParams{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "boxIntegerLattice", withN(0)),
                    std::invalid_argument);

    TheoremParams strayM = withN(1);
    strayM.m = 1;
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "boxIntegerLattice", strayM),
                    std::invalid_argument);
    TheoremParams strayT = withN(1);
    strayT.t = Rational(1);
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "boxIntegerLattice", strayT),
                    std::invalid_argument);
    TheoremParams strayW = withN(1);
    strayW.w = Rational(1);
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "boxIntegerLattice", strayW),
                    std::invalid_argument);

    TheoremParams thick = withN(1);
    thick.t = Rational(2);
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "unitThickFraction", thick),
                    std::invalid_argument);

    TheoremParams badK = withN(1);
    badK.k = 0;
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "kBoxLattice", badK), std::invalid_argument);
    badK.k = 3;
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "kBoxLattice", badK), std::invalid_argument);

    TheoremParams noW;
    noW.k = 1;
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "kVolume", noW), std::invalid_argument);
    TheoremParams negW;
    negW.k = 1;
    negW.w = Rational(-1);
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "kVolume", negW), std::invalid_argument);

    TheoremParams badM = withN(1);
    badM.m = 0;
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "P218", badM), std::invalid_argument);
    badM.m = 3;
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "P218", badM), std::invalid_argument);
    TheoremParams coldP219 = withN(1);
    coldP219.m = 1;
    coldP219.t = Rational(1, 2);
    CHECK_THROWS_AS(verifyTheoremInstance(cube, "P219", coldP219), std::invalid_argument);

    FamilyInstance wrongDim;
    wrongDim.dim = 2;
    wrongDim.sets.push_back(
        {"line", Polyhedron(1, {Halfspace({Rational(1)}, Rational(1))})});
    CHECK_THROWS_AS(verifyTheoremInstance(wrongDim, "boxIntegerLattice", withN(1)),
                    std::invalid_argument);
    FamilyInstance tooBig;
    tooBig.dim = 4;
    CHECK_THROWS_AS(verifyTheoremInstance(tooBig, "boxIntegerLattice", withN(1)),
                    std::invalid_argument);
}

TEST_CASE("colorful verification") {
    SUBCASE("whole planes confirm trivially") {
        FamilyInstance F;
        F.dim = 2;
        for (size_t i = 0; i < 4; ++i) {
            F.sets.push_back({"plane-" + std::to_string(i + 1), wholePlane()});
            F.colors.push_back(i);
        }
        VerificationReport rep = verifyColorfulInstance(F, ColorfulMode::Doignon, {});
        CHECK(rep.outcome == Outcome::Confirmed);
        CHECK(rep.helly == 4);
        REQUIRE(rep.witnessPoint.has_value());
        for (const auto& c : *rep.witnessPoint) CHECK(c.den() == 1);
        CHECK(noteHas(rep, "class 0"));

        TheoremParams pm;
        pm.m = 1;
        VerificationReport mixed = verifyColorfulInstance(F, ColorfulMode::MixedInteger, pm);
        CHECK(mixed.outcome == Outcome::Confirmed);
        REQUIRE(mixed.witnessPoint.has_value());
        CHECK((*mixed.witnessPoint)[1].den() == 1);

        TheoremParams pm0;
        pm0.m = 0;
        CHECK(verifyColorfulInstance(F, ColorfulMode::MixedInteger, pm0).outcome ==
              Outcome::Confirmed);
    }

    SUBCASE("singleton split of the sharp vertex family") {
        FamilyInstance F = cubeVertexFamily(2);
        for (size_t i = 0; i < F.sets.size(); ++i) F.colors.push_back(i);
        // the only rainbow selection is the whole family, whose intersection
        // is the lattice-free point (1/2, 1/2)
        VerificationReport rep = verifyColorfulInstance(F, ColorfulMode::Doignon, {});
        CHECK(rep.outcome == Outcome::PremiseUnmet);
        CHECK(rep.failingSubfamily == std::vector<size_t>{0, 1, 2, 3});

        TheoremParams pm;
        pm.m = 1;
        VerificationReport mixed = verifyColorfulInstance(F, ColorfulMode::MixedInteger, pm);
        CHECK(mixed.outcome == Outcome::PremiseUnmet);
    }

    SUBCASE("box mode over singleton classes") {
        for (uint64_t seed = 1; seed <= 6; ++seed) {
            FamilyInstance F = randomFamily(seed, 2, 8, 2);
            for (size_t i = 0; i < 8; ++i) F.colors.push_back(i);
            VerificationReport rep =
                verifyColorfulInstance(F, ColorfulMode::BoxInteger, withN(1));
            CHECK(rep.helly == 8);
            bool sound = rep.outcome == Outcome::Confirmed ||
                         rep.outcome == Outcome::PremiseUnmet;
            CHECK(sound);
            replayBoxWitness(F, rep, Rational(0));
        }
    }

    SUBCASE("class bookkeeping errors") {
        FamilyInstance F = cubeVertexFamily(2);
        CHECK_THROWS_AS(verifyColorfulInstance(F, ColorfulMode::Doignon, {}),
                        std::domain_error);  // no colors at all
        F.colors = {0, 1, 2, 2};
        CHECK_THROWS_AS(verifyColorfulInstance(F, ColorfulMode::Doignon, {}),
                        std::domain_error);  // three classes, not 2^d
        F.colors = {0, 0, 2, 3};
        CHECK_THROWS_AS(verifyColorfulInstance(F, ColorfulMode::Doignon, {}),
                        std::domain_error);  // class 1 empty
        F.colors = {0, 1, 2, 3};
        CHECK_THROWS_AS(verifyColorfulInstance(F, ColorfulMode::BoxInteger, withN(1)),
                        std::domain_error);  // box mode wants 2^(2d-1) classes
        CHECK_THROWS_AS(verifyColorfulInstance(F, ColorfulMode::MixedInteger, withN(1)),
                        std::invalid_argument);  // m missing
        TheoremParams pm;
        pm.m = 3;
        CHECK_THROWS_AS(verifyColorfulInstance(F, ColorfulMode::MixedInteger, pm),
                        std::invalid_argument);
    }

    SUBCASE("rainbow budget") {
        FamilyInstance F;
        F.dim = 2;
        for (size_t cls = 0; cls < 8; ++cls)
            for (size_t rep = 0; rep < 6; ++rep) {
                F.sets.push_back({"p", wholePlane()});
                F.colors.push_back(cls);
            }
        // 6^8 rainbow selections pass the 10^6 budget
        CHECK_THROWS_AS(verifyColorfulInstance(F, ColorfulMode::BoxInteger, withN(1)),
                        ScaleError);
    }

    SUBCASE("mode names") {
        CHECK(colorfulModeName(ColorfulMode::Doignon) == "doignon");
        CHECK(parseColorfulMode("mixedInteger") == ColorfulMode::MixedInteger);
        CHECK(parseColorfulMode("boxInteger") == ColorfulMode::BoxInteger);
        CHECK_THROWS_AS(parseColorfulMode("rainbow"), std::invalid_argument);
    }

    CHECK(outcomeName(Outcome::Confirmed) == "CONFIRMED");
    CHECK(outcomeName(Outcome::PremiseUnmet) == "PREMISE_UNMET");
    CHECK(outcomeName(Outcome::Counterexample) == "COUNTEREXAMPLE");
}

TEST_CASE("fractional census") {
    SUBCASE("identical squares") {
        FamilyInstance F;
        F.dim = 2;
        for (size_t i = 0; i < 6; ++i)
            F.sets.push_back({"square-" + std::to_string(i + 1), axisBox2(0, 1, 0, 1)});
        CensusResult c = fractionalCensus(F, BigInt(4), Rational(0));
        CHECK(c.alpha == 1);
        CHECK(c.beta == 1);
        CHECK(c.goodCount == 15);
        CHECK(c.subfamilyCount == 15);
        CHECK(c.bestSize == 6);
    }

    SUBCASE("hexagon family") {
        FamilyInstance F = figure1Family();
        CensusResult c = fractionalCensus(F, BigInt(4), Rational(0));
        // every quadruple keeps a 4-point box, the full family tops out at 3
        CHECK(c.alpha == 1);
        CHECK(c.beta == Rational(5, 6));
        CHECK(c.bestSize == 5);
        CHECK(c.bestSubfamily == std::vector<size_t>{0, 1, 2, 3, 4});
    }

    SUBCASE("an empty set degrades both fractions") {
        FamilyInstance F = figure1Family();
        F.sets.push_back({"empty", emptyPlaneSet()});
        CensusResult c = fractionalCensus(F, BigInt(4), Rational(0));
        CHECK(c.alpha == Rational(15, 35));
        CHECK(c.beta == Rational(5, 7));
        CHECK(c.beta < 1);
    }

    SUBCASE("no good subfamily at any size") {
        FamilyInstance F;
        F.dim = 2;
        F.sets.push_back({"a", axisBox2(0, 1, 0, 1)});
        F.sets.push_back({"b", axisBox2(10, 11, 0, 1)});
        F.sets.push_back({"c", axisBox2(0, 1, 10, 11)});
        F.sets.push_back({"d", axisBox2(10, 11, 10, 11)});
        CensusResult c = fractionalCensus(F, BigInt(5), Rational(0));
        CHECK(c.alpha == 0);
        CHECK(c.beta == 0);
        CHECK(c.bestSize == 0);
        CHECK(c.bestSubfamily.empty());
    }

    SUBCASE("beta dominates any good quota subfamily") {
        for (uint64_t seed = 1; seed <= 20; ++seed) {
            FamilyInstance F = randomFamily(seed, 2, 4 + seed % 3, 2);
            CensusResult c = fractionalCensus(F, BigInt(1), Rational(0));
            CHECK(c.alpha >= 0);
            CHECK(c.alpha <= 1);
            CHECK(c.beta >= 0);
            CHECK(c.beta <= 1);
            if (c.goodCount > 0) CHECK(c.beta >= Rational(BigInt(4), BigInt(F.sets.size())));
            if (c.bestSize > 0) CHECK(c.beta == Rational(BigInt(c.bestSize), BigInt(F.sets.size())));
        }
    }

    SUBCASE("guards") {
        FamilyInstance F = figure1Family();
        CHECK_THROWS_AS(fractionalCensus(F, BigInt(0), Rational(0)), std::invalid_argument);
        CHECK_THROWS_AS(fractionalCensus(F, BigInt(1), Rational(-1)), std::invalid_argument);
        FamilyInstance tiny;
        tiny.dim = 2;
        tiny.sets.push_back({"a", wholePlane()});
        CHECK_THROWS_AS(fractionalCensus(tiny, BigInt(1), Rational(0)),
                        std::invalid_argument);
        FamilyInstance wide;
        wide.dim = 2;
        for (size_t i = 0; i < 17; ++i) wide.sets.push_back({"p", wholePlane()});
        CHECK_THROWS_AS(fractionalCensus(wide, BigInt(1), Rational(0)), ScaleError);
    }
}

TEST_CASE("random family generator") {
    FamilyInstance a = randomFamily(1, 2, 5, 3);
    FamilyInstance b = randomFamily(1, 2, 5, 3);
    REQUIRE(a.sets.size() == b.sets.size());
    for (size_t i = 0; i < a.sets.size(); ++i) {
        CHECK(a.sets[i].name == b.sets[i].name);
        REQUIRE(a.sets[i].shape.halfspaces.size() == b.sets[i].shape.halfspaces.size());
        for (size_t r = 0; r < a.sets[i].shape.halfspaces.size(); ++r) {
            CHECK(a.sets[i].shape.halfspaces[r].normal ==
                  b.sets[i].shape.halfspaces[r].normal);
            CHECK(a.sets[i].shape.halfspaces[r].offset ==
                  b.sets[i].shape.halfspaces[r].offset);
        }
    }

    bool sawWindow = false, sawPlain = false, differs = false;
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        for (size_t d = 1; d <= 3; ++d) {
            const long long B = 3;
            FamilyInstance F = randomFamily(seed, d, 4, B);
            CHECK(F.dim == d);
            CHECK(F.sets.size() == 4);
            for (size_t i = 0; i < F.sets.size(); ++i) {
                const auto& s = F.sets[i];
                if (s.name == "window") {
                    CHECK(i == F.sets.size() - 1);
                    CHECK(s.shape.halfspaces.size() == 2 * d);
                    sawWindow = true;
                    continue;
                }
                CHECK(s.name == "set-" + std::to_string(i + 1));
                CHECK(s.shape.halfspaces.size() >= 1);
                CHECK(s.shape.halfspaces.size() <= d + 1);
                for (const auto& h : s.shape.halfspaces) {
                    bool allZero = true;
                    for (const auto& c : h.normal) {
                        CHECK(c <= Rational(B));
                        CHECK(-c <= Rational(B));
                        CHECK(c.den() <= 2);
                        if (c != 0) allZero = false;
                    }
                    CHECK_FALSE(allZero);
                    CHECK(h.offset <= Rational(B));
                    CHECK(-h.offset <= Rational(B));
                }
            }
            if (F.sets.back().name != "window") sawPlain = true;
        }
        FamilyInstance other = randomFamily(seed + 1, 2, 4, 3);
        FamilyInstance base = randomFamily(seed, 2, 4, 3);
        if (other.sets[0].shape.halfspaces.size() != base.sets[0].shape.halfspaces.size() ||
            other.sets[0].shape.halfspaces[0].normal !=
                base.sets[0].shape.halfspaces[0].normal)
            differs = true;
    }
    CHECK(sawWindow);
    CHECK(sawPlain);
    CHECK(differs);

    CHECK_THROWS_AS(randomFamily(1, 0, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(randomFamily(1, 4, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(randomFamily(1, 2, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(randomFamily(1, 2, 4, 0), std::invalid_argument);
}

TEST_CASE("reports replay and agree across thread counts") {
    struct Load {
        std::string id;
        TheoremParams params;
        Rational conclusionThickness;
    };
    std::vector<Load> loads;
    loads.push_back({"boxIntegerLattice", withN(2), Rational(0)});
    loads.push_back({"unitThickFraction", withN(3), Rational(0)});
    {
        TheoremParams p = withN(2);
        p.k = 1;
        loads.push_back({"kBoxLattice", p, Rational(0)});
    }
    {
        TheoremParams p;
        p.k = 1;
        p.w = Rational(3, 2);
        loads.push_back({"kVolume", p, Rational(0)});
        loads.push_back({"skeletonVolume", p, Rational(0)});
    }
    {
        TheoremParams p = withN(3);
        p.m = 1;
        p.t = Rational(1);
        loads.push_back({"P218", p, Rational(1)});
        loads.push_back({"P219", p, Rational(1)});
    }

    for (uint64_t seed = 1; seed <= 12; ++seed) {
        FamilyInstance F = randomFamily(seed, 2, 3 + seed % 5, 2);
        for (const auto& load : loads) {
            VerificationReport serial = verifyTheoremInstance(F, load.id, load.params, 1);
            VerificationReport pooled = verifyTheoremInstance(F, load.id, load.params, 8);
            CHECK(serial.outcome != Outcome::Counterexample);
            CHECK(serial.outcome == pooled.outcome);
            CHECK(serial.failingSubfamily == pooled.failingSubfamily);
            CHECK(serial.note == pooled.note);
            CHECK(serial.witness.has_value() == pooled.witness.has_value());
            if (serial.witness) {
                CHECK(serial.witness->lower == pooled.witness->lower);
                CHECK(serial.witness->upper == pooled.witness->upper);
            }
            replayBoxWitness(F, serial, load.conclusionThickness);
        }
    }
}
