#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vres/algebra.hpp"
#include "vres/pipeline.hpp"
#include "vres/resolution.hpp"

using namespace vres;

namespace {

std::vector<Poly> polys(const Ring& R, std::initializer_list<const char*> s) {
    std::vector<Poly> out;
    for (auto t : s) out.push_back(parsePoly(R, t));
    return out;
}

std::vector<std::vector<Deg>> sortedMods(ChainComplex c) {
    for (auto& m : c.mods) std::sort(m.begin(), m.end());
    return c.mods;
}

// Alternating sum of free-module Hilbert functions against dim (S/I)_a from linear algebra.
void expectEulerMatchesQuotient(const Ring& R, const ChainComplex& f, const std::vector<Poly>& gens, int box) {
    for (auto& a : oracle::degreeBox(R, box)) {
        long long alt = 0;
        for (int i = 0; i <= f.length(); ++i)
            for (auto& d : f.mods[i]) alt += (i % 2 ? -1 : 1) * oracle::monomialCount(R, degSub(a, d));
        long long expect = oracle::monomialCount(R, a) - static_cast<long long>(oracle::idealDim(R, gens, a));
        EXPECT_EQ(alt, expect);
    }
}

}  // namespace

TEST(FreeResolution, KoszulComplexOfVariables) {
    Ring R = Ring::product({4});
    ChainComplex f = freeResolution(R, Presentation::cyclic(R, polys(R, {"x0", "x1", "x2", "x3"})));
    EXPECT_EQ(f.ranks(), (std::vector<int>{1, 4, 6, 4, 1}));
    EXPECT_TRUE(squaresToZero(R, f));
    EXPECT_TRUE(isHomogeneousComplex(R, f));
}

TEST(FreeResolution, GeneralPathIsExact) {
    Ring R = Ring::product({2, 2});
    std::mt19937_64 rng(13);
    for (int it = 0; it < 10; ++it) {
        std::vector<Poly> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(oracle::randomPoly(R, {int(rng() % 2), 1}, rng, 2));
        ChainComplex f = freeResolution(R, Presentation::cyclic(R, gens));
        EXPECT_TRUE(squaresToZero(R, f));
        EXPECT_TRUE(isHomogeneousComplex(R, f));
        expectEulerMatchesQuotient(R, f, gens, 3);
    }
}

TEST(FreeResolution, SquarefreeFastPathMatchesGeneralPath) {
    Ring R = Ring::product({2, 3});
    ColoredComplex d(vres::Setup({2, 3}), {0b11001, 0b00111, 0b10110});
    Presentation m = stanleyReisnerModule(R, d);
    ChainComplex fast = freeResolution(R, m);
    ResolutionOptions o;
    o.forceGeneral = true;
    ChainComplex slow = freeResolution(R, m, o);
    EXPECT_EQ(sortedMods(fast), sortedMods(slow));
    EXPECT_EQ(bettiTable(R, fast), bettiTable(R, slow));
    expectEulerMatchesQuotient(R, fast, idealGens(m.rel), 2);
}

TEST(Minimize, ResultIsIndependentOfEliminationOrder) {
    Ring R = Ring::product({2, 2});
    std::mt19937_64 rng(17);
    for (int it = 0; it < 6; ++it) {
        std::vector<Poly> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(oracle::randomPoly(R, {1, int(rng() % 2)}, rng, 2));
        Presentation m = Presentation::cyclic(R, gens);
        ChainComplex minimal = freeResolution(R, m);
        ResolutionOptions o;
        o.minimal = false;
        o.forceGeneral = true;
        ChainComplex big = freeResolution(R, m, o);
        for (std::uint64_t seed : {1u, 2u, 3u, 99u}) {
            MinimizeOptions mo;
            mo.seed = seed;
            ChainComplex c = minimizeComplex(R, big, mo).c;
            EXPECT_EQ(sortedMods(c), sortedMods(minimal)) << seed;
            EXPECT_TRUE(squaresToZero(R, c));
        }
    }
}

TEST(Minimize, TrackedMapIsAnIsomorphismOnH0) {
    Ring R = Ring::product({3});
    // S^2 <- S : (x0, 1)^T has a unit and collapses to S <- 0
    GradedMatrix d0({{0}, {1}}, {{1}});
    d0.at(0, 0) = parsePoly(R, "x0");
    d0.at(1, 0) = Poly::constant(1);
    ChainComplex c = makeComplex({{0}, {1}}, {d0});
    MinimizeOptions mo;
    mo.trackF0 = true;
    Minimized m = minimizeComplex(R, c, mo);
    EXPECT_EQ(m.c.ranks(), std::vector<int>{1});
    EXPECT_EQ(m.p.nrows(), 1);
    EXPECT_EQ(m.p.ncols(), 2);
    EXPECT_TRUE(matMul(R, m.p, d0).isZero());
}

TEST(MakeComplex, RejectsMismatchedTwists) {
    Ring R = Ring::product({2});
    GradedMatrix a({{0}}, {{1}});
    a.at(0, 0) = parsePoly(R, "x0");
    EXPECT_THROW(makeComplex({{1}}, {a}), InputError);
}

TEST(OracleEquivalence, ExhaustiveSmallComplexes) {
    for (auto blocks : {std::vector<int>{2, 2}, std::vector<int>{3}}) {
        vres::Setup s(blocks);
        for (auto& d : oracle::allComplexes(s)) {
            Ring R = ringFor(s);
            Ring Rf = Ring::fine(R);
            Presentation m = stanleyReisnerModule(R, d);
            ChainComplex f = freeResolution(R, m);
            EXPECT_EQ(bettiTable(R, f), hochsterBetti(d, R.F, false));
            ChainComplex ff = freeResolution(Rf, stanleyReisnerModule(Rf, d));
            EXPECT_EQ(bettiTable(Rf, ff), hochsterBetti(d, R.F, true));
            int codim = s.nverts() - (d.dim() + 1);
            EXPECT_EQ(reisnerIsCM(d, R.F).cm, f.length() == codim);
            GradedMatrix sat = saturate(R, m.rel);
            auto gens = idealGens(m.rel);
            for (auto& a : oracle::degreeBox(R, 2))
                EXPECT_EQ(oracle::monomialCount(R, a) - hilbertFunction(R, sat, a),
                          static_cast<long long>(oracle::saturationDim(R, gens, a)));
        }
    }
}

TEST(Ext, CohenMacaulayConcentratesInCodim) {
    Ring R = Ring::product({4});
    ChainComplex f = freeResolution(R, Presentation::cyclic(R, polys(R, {"x0*x1", "x2*x3"})));
    for (int i = 0; i <= f.length(); ++i) EXPECT_EQ(extModule(R, f, i).zero, i != 2) << i;
}

TEST(Ext, TwoSkewLinesProfile) {
    Ring R = Ring::product({4});
    ChainComplex f = freeResolution(R, Presentation::cyclic(R, polys(R, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"})));
    ModuleResult e3 = extModule(R, f, 3);
    EXPECT_FALSE(e3.zero);
    EXPECT_TRUE(e3.irrelevant);
    EXPECT_FALSE(extModule(R, f, 2).irrelevant);
    EXPECT_TRUE(extModule(R, f, 1).zero);
}

TEST(Tor, WithResidueFieldCountsBettiNumbers) {
    Ring R = Ring::product({2, 2});
    Presentation m = Presentation::cyclic(R, polys(R, {"x_1_0*x_2_0", "x_1_1*x_2_1"}));
    ChainComplex f = freeResolution(R, m);
    Presentation k = Presentation::cyclic(R, polys(R, {"x_1_0", "x_1_1", "x_2_0", "x_2_1"}));
    for (int i = 0; i <= f.length(); ++i) {
        ModuleResult t = torModule(R, f, k, i);
        EXPECT_EQ(minimalPresentation(R, t.module).rank(), f.ranks()[i]) << i;
    }
}

TEST(Irrelevance, ModulesSupportedOnB) {
    Ring R = Ring::product({2, 2});
    EXPECT_TRUE(isIrrelevantModule(R, Presentation::cyclic(R, polys(R, {"x_1_0", "x_1_1"}))));
    EXPECT_FALSE(isIrrelevantModule(R, Presentation::cyclic(R, polys(R, {"x_1_0", "x_2_1"}))));
    EXPECT_TRUE(isIrrelevantModule(R, Presentation::cyclic(R, polys(R, {"1"}))));
}

TEST(MappingCone, SkewLinesShortenToLengthTwo) {
    Ring R = Ring::product({4});
    Presentation m = Presentation::cyclic(R, polys(R, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}));
    ConeResult cr = mappingConeShorten(R, freeResolution(R, m));
    EXPECT_EQ(cr.t, 3);
    EXPECT_EQ(cr.cone.ranks(), (std::vector<int>{2, 8, 10, 5, 1}));
    EXPECT_EQ(cr.minimized.ranks(), (std::vector<int>{2, 4, 2}));
    EXPECT_TRUE(isVirtualResolution(R, cr.minimized, m).ok());
    for (std::uint64_t seed : {1u, 7u, 42u}) {
        ConeResult c2 = mappingConeShorten(R, freeResolution(R, m), seed);
        EXPECT_EQ(sortedMods(c2.minimized), sortedMods(cr.minimized));
        EXPECT_TRUE(isVirtualResolution(R, c2.minimized, m).ok());
    }
}

TEST(MappingCone, ObstructedByRelevantExt) {
    Ring R = Ring::product({5});
    GradedMatrix j = intersect(R, idealMatrix(R, polys(R, {"x0", "x1"})), idealMatrix(R, polys(R, {"x2", "x3"})));
    Presentation m{{R.zero()}, mingens(R, j)};
    try {
        mappingConeShorten(R, freeResolution(R, m));
        FAIL() << "expected an obstruction";
    } catch (const ObstructionError& e) {
        EXPECT_EQ(e.index, 3);
    }
}

TEST(VirtualCheck, RejectsWrongH0AndRelevantHomology) {
    Ring R = Ring::product({2, 2});
    Presentation a = Presentation::cyclic(R, polys(R, {"x_1_0"}));
    Presentation b = Presentation::cyclic(R, polys(R, {"x_2_0"}));
    ChainComplex fa = freeResolution(R, a);
    EXPECT_TRUE(isVirtualResolution(R, fa, a).ok());
    VirtualCheck wrong = isVirtualResolution(R, fa, b);
    EXPECT_TRUE(wrong.complexOk);
    EXPECT_FALSE(wrong.h0Match);
    // S <- S(-1,0)^2 via (x_1_0, x_2_0)... as a complex with relevant H_1
    GradedMatrix d0({{0, 0}}, {{1, 0}, {1, 0}});
    d0.at(0, 0) = parsePoly(R, "x_1_0");
    d0.at(0, 1) = parsePoly(R, "x_1_0");
    ChainComplex bad = makeComplex({{0, 0}}, {d0});
    EXPECT_FALSE(isVirtualResolution(R, bad, a).higherIrrelevant);
}

TEST(VirtualCheck, IrrelevantHomologyIsAccepted) {
    // Koszul complex on the block P^1 factor x_1_*, shifted: S/(x_1_0,x_1_1) is irrelevant
    Ring R = Ring::product({2, 2});
    Presentation zero = Presentation::cyclic(R, polys(R, {"x_1_0", "x_1_1"}));
    ChainComplex f = freeResolution(R, zero);
    EXPECT_TRUE(isVirtualResolution(R, ChainComplex{}, zero).ok());
    EXPECT_TRUE(isVirtualResolution(R, f, zero).ok());
}

TEST(VirtualRegularity, RegularElementAndZeroDivisor) {
    Ring R = Ring::product({3});
    Presentation m = Presentation::cyclic(R, polys(R, {"x0^2", "x0*x1"}));
    VregResult x2 = isVirtuallyRegular(R, m, parsePoly(R, "x2"));
    EXPECT_TRUE(x2.regular);
    EXPECT_FALSE(x2.annNonzero);
    VregResult x0 = isVirtuallyRegular(R, m, parsePoly(R, "x0"));
    EXPECT_FALSE(x0.regular);
    EXPECT_FALSE(x0.annIrrelevant);
    Presentation q = quotientByElement(R, m, parsePoly(R, "x2"));
    EXPECT_TRUE(sameSubmodule(R, saturate(R, q.rel), idealMatrix(R, polys(R, {"x0", "x2"}))));
}

TEST(VirtualRegularity, TotalComplexOfMultiplication) {
    Ring R = Ring::product({3});
    Presentation m = Presentation::cyclic(R, polys(R, {"x0*x1"}));
    ChainComplex f = freeResolution(R, m);
    ChainComplex tot = quotientTotalComplex(R, f, parsePoly(R, "x2"));
    EXPECT_EQ(tot.ranks(), (std::vector<int>{1, 2, 1}));
    EXPECT_TRUE(squaresToZero(R, tot));
    EXPECT_TRUE(isVirtualResolution(R, tot, quotientByElement(R, m, parsePoly(R, "x2"))).ok());
}

TEST(Classify, CompleteIntersectionIsACM) {
    Ring R = Ring::product({2, 2});
    Classification c = classify(R, Presentation::cyclic(R, polys(R, {"x_1_0*x_2_0", "x_1_1*x_2_1"})));
    EXPECT_EQ(c.cls, "aCM");
    EXPECT_EQ(c.codim, 2);
    EXPECT_EQ(c.pdim, 2);
}

TEST(Classify, BudgetZeroLeavesSkewLinesUndecided) {
    Ring R = Ring::product({4});
    Presentation m = Presentation::cyclic(R, polys(R, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}));
    EXPECT_EQ(classify(R, m, 8).cls, "vCM");
    EXPECT_EQ(classify(R, m, 0).cls, "unknown");
}

TEST(DirectSum, RanksAdd) {
    Ring R = Ring::product({4});
    ChainComplex a = freeResolution(R, Presentation::cyclic(R, polys(R, {"x0", "x1"})));
    ChainComplex b = freeResolution(R, Presentation::cyclic(R, polys(R, {"x2"})));
    EXPECT_EQ(directSum({a, b}).ranks(), (std::vector<int>{2, 3, 1}));
}
