#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vres/homology.hpp"
#include "vres/linalg.hpp"

using namespace vres;

TEST(Linalg, RankAgreesWithNaiveElimination) {
    std::mt19937_64 rng(7);
    Field F(101);
    for (int it = 0; it < 200; ++it) {
        int r = 1 + rng() % 9, c = 1 + rng() % 9;
        DenseMat m(r, DenseRow(c));
        std::vector<std::vector<long long>> o(r, std::vector<long long>(c));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                coef v = rng() % 3 ? 0 : coef(rng() % 101);
                m[i][j] = v;
                o[i][j] = v;
            }
        SparseMat s{c, {}};
        for (auto& row : m) {
            SparseRow sr;
            for (int j = 0; j < c; ++j)
                if (row[j]) sr.push_back({j, row[j]});
            s.rows.push_back(sr);
        }
        std::size_t expect = oracle::naiveRank(o, 101);
        EXPECT_EQ(denseRank(m, F), expect);
        EXPECT_EQ(sparseRank(s, F), expect);
    }
}

TEST(Linalg, KernelBasisIsKernel) {
    std::mt19937_64 rng(3);
    Field F;
    for (int it = 0; it < 50; ++it) {
        int r = 1 + rng() % 5, c = 1 + rng() % 7;
        DenseMat m(r, DenseRow(c));
        for (auto& row : m)
            for (auto& v : row) v = rng() % 2 ? coef(rng() % 5) : 0;
        auto ker = kernelBasis(m, c, F);
        EXPECT_EQ(ker.size() + denseRank(m, F), static_cast<std::size_t>(c));
        for (auto& k : ker)
            for (auto& row : m) {
                coef s = 0;
                for (int j = 0; j < c; ++j) s = F.add(s, F.mul(row[j], k[j]));
                EXPECT_EQ(s, 0u);
            }
    }
}

TEST(Homology, Spheres) {
    vres::Setup s({5});
    ColoredComplex boundary(s, {0b01111, 0b10111, 0b11011, 0b11101, 0b11110});
    HomologyProfile h = reducedHomology(boundary);
    for (int i = -1; i <= 3; ++i) EXPECT_EQ(h.at(i), i == 3 ? 1u : 0u) << i;
    HomologyProfile pts = reducedHomology(ColoredComplex(s, {0b1, 0b10, 0b100}));
    EXPECT_EQ(pts.at(0), 2u);
    EXPECT_EQ(reducedHomology(ColoredComplex::emptyFace(s)).at(-1), 1u);
    EXPECT_TRUE(reducedHomology(ColoredComplex::voidComplex(s)).voidComplex);
}

TEST(Homology, ProjectivePlaneDependsOnCharacteristic) {
    // six-vertex real projective plane
    vres::Setup s({6});
    std::vector<std::vector<int>> tri = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                         {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    std::vector<Face> facets;
    for (auto& t : tri) facets.push_back((Face(1) << t[0]) | (Face(1) << t[1]) | (Face(1) << t[2]));
    ColoredComplex rp2(s, facets);
    HomologyProfile h2 = reducedHomology(rp2, Field(2));
    HomologyProfile h3 = reducedHomology(rp2, Field(3));
    EXPECT_EQ(h2.at(1), 1u);
    EXPECT_EQ(h2.at(2), 1u);
    EXPECT_EQ(h3.at(1), 0u);
    EXPECT_EQ(h3.at(2), 0u);
    EXPECT_FALSE(reisnerIsCM(rp2, Field(2)).cm);
    EXPECT_TRUE(reisnerIsCM(rp2, Field(3)).cm);
}

TEST(Homology, EulerCharacteristicExhaustive) {
    for (auto& d : oracle::allComplexes(vres::Setup({2, 2}))) {
        HomologyProfile h = reducedHomology(d);
        long long chiH = 0, chiF = 0;
        for (int i = -1; i <= d.dim(); ++i) chiH += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(h.at(i));
        for (Face f : d.faces()) chiF += (popcount(f) % 2 == 1) ? 1 : -1;
        EXPECT_EQ(chiH, chiF);
    }
}

TEST(Homology, RelativeOfPairReducesToQuotient) {
    // (disk, boundary circle): H_2 = 1
    vres::Setup s({3});
    ColoredComplex disk(s, {0b111});
    ColoredComplex circle(s, {0b011, 0b101, 0b110});
    EXPECT_EQ(relativeHomology(disk, circle, 2), 1u);
    EXPECT_EQ(relativeHomology(disk, circle, 1), 0u);
    EXPECT_EQ(relativeHomology(disk, disk, 1), 0u);
}

TEST(Reisner, WitnessIsGenuine) {
    for (auto& d : oracle::allComplexes(vres::Setup({2, 2}))) {
        ReisnerResult r = reisnerIsCM(d);
        if (r.cm) continue;
        ASSERT_TRUE(r.witness.has_value());
        auto [sigma, i] = *r.witness;
        ColoredComplex l = link(d, sigma);
        EXPECT_LT(i, l.dim());
        EXPECT_NE(reducedHomology(l).at(i), 0u);
    }
}

TEST(Hochster, CoarseningOfFineTable) {
    vres::Setup s({2, 3});
    ColoredComplex d(s, {0b11001, 0b00111, 0b10110});
    BettiTable fine = hochsterBetti(d, Field(), true);
    BettiTable coarse = hochsterBetti(d, Field(), false);
    BettiTable folded;
    for (auto& [k, n] : fine.entries) {
        std::vector<int> c(2, 0);
        for (int v = 0; v < 5; ++v) c[s.colorOf(v)] += k.second[v];
        folded.add(k.first, c, n);
    }
    EXPECT_EQ(folded, coarse);
}
