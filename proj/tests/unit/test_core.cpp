#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "test_support.hpp"
#include "triset/dominance.hpp"
#include "triset/error.hpp"
#include "triset/random.hpp"

using namespace triset;
using triset::testing::Gen;

TEST(Dominance, StrictlyBetterEverywhere) {
    EXPECT_TRUE(dominates(ObjectiveVector{1, 2}, ObjectiveVector{2, 3}));
}

TEST(Dominance, IncomparablePair) {
    EXPECT_FALSE(dominates(ObjectiveVector{1, 3}, ObjectiveVector{3, 1}));
    EXPECT_FALSE(dominates(ObjectiveVector{3, 1}, ObjectiveVector{1, 3}));
}

TEST(Dominance, EqualVectorsDoNotDominate) {
    EXPECT_FALSE(dominates(ObjectiveVector{1, 2}, ObjectiveVector{1, 2}));
    EXPECT_TRUE(weakly_dominates(ObjectiveVector{1, 2}, ObjectiveVector{1, 2}));
}

TEST(Dominance, LengthMismatchThrows) {
    EXPECT_THROW(dominates(ObjectiveVector{1, 2}, ObjectiveVector{1, 2, 3}), DimensionError);
}

TEST(Dominance, OrderAxiomsOnRandomTriples) {
    Gen gen(7);
    for (int t = 0; t < 2000; ++t) {
        // Coarse grid values so that equal coordinates are common.
        const auto pts = gen.grid_points(3, 3, 3);
        const auto &a = pts[0], &b = pts[1], &c = pts[2];
        EXPECT_FALSE(dominates(a, a));
        if (dominates(a, b)) EXPECT_FALSE(dominates(b, a));
        if (dominates(a, b) && dominates(b, c)) EXPECT_TRUE(dominates(a, c));
    }
}

TEST(NondominatedFilter, RemovesDominatedPoint) {
    const PointSet in{{1, 2}, {2, 1}, {2, 2}};
    EXPECT_EQ(nondominated_filter(in), (PointSet{{1, 2}, {2, 1}}));
}

TEST(NondominatedFilter, CollapsesDuplicates) {
    EXPECT_EQ(nondominated_filter(PointSet{{1, 2}, {1, 2}}), (PointSet{{1, 2}}));
}

TEST(NondominatedFilter, AntichainIsUnchanged) {
    const PointSet in{{0, 5}, {1, 4}, {2, 3}, {3, 2}, {4, 0.5}};
    EXPECT_EQ(nondominated_filter(in), in);
}

TEST(NondominatedFilter, EmptyInputThrows) {
    EXPECT_THROW(nondominated_filter(PointSet{}), EmptySetError);
}

TEST(NondominatedFilter, MatchesPairwiseOracleAndIsIdempotent) {
    Gen gen(11);
    for (int t = 0; t < 300; ++t) {
        const std::size_t m = 2 + gen.index(3);
        const auto pts = gen.grid_points(1 + gen.index(40), m, 4);
        const auto idx = nondominated_indices(pts);
        EXPECT_EQ(idx, triset::testing::pairwise_nondominated(pts));
        const auto once = nondominated_filter(pts);
        EXPECT_EQ(nondominated_filter(once), once);
        // Every removed point is dominated by or equal to a retained one.
        for (const auto& p : pts) {
            bool covered = false;
            for (const auto& q : once) covered = covered || weakly_dominates(q, p);
            EXPECT_TRUE(covered);
        }
    }
}

TEST(Normalize, IdealMapsToZeroAndNadirToOne) {
    const NormalizationBounds b{{0.0, 1.0, -2.0}, {0.5, 3.0, 2.0}};
    EXPECT_EQ(normalize(b.ideal, b), (ObjectiveVector{0, 0, 0}));
    EXPECT_EQ(normalize(b.nadir, b), (ObjectiveVector{1, 1, 1}));
}

TEST(Normalize, HandExample) {
    const NormalizationBounds b{{0, 0, 0}, {0.5, 0.5, 0.5}};
    EXPECT_EQ(normalize(ObjectiveVector{0.25, 0.25, 0}, b), (ObjectiveVector{0.5, 0.5, 0}));
}

TEST(Normalize, RoundTrip) {
    Gen gen(5);
    for (int t = 0; t < 500; ++t) {
        NormalizationBounds b{gen.point(4, -3, 0), gen.point(4, 0.5, 9)};
        const auto f = gen.point(4, -5, 12);
        const auto back = denormalize(normalize(f, b), b);
        for (std::size_t i = 0; i < f.size(); ++i) {
            EXPECT_LE(std::fabs(back[i] - f[i]), 1e-12 * std::max(1.0, std::fabs(f[i])));
        }
    }
}

TEST(Normalize, InvalidBoundsRejected) {
    EXPECT_THROW(validate_bounds({{0, 0}, {1, 0}}), ParameterError);
    EXPECT_THROW(validate_bounds({{0, 0}, {1}}), DimensionError);
}

TEST(CanonicalOrder, LexicographicAndStable) {
    const PointSet pts{{1, 2}, {0, 5}, {1, 2}, {1, 1}};
    EXPECT_EQ(canonical_order(pts), (std::vector<std::size_t>{1, 3, 0, 2}));
}

TEST(Rng, SameSeedSameStream) {
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        differs = differs || x != c.uniform();
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
    EXPECT_TRUE(differs);
}

TEST(Rng, BelowCoversRangeUniformly) {
    Rng rng(3);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70000; ++i) ++counts.at(rng.below(7));
    for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(Rng, NormalMoments) {
    Rng rng(9);
    double sum = 0.0, sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double v = rng.normal();
        sum += v;
        sq += v * v;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sq / n, 1.0, 0.02);
}

TEST(Rng, MixSeedSeparatesNeighbours) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t a = 0; a < 20; ++a) {
        for (std::uint64_t b = 0; b < 20; ++b) seen.insert(mix_seed(a, b));
    }
    EXPECT_EQ(seen.size(), 400u);
}
