#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "triset/error.hpp"
#include "triset/scalarize.hpp"

using namespace triset;
using triset::testing::Gen;

namespace {

std::size_t binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::size_t>(std::llround(r));
}

}  // namespace

TEST(Lattice, CountMatchesBinomialOverGrid) {
    for (int m = 2; m <= 6; ++m) {
        for (int h = 1; h <= 20; ++h) {
            if (binomial(m + h - 1, m - 1) > 60000) continue;
            const auto w = simplex_lattice(m, h);
            ASSERT_EQ(w.size(), binomial(m + h - 1, m - 1)) << "m=" << m << " H=" << h;
            EXPECT_EQ(lattice_size(m, h), w.size());
            for (const auto& v : w) {
                double sum = 0.0;
                for (double c : v) {
                    EXPECT_GE(c, 0.0);
                    const double j = c * h;
                    EXPECT_NEAR(j, std::round(j), 1e-9);
                    sum += c;
                }
                EXPECT_NEAR(sum, 1.0, 1e-12);
            }
        }
    }
}

TEST(Lattice, TableSizes) {
    EXPECT_EQ(simplex_lattice(3, 12).size(), 91u);
    EXPECT_EQ(simplex_lattice(5, 17).size(), 5985u);
    EXPECT_EQ(lattice_divisions_for_size(3, 15), 4);
    EXPECT_EQ(lattice_divisions_for_size(3, 91), 12);
    EXPECT_EQ(lattice_divisions_for_size(3, 990), 43);
    EXPECT_EQ(lattice_divisions_for_size(3, 5050), 99);
    EXPECT_EQ(lattice_divisions_for_size(5, 15), 2);
    EXPECT_EQ(lattice_divisions_for_size(5, 210), 6);
    EXPECT_EQ(lattice_divisions_for_size(5, 1001), 10);
    EXPECT_EQ(lattice_divisions_for_size(5, 5985), 17);
    EXPECT_THROW(lattice_divisions_for_size(3, 100), ParameterError);
}

TEST(Lattice, TwoObjectivesTwoDivisions) {
    const auto w = simplex_lattice(2, 2);
    const std::vector<WeightVector> want{{0, 1}, {0.5, 0.5}, {1, 0}};
    EXPECT_EQ(w, want);
}

TEST(Lattice, InvalidArguments) {
    EXPECT_THROW(simplex_lattice(3, 0), ParameterError);
    EXPECT_THROW(simplex_lattice(1, 4), ParameterError);
}

TEST(Tchebycheff, Examples) {
    EXPECT_DOUBLE_EQ(tchebycheff(ObjectiveVector{0.4, 0.8}, WeightVector{0.5, 0.5}, ObjectiveVector{0, 0}), 0.4);
    EXPECT_EQ(tchebycheff(ObjectiveVector{0.3, 0.2}, WeightVector{0.7, 0.3}, ObjectiveVector{0.3, 0.2}), 0.0);
    EXPECT_DOUBLE_EQ(tchebycheff(ObjectiveVector{1, 1}, WeightVector{0, 1}, ObjectiveVector{0, 0}), 1.0);
    // The floor makes a zero-weight objective still count.
    EXPECT_DOUBLE_EQ(tchebycheff(ObjectiveVector{2, 0}, WeightVector{0, 1}, ObjectiveVector{0, 0}), 2e-6);
}

TEST(Tchebycheff, DimensionMismatch) {
    EXPECT_THROW(tchebycheff(ObjectiveVector{1, 1}, WeightVector{1, 0, 0}, ObjectiveVector{0, 0}), DimensionError);
}

TEST(Tchebycheff, WeaklyMonotone) {
    Gen gen(21);
    for (int t = 0; t < 5000; ++t) {
        const std::size_t m = 2 + gen.index(4);
        const auto z = gen.point(m, -1, 0);
        const auto f = gen.point(m);
        auto g = f;
        for (auto& v : g) v += gen.uniform(0, 0.5);
        auto w = gen.simplex_points(1, m)[0];
        if (gen.index(3) == 0) w[gen.index(m)] = 0.0;
        EXPECT_LE(tchebycheff(f, w, z), tchebycheff(g, w, z));
    }
}

TEST(Pbi, Examples) {
    EXPECT_DOUBLE_EQ(pbi(ObjectiveVector{2, 0}, WeightVector{1, 0}, ObjectiveVector{0, 0}, 5.0), 2.0);
    EXPECT_DOUBLE_EQ(pbi(ObjectiveVector{1, 1}, WeightVector{1, 0}, ObjectiveVector{0, 0}, 5.0), 6.0);
    EXPECT_EQ(pbi(ObjectiveVector{0.2, 0.4}, WeightVector{0.5, 0.5}, ObjectiveVector{0.2, 0.4}, 5.0), 0.0);
}

TEST(Pbi, Errors) {
    EXPECT_THROW(pbi(ObjectiveVector{1, 1}, WeightVector{0, 0}, ObjectiveVector{0, 0}), ParameterError);
    EXPECT_THROW(pbi(ObjectiveVector{1, 1}, WeightVector{1}, ObjectiveVector{0, 0}), DimensionError);
    EXPECT_THROW(WeightSet(simplex_lattice(2, 3), Scalarizer::pbi(0.0)), ParameterError);
}

TEST(Pbi, TranslationCovariant) {
    Gen gen(22);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t m = 2 + gen.index(4);
        const auto f = gen.point(m);
        const auto z = gen.point(m, -0.5, 0);
        const auto w = gen.simplex_points(1, m)[0];
        const double c = gen.uniform(-3, 3);
        auto fc = f, zc = z;
        for (auto& v : fc) v += c;
        for (auto& v : zc) v += c;
        const double base = pbi(f, w, z, 5.0);
        EXPECT_NEAR(pbi(fc, w, zc, 5.0), base, 1e-9 * std::max(1.0, base));
    }
}

TEST(Scalarizer, ParseAndName) {
    EXPECT_EQ(parse_scalarizer("TCH"), Scalarizer::tchebycheff());
    EXPECT_EQ(parse_scalarizer("tchebycheff"), Scalarizer::tchebycheff());
    EXPECT_EQ(parse_scalarizer("pbi"), Scalarizer::pbi());
    EXPECT_EQ(scalarizer_name(Scalarizer::pbi()), "PBI");
    EXPECT_EQ(scalarizer_name(Scalarizer::tchebycheff()), "TCH");
    EXPECT_THROW(parse_scalarizer("ws"), ParameterError);
}

TEST(WeightSet, MatchesFreeFunctionsBitForBit) {
    Gen gen(23);
    for (const auto kind : {Scalarizer::tchebycheff(), Scalarizer::pbi()}) {
        const WeightSet set(simplex_lattice(3, 6), kind);
        for (int t = 0; t < 200; ++t) {
            const auto f = gen.point(3);
            const auto z = gen.point(3, -0.2, 0.1);
            for (std::size_t i = 0; i < set.size(); ++i) {
                EXPECT_EQ(set.value(i, f.data(), z.data()), kind(f, set.weights()[i], z));
            }
        }
    }
}

TEST(UpdateIdeal, Examples) {
    EXPECT_EQ(update_ideal(ObjectiveVector{0.5, 0.5}, ObjectiveVector{0.3, 0.7}), (ObjectiveVector{0.3, 0.5}));
    ObjectiveVector z{0.1, 0.2};
    EXPECT_FALSE(update_ideal_in_place(z, ObjectiveVector{0.4, 0.2}));
    EXPECT_EQ(z, (ObjectiveVector{0.1, 0.2}));
    EXPECT_TRUE(update_ideal_in_place(z, ObjectiveVector{0.0, 0.9}));
    EXPECT_EQ(z, (ObjectiveVector{0.0, 0.2}));
}

TEST(UpdateIdeal, OrderIndependent) {
    Gen gen(24);
    auto stream = gen.points(50, 4);
    ObjectiveVector a(4, 1e9), b(4, 1e9);
    for (const auto& f : stream) a = update_ideal(a, f);
    std::shuffle(stream.begin(), stream.end(), gen.engine());
    for (const auto& f : stream) update_ideal_in_place(b, f);
    EXPECT_EQ(a, b);
}
