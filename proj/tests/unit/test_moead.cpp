#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "triset/archive.hpp"
#include "triset/error.hpp"
#include "triset/moead.hpp"

using namespace triset;

namespace {

MoeadConfig small_config(std::uint64_t budget, std::uint64_t seed = 1) {
    MoeadConfig c;
    c.population_size = 15;
    c.neighborhood_size = 10;
    c.max_evaluations = budget;
    c.seed = seed;
    return c;
}

}  // namespace

TEST(Neighborhoods, FullSizeCoversEverything) {
    const auto w = simplex_lattice(3, 4);
    for (const auto& list : build_neighborhoods(w, w.size())) {
        auto sorted = list;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);
    }
}

TEST(Neighborhoods, StartWithSelfAndHaveSizeT) {
    const auto w = simplex_lattice(3, 6);
    const auto hoods = build_neighborhoods(w, 7);
    for (std::size_t i = 0; i < hoods.size(); ++i) {
        ASSERT_EQ(hoods[i].size(), 7u);
        EXPECT_EQ(hoods[i][0], i);
    }
}

TEST(Neighborhoods, TieGoesToLowerIndex) {
    const std::vector<WeightVector> w{{0, 1}, {0.5, 0.5}, {1, 0}};
    const auto hoods = build_neighborhoods(w, 2);
    EXPECT_EQ(hoods[1], (std::vector<std::size_t>{1, 0}));
    EXPECT_THROW(build_neighborhoods(w, 4), ParameterError);
    EXPECT_THROW(build_neighborhoods(w, 0), ParameterError);
}

TEST(Neighborhoods, DefaultSizes) {
    EXPECT_EQ(default_neighborhood_size(15), 15u);
    EXPECT_EQ(default_neighborhood_size(91), 20u);
    EXPECT_EQ(default_neighborhood_size(210), 20u);
    EXPECT_EQ(default_neighborhood_size(990), 200u);
    EXPECT_EQ(default_neighborhood_size(1001), 200u);
    EXPECT_EQ(default_neighborhood_size(5050), 1000u);
    EXPECT_EQ(default_neighborhood_size(5985), 1000u);
}

TEST(Moead, BudgetOfOnePopulationReturnsInitialPopulation) {
    const auto p = make_problem("DTLZ2", 3);
    RecordingSink rec;
    SolutionSink* sinks[] = {&rec};
    const auto state = run_moead(small_config(15), p, sinks);
    EXPECT_EQ(state.evals_used, 15u);
    EXPECT_EQ(state.generations, 0u);
    ASSERT_EQ(rec.solutions.size(), 15u);
    EXPECT_EQ(rec.initial_count, 15u);
    EXPECT_EQ(state.population, rec.solutions);
}

TEST(Moead, DeterministicForFixedSeed) {
    const auto p = make_problem("DTLZ1", 3);
    auto a1 = ScalarizingArchive::with_size(3, 91, Scalarizer::tchebycheff());
    auto a2 = ScalarizingArchive::with_size(3, 91, Scalarizer::tchebycheff());
    SolutionSink* s1[] = {&a1};
    SolutionSink* s2[] = {&a2};
    const auto r1 = run_moead(small_config(3000, 9), p, s1);
    const auto r2 = run_moead(small_config(3000, 9), p, s2);
    EXPECT_EQ(r1.population, r2.population);
    EXPECT_EQ(r1.z, r2.z);
    EXPECT_EQ(a1.slots(), a2.slots());
    const auto r3 = run_moead(small_config(3000, 10), p, {});
    EXPECT_NE(r1.population, r3.population);
}

TEST(Moead, IdealIsMinimumOverObservedStream) {
    for (const auto kind : {Scalarizer::tchebycheff(), Scalarizer::pbi()}) {
        const auto p = make_problem("WFG4", 3);
        RecordingSink rec;
        SolutionSink* sinks[] = {&rec};
        auto cfg = small_config(1500, 3);
        cfg.scalarizer = kind;
        const auto state = run_moead(cfg, p, sinks);
        ObjectiveVector z(3, std::numeric_limits<double>::infinity());
        for (const auto& s : rec.solutions) z = update_ideal(z, s.f);
        EXPECT_EQ(state.z, z);
        EXPECT_EQ(rec.solutions.size(), state.evals_used);
        // Each offered solution had already been folded into z.
        for (std::size_t i = rec.initial_count; i < rec.solutions.size(); ++i) {
            const auto& zs = rec.z_snapshots[i];
            for (std::size_t j = 0; j < 3; ++j) EXPECT_LE(zs[j], rec.solutions[i].f[j]);
        }
    }
}

TEST(Moead, ReplacementsStrictlyImprove) {
    const auto p = make_problem("DTLZ3", 3);
    MoeadHooks hooks;
    std::size_t replacements = 0;
    hooks.on_replacement = [&](std::size_t, double old_value, double new_value) {
        ++replacements;
        EXPECT_LT(new_value, old_value);
    };
    run_moead(small_config(2000, 4), p, {}, hooks);
    EXPECT_GT(replacements, 0u);
}

TEST(Moead, EvaluationCountAndBounds) {
    const auto p = make_problem("WFG1", 3);
    for (std::uint64_t budget : {15u, 16u, 29u, 30u, 31u, 500u}) {
        std::uint64_t sweeps = 0;
        MoeadHooks hooks;
        hooks.on_generation = [&](const MoeadState& s) {
            ++sweeps;
            EXPECT_EQ(s.evals_used, 15u * (sweeps + 1));
        };
        const auto state = run_moead(small_config(budget), p, {}, hooks);
        EXPECT_GE(state.evals_used, budget);
        EXPECT_LE(state.evals_used, budget + 15 - 1);
        EXPECT_EQ(state.evals_used % 15, 0u);
        for (const auto& s : state.population) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                EXPECT_GE(s.x[i], p.lower[i]);
                EXPECT_LE(s.x[i], p.upper[i]);
            }
        }
    }
}

TEST(Moead, ConfigErrors) {
    const auto p = make_problem("DTLZ2", 3);
    EXPECT_THROW(run_moead(small_config(14), p), ConfigError);
    auto bad_n = small_config(100);
    bad_n.population_size = 16;
    EXPECT_THROW(run_moead(bad_n, p), ConfigError);
    auto bad_t = small_config(100);
    bad_t.neighborhood_size = 1;
    EXPECT_THROW(run_moead(bad_t, p), ConfigError);
    bad_t.neighborhood_size = 16;
    EXPECT_THROW(run_moead(bad_t, p), ConfigError);
}
