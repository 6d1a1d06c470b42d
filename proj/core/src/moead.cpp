#include "triset/moead.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "triset/error.hpp"
#include "triset/random.hpp"
#include "triset/variation.hpp"

namespace triset {

std::size_t default_neighborhood_size(std::size_t population_size) {
    switch (population_size) {
        case 15: return 15;
        case 91:
        case 210: return 20;
        case 990:
        case 1001: return 200;
        case 5050:
        case 5985: return 1000;
        default: return std::max<std::size_t>(2, std::min<std::size_t>(population_size, 20));
    }
}

std::vector<std::vector<std::size_t>> build_neighborhoods(const std::vector<WeightVector>& weights,
                                                          std::size_t t) {
    const std::size_t n = weights.size();
    if (t < 1 || t > n) {
        throw ParameterError("neighborhood size " + std::to_string(t) + " outside [1, " +
                             std::to_string(n) + "]");
    }
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<double> dist(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t d = 0; d < weights[i].size(); ++d) {
                const double diff = weights[i][d] - weights[j][d];
                sq += diff * diff;
            }
            dist[j] = sq;
        }
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t), order.end(),
                          [&](std::size_t a, std::size_t b) {
                              if (dist[a] != dist[b]) return dist[a] < dist[b];
                              return a < b;
                          });
        out[i].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
    }
    return out;
}

namespace {

void validate(const MoeadConfig& config, const ProblemSpec& problem) {
    try {
        lattice_divisions_for_size(problem.m, config.population_size);
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
    if (config.neighborhood_size < 2 || config.neighborhood_size > config.population_size) {
        throw ConfigError("neighborhood size must lie in [2, N]");
    }
    if (config.max_evaluations < config.population_size) {
        throw ConfigError("evaluation budget " + std::to_string(config.max_evaluations) +
                          " is smaller than the population size " +
                          std::to_string(config.population_size));
    }
    if (config.scalarizer.kind == ScalarizerKind::Pbi && !(config.scalarizer.theta > 0.0)) {
        throw ConfigError("PBI theta must be positive");
    }
}

}  // namespace

MoeadState run_moead(const MoeadConfig& config, const ProblemSpec& problem,
                     std::span<SolutionSink* const> sinks, const MoeadHooks& hooks) {
    validate(config, problem);
    const std::size_t n = config.population_size;
    const int h = lattice_divisions_for_size(problem.m, n);
    const double pm_prob =
        config.pm_prob.value_or(1.0 / static_cast<double>(problem.num_variables));

    MoeadState state;
    state.weights = simplex_lattice(problem.m, h);
    state.neighborhoods = build_neighborhoods(state.weights, config.neighborhood_size);
    const WeightSet subproblems(state.weights, config.scalarizer);

    Rng rng(config.seed);
    state.population.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        DecisionVector x(problem.num_variables);
        for (std::size_t d = 0; d < x.size(); ++d) {
            x[d] = rng.uniform(problem.lower[d], problem.upper[d]);
        }
        ObjectiveVector f = evaluate(problem, x);
        state.population.push_back({std::move(x), std::move(f), state.evals_used++});
    }
    state.z = state.population.front().f;
    for (const auto& s : state.population) update_ideal_in_place(state.z, s.f);
    for (SolutionSink* sink : sinks) sink->initialize(state.population, state.z);

    const std::size_t t = config.neighborhood_size;
    while (state.evals_used < config.max_evaluations) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& hood = state.neighborhoods[i];
            const std::size_t a = rng.below(t);
            std::size_t b = rng.below(t - 1);
            if (b >= a) ++b;
            const auto& p1 = state.population[hood[a]].x;
            const auto& p2 = state.population[hood[b]].x;

            auto children = sbx_crossover(p1, p2, problem.lower, problem.upper, config.sbx_eta,
                                          config.sbx_prob, rng);
            DecisionVector x = polynomial_mutation(children.first, problem.lower, problem.upper,
                                                   config.pm_eta, pm_prob, rng);
            ObjectiveVector f = evaluate(problem, x);
            Solution child{std::move(x), std::move(f), state.evals_used++};

            update_ideal_in_place(state.z, child.f);
            for (SolutionSink* sink : sinks) sink->offer(child, state.z);

            for (std::size_t j : hood) {
                const double incumbent = subproblems.value(j, state.population[j].f.data(), state.z.data());
                const double candidate = subproblems.value(j, child.f.data(), state.z.data());
                if (candidate < incumbent) {
                    if (hooks.on_replacement) hooks.on_replacement(j, incumbent, candidate);
                    state.population[j] = child;
                }
            }
        }
        ++state.generations;
        if (hooks.on_generation) hooks.on_generation(state);
    }
    return state;
}

}  // namespace triset
