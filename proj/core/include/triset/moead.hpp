#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "triset/problems.hpp"
#include "triset/scalarize.hpp"
#include "triset/types.hpp"

namespace triset {

/// Observer of the solution stream produced by a MOEA/D run.
///
/// `initialize` receives the evaluated initial population once; `offer` then
/// receives every later solution exactly once, right after the ideal-point
/// estimate `z` has been updated with it.
class SolutionSink {
public:
    virtual ~SolutionSink() = default;
    virtual void initialize(std::span<const Solution> initial, std::span<const double> z) = 0;
    virtual void offer(const Solution& s, std::span<const double> z) = 0;
};

struct MoeadConfig {
    std::size_t population_size = 91;
    std::size_t neighborhood_size = 20;
    Scalarizer scalarizer = Scalarizer::tchebycheff();
    std::uint64_t max_evaluations = 50'000;
    std::uint64_t seed = 1;
    double sbx_eta = 30.0;
    double sbx_prob = 1.0;
    double pm_eta = 20.0;
    /// Per-variable mutation probability; 1/D when unset.
    std::optional<double> pm_prob;
};

/// Neighborhood size paired with each population size of the standard size
/// table (15, 91/210, 990/1001, 5050/5985); min(N, 20) for other sizes.
std::size_t default_neighborhood_size(std::size_t population_size);

struct MoeadState {
    std::vector<WeightVector> weights;
    std::vector<Solution> population;
    ObjectiveVector z;
    std::vector<std::vector<std::size_t>> neighborhoods;
    std::uint64_t evals_used = 0;
    std::uint64_t generations = 0;
};

/// For each weight, the indices of its T nearest weights (Euclidean), nearest
/// first, ties broken by lower index; each list starts with the weight itself.
std::vector<std::vector<std::size_t>> build_neighborhoods(const std::vector<WeightVector>& weights,
                                                          std::size_t t);

struct MoeadHooks {
    /// Called before a resident is replaced, with both values under the current z.
    std::function<void(std::size_t subproblem, double old_value, double new_value)> on_replacement;
    /// Called after each completed generation sweep.
    std::function<void(const MoeadState&)> on_generation;
};

/// Runs MOEA/D until at least `max_evaluations` solutions have been evaluated,
/// checking the budget after each full generation sweep. Every evaluated
/// solution is handed to each sink in `sinks`.
/// Throws ConfigError for an invalid configuration.
MoeadState run_moead(const MoeadConfig& config, const ProblemSpec& problem,
                     std::span<SolutionSink* const> sinks = {}, const MoeadHooks& hooks = {});

}  // namespace triset
