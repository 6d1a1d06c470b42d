#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "triset/indicators.hpp"
#include "triset/types.hpp"

namespace triset {

enum class SelectionMethod { DistanceGreedy, HvGreedy, LossGreedy };

/// "distance", "hv", "loss" (plus a few aliases); throws ParameterError otherwise.
SelectionMethod parse_selection_method(std::string_view name);
std::string_view selection_method_name(SelectionMethod method);

/// hv_greedy computes contributions exactly up to this many objectives and
/// estimates them by sampling above it.
inline constexpr int kMaxExactGreedyHvObjectives = 4;
inline constexpr std::size_t kDefaultGreedyHvSamples = 100'000;

struct SubsetRequest {
    /// Candidate set S, normally non-dominated and in normalized objective space.
    PointSet candidates;
    std::size_t k = 1;
    SelectionMethod method = SelectionMethod::DistanceGreedy;
    /// Hypervolume reference point (HV greedy only); defaults to (1.1, ..., 1.1).
    ObjectiveVector hv_reference;
    /// Picks the random extreme for distance greedy and seeds the sampled
    /// contributions of HV greedy when m > 4.
    std::uint64_t seed = 0;
    std::size_t mc_samples = kDefaultGreedyHvSamples;
};

/// A greedy step at which several candidates shared the best value.
struct TieEvent {
    std::size_t step = 0;
    std::size_t chosen = 0;
    std::vector<std::size_t> tied;
};

struct SubsetResult {
    /// Indices into request.candidates, in the order they were picked.
    std::vector<std::size_t> indices;
    /// Criterion value of the final subset: its hypervolume (HV greedy), its
    /// expected loss (loss greedy) or the last max-min distance (distance greedy).
    double score = 0.0;
    std::vector<TieEvent> ties;
    /// Distance greedy: objective whose extreme started the selection.
    std::size_t seed_objective = 0;
    /// HV greedy: false when contributions were estimated by sampling.
    bool exact = true;
};

/// Starts from the minimizer of a randomly chosen objective, then repeatedly
/// adds the candidate farthest from its nearest selected point.
SubsetResult distance_greedy(const SubsetRequest& request);

/// Repeatedly adds the candidate with the largest hypervolume contribution.
SubsetResult hv_greedy(const SubsetRequest& request);

/// Repeatedly adds the candidate that minimizes the expected loss of the subset.
SubsetResult loss_greedy(const SubsetRequest& request);

SubsetResult select_subset(const SubsetRequest& request);

enum class OracleCriterion { MaxHv, MinLoss };

struct OracleResult {
    std::vector<std::size_t> indices;
    double score = 0.0;
};

inline constexpr std::uint64_t kOracleSubsetLimit = 1'000'000;

/// Exhaustive search over all k-subsets (ties: lexicographically smallest
/// index tuple). Throws SizeError when binomial(|S|, k) exceeds 10^6.
OracleResult exact_subset_oracle(const PointSet& candidates, std::size_t k,
                                 OracleCriterion criterion, std::span<const double> hv_reference);

PointSet pick(const PointSet& points, const std::vector<std::size_t>& indices);

}  // namespace triset
