#pragma once

#include <span>
#include <utility>

#include "triset/random.hpp"
#include "triset/types.hpp"

namespace triset {

/// Child pair of one SBX variable for spread draw `u` in [0, 1). Unclipped;
/// the midpoint of the children equals the midpoint of the parents.
std::pair<double, double> sbx_variable(double p1, double p2, double u, double eta);

/// Spread factor beta of simulated binary crossover for draw `u`.
double sbx_spread(double u, double eta);

/// Simulated binary crossover. With probability `prob` the operator fires and
/// then each variable is recombined with probability 0.5, its two child
/// values exchanged with probability 0.5; children are clipped to [lower, upper].
std::pair<DecisionVector, DecisionVector> sbx_crossover(std::span<const double> p1,
                                                        std::span<const double> p2,
                                                        std::span<const double> lower,
                                                        std::span<const double> upper, double eta,
                                                        double prob, Rng& rng);

/// Normalized perturbation in [-1, 1] of polynomial mutation for draw `u`.
double polynomial_delta(double u, double eta);

/// Each variable is moved by delta * (upper - lower) with probability `prob`,
/// then clipped to its bounds.
DecisionVector polynomial_mutation(std::span<const double> x, std::span<const double> lower,
                                   std::span<const double> upper, double eta, double prob,
                                   Rng& rng);

}  // namespace triset
