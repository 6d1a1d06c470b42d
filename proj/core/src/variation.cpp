#include "triset/variation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace triset {

double sbx_spread(double u, double eta) {
    if (u <= 0.5) return std::pow(2.0 * u, 1.0 / (eta + 1.0));
    return std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
}

std::pair<double, double> sbx_variable(double p1, double p2, double u, double eta) {
    const double beta = sbx_spread(u, eta);
    const double c1 = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2);
    const double c2 = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2);
    return {c1, c2};
}

std::pair<DecisionVector, DecisionVector> sbx_crossover(std::span<const double> p1,
                                                        std::span<const double> p2,
                                                        std::span<const double> lower,
                                                        std::span<const double> upper, double eta,
                                                        double prob, Rng& rng) {
    require_same_dimension(p1, p2);
    require_same_dimension(p1, lower);
    require_same_dimension(p1, upper);
    DecisionVector c1(p1.begin(), p1.end());
    DecisionVector c2(p2.begin(), p2.end());
    if (rng.uniform() >= prob) return {c1, c2};
    for (std::size_t i = 0; i < c1.size(); ++i) {
        if (rng.uniform() >= 0.5) continue;
        // Equal parents would come back perturbed by rounding.
        if (std::fabs(p1[i] - p2[i]) <= 1e-14) continue;
        auto [a, b] = sbx_variable(p1[i], p2[i], rng.uniform(), eta);
        // The two child values are exchanged with probability 0.5, as in the
        // reference SBX implementations; otherwise the first child would stay
        // on the first parent's side in every variable.
        if (rng.uniform() < 0.5) std::swap(a, b);
        c1[i] = std::clamp(a, lower[i], upper[i]);
        c2[i] = std::clamp(b, lower[i], upper[i]);
    }
    return {c1, c2};
}

double polynomial_delta(double u, double eta) {
    if (u < 0.5) return std::pow(2.0 * u, 1.0 / (eta + 1.0)) - 1.0;
    return 1.0 - std::pow(2.0 * (1.0 - u), 1.0 / (eta + 1.0));
}

DecisionVector polynomial_mutation(std::span<const double> x, std::span<const double> lower,
                                   std::span<const double> upper, double eta, double prob,
                                   Rng& rng) {
    require_same_dimension(x, lower);
    require_same_dimension(x, upper);
    DecisionVector out(x.begin(), x.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (rng.uniform() >= prob) continue;
        const double delta = polynomial_delta(rng.uniform(), eta);
        out[i] = std::clamp(out[i] + delta * (upper[i] - lower[i]), lower[i], upper[i]);
    }
    return out;
}

}  // namespace triset
