#include "triset/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "triset/error.hpp"

namespace triset {

namespace {

void require_nonempty(const PointSet& set, const char* what) {
    if (set.empty()) throw EmptySetError(std::string(what) + ": empty set");
}

void require_uniform_dimension(const PointSet& set, std::size_t m) {
    for (const auto& p : set) {
        if (p.size() != m) throw DimensionError("point set with mixed dimensions");
    }
}

}  // namespace

double loss_pair(std::span<const double> a, std::span<const double> s) {
    require_same_dimension(a, s);
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double deficit = std::max(0.0, a[i] - s[i]);
        sq += deficit * deficit;
    }
    return std::sqrt(sq);
}

double subset_loss(const PointSet& subset, std::span<const double> s) {
    require_nonempty(subset, "subset_loss");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : subset) best = std::min(best, loss_pair(a, s));
    return best;
}

double expected_loss(const PointSet& subset, const PointSet& candidates) {
    require_nonempty(subset, "expected_loss");
    require_nonempty(candidates, "expected_loss");
    double total = 0.0;
    for (const auto& s : candidates) total += subset_loss(subset, s);
    return total / static_cast<double>(candidates.size());
}

// Written independently of expected_loss, in IGD+ terms (distance from each
// reference point to its nearest approximation point, counting only the
// objectives where the approximation is worse), with the same summation order.
double igd_plus(const PointSet& approximation, const PointSet& reference) {
    require_nonempty(approximation, "igd_plus");
    require_nonempty(reference, "igd_plus");
    const std::size_t m = reference.front().size();
    require_uniform_dimension(reference, m);
    require_uniform_dimension(approximation, m);
    double total = 0.0;
    for (const auto& r : reference) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& a : approximation) {
            double sq = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const double d = a[i] > r[i] ? a[i] - r[i] : 0.0;
                sq += d * d;
            }
            nearest = std::min(nearest, std::sqrt(sq));
        }
        total += nearest;
    }
    return total / static_cast<double>(reference.size());
}

double igd(const PointSet& approximation, const PointSet& reference) {
    require_nonempty(approximation, "igd");
    require_nonempty(reference, "igd");
    const std::size_t m = reference.front().size();
    require_uniform_dimension(reference, m);
    require_uniform_dimension(approximation, m);
    double total = 0.0;
    for (const auto& r : reference) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& a : approximation) {
            double sq = 0.0;
            for (std::size_t i = 0; i < m; ++i) sq += (a[i] - r[i]) * (a[i] - r[i]);
            nearest = std::min(nearest, std::sqrt(sq));
        }
        total += nearest;
    }
    return total / static_cast<double>(reference.size());
}

ObjectiveVector default_hv_reference(int m) { return ObjectiveVector(static_cast<std::size_t>(m), 1.1); }

}  // namespace triset
