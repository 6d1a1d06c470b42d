#include "triset/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "triset/error.hpp"

namespace triset {

bool dominates(std::span<const double> u, std::span<const double> v) {
    require_same_dimension(u, v);
    bool strictly_better = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) return false;
        if (u[i] < v[i]) strictly_better = true;
    }
    return strictly_better;
}

bool weakly_dominates(std::span<const double> u, std::span<const double> v) {
    require_same_dimension(u, v);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) return false;
    }
    return true;
}

bool lexicographic_less(std::span<const double> a, std::span<const double> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::size_t> canonical_order(const std::vector<ObjectiveVector>& points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lexicographic_less(points[a], points[b]);
    });
    return order;
}

std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& points) {
    if (points.empty()) throw EmptySetError("nondominated_filter: empty input");
    const std::size_t m = points.front().size();
    for (const auto& p : points) {
        if (p.size() != m) throw DimensionError("nondominated_filter: mixed dimensions");
    }

    // Any dominator of p precedes p in lexicographic order, and the first of a
    // run of equal vectors precedes the rest (stable sort), so a single pass
    // against the retained prefix suffices.
    const auto order = canonical_order(points);
    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
        const auto& p = points[idx];
        const bool covered = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
            return weakly_dominates(points[k], p);
        });
        if (!covered) kept.push_back(idx);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<ObjectiveVector> nondominated_filter(const std::vector<ObjectiveVector>& points) {
    std::vector<ObjectiveVector> out;
    for (std::size_t idx : nondominated_indices(points)) out.push_back(points[idx]);
    return out;
}

void validate_bounds(const NormalizationBounds& bounds) {
    require_same_dimension(bounds.ideal, bounds.nadir);
    for (std::size_t i = 0; i < bounds.ideal.size(); ++i) {
        if (!std::isfinite(bounds.ideal[i]) || !std::isfinite(bounds.nadir[i]) ||
            !(bounds.ideal[i] < bounds.nadir[i])) {
            throw ParameterError("normalization bounds require ideal < nadir in every objective");
        }
    }
}

ObjectiveVector normalize(std::span<const double> f, const NormalizationBounds& bounds) {
    require_same_dimension(f, bounds.ideal);
    ObjectiveVector out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = (f[i] - bounds.ideal[i]) / (bounds.nadir[i] - bounds.ideal[i]);
    }
    return out;
}

ObjectiveVector denormalize(std::span<const double> g, const NormalizationBounds& bounds) {
    require_same_dimension(g, bounds.ideal);
    ObjectiveVector out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        out[i] = bounds.ideal[i] + g[i] * (bounds.nadir[i] - bounds.ideal[i]);
    }
    return out;
}

std::vector<ObjectiveVector> normalize_all(const std::vector<ObjectiveVector>& points,
                                           const NormalizationBounds& bounds) {
    std::vector<ObjectiveVector> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(normalize(p, bounds));
    return out;
}

}  // namespace triset
