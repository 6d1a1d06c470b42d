#pragma once

#include <span>
#include <vector>

#include "triset/types.hpp"

namespace triset {

/// True iff `u` is no worse than `v` in every objective and strictly better in one.
bool dominates(std::span<const double> u, std::span<const double> v);

/// True iff u_i <= v_i for every i (equality allowed everywhere).
bool weakly_dominates(std::span<const double> u, std::span<const double> v);

/// Indices (ascending) of the points that are not dominated by any other
/// point, keeping only the first occurrence of bitwise-equal vectors.
/// Throws EmptySetError on empty input.
std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& points);

/// Non-dominated, duplicate-free subset of `points`, in input order.
std::vector<ObjectiveVector> nondominated_filter(const std::vector<ObjectiveVector>& points);

/// Componentwise (f - ideal) / (nadir - ideal).
ObjectiveVector normalize(std::span<const double> f, const NormalizationBounds& bounds);

/// Inverse of normalize.
ObjectiveVector denormalize(std::span<const double> g, const NormalizationBounds& bounds);

std::vector<ObjectiveVector> normalize_all(const std::vector<ObjectiveVector>& points,
                                           const NormalizationBounds& bounds);

/// Throws ParameterError unless ideal < nadir componentwise and both are finite.
void validate_bounds(const NormalizationBounds& bounds);

/// Strict lexicographic order on objective vectors.
bool lexicographic_less(std::span<const double> a, std::span<const double> b);

/// Permutation that sorts `points` lexicographically (stable for equal vectors).
std::vector<std::size_t> canonical_order(const std::vector<ObjectiveVector>& points);

}  // namespace triset
