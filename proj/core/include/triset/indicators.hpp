#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "triset/types.hpp"

namespace triset {

using PointSet = std::vector<ObjectiveVector>;

/// Loss of settling for `a` when `s` was preferred: Euclidean length of the
/// objectives in which `a` is worse than `s` (minimization).
double loss_pair(std::span<const double> a, std::span<const double> s);

/// Smallest loss_pair(a, s) over a in A. Throws EmptySetError for empty A.
double subset_loss(const PointSet& subset, std::span<const double> s);

/// Mean over s in S of subset_loss(A, s): the expected loss of offering A
/// when every member of S is equally likely to be the preferred one.
double expected_loss(const PointSet& subset, const PointSet& candidates);

/// IGD+ of `approximation` against `reference`; numerically identical to
/// expected_loss(approximation, reference).
double igd_plus(const PointSet& approximation, const PointSet& reference);

/// Mean over r in R of the Euclidean distance to the closest member of A.
double igd(const PointSet& approximation, const PointSet& reference);

/// Default hypervolume reference point (1.1, ..., 1.1) in normalized space.
ObjectiveVector default_hv_reference(int m);

/// Exact hypervolume of the region dominated by `points` and bounded by `ref`.
/// Points not strictly better than `ref` in every objective contribute nothing.
/// Uses a dimension sweep for m <= 3 and slicing recursion above that.
double hypervolume_exact(const PointSet& points, std::span<const double> ref);

/// Volume dominated by `point` but by none of `others` (within `ref`).
double hypervolume_contribution(std::span<const double> point, const PointSet& others,
                                std::span<const double> ref);

struct HypervolumeEstimate {
    double value = 0.0;
    double standard_error = 0.0;
};

/// Monte Carlo hypervolume over the box [componentwise min of points, ref].
/// Throws ParameterError for fewer than 1000 samples.
HypervolumeEstimate hypervolume_mc(const PointSet& points, std::span<const double> ref,
                                   std::size_t n_samples, std::uint64_t seed);

}  // namespace triset
