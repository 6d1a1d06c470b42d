#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace triset {

/// A point in m-dimensional objective space. All objectives are minimized.
using ObjectiveVector = std::vector<double>;

using DecisionVector = std::vector<double>;

/// A decision vector together with its evaluated objectives.
struct Solution {
    DecisionVector x;
    ObjectiveVector f;
    /// Sequence number of the evaluation that produced this solution.
    std::uint64_t eval_index = 0;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Affine frame mapping `ideal` to the origin and `nadir` to the all-ones point.
struct NormalizationBounds {
    ObjectiveVector ideal;
    ObjectiveVector nadir;
};

/// Throws DimensionError unless both spans have the same length.
void require_same_dimension(std::span<const double> a, std::span<const double> b);

}  // namespace triset
