#pragma once

#include <span>

namespace triset::bench {

enum class RankSumMethod {
    /// Exact for combined sample size <= 20, normal approximation above.
    Auto,
    Exact,
    /// Normal approximation with tie and continuity correction.
    Normal,
};

inline constexpr std::size_t kExactRankSumLimit = 20;

struct RankSumResult {
    /// Sum of the (mid)ranks of xs in the pooled sample.
    double rank_sum = 0.0;
    /// Standardized statistic (0 for the exact method and for identical samples).
    double z = 0.0;
    double p_value = 1.0;
    bool exact = false;
    bool reject = false;
    /// +1 if xs tends to be larger than ys, -1 if smaller, 0 if balanced.
    int direction = 0;
};

/// Two-sided Wilcoxon rank-sum test. Samples may be of any nonzero size; when
/// every pooled value is equal the result is p = 1 without rejection.
/// Throws EmptySetError for an empty sample.
RankSumResult wilcoxon_rank_sum(std::span<const double> xs, std::span<const double> ys,
                                RankSumMethod method = RankSumMethod::Auto, double alpha = 0.05);

}  // namespace triset::bench
