#include "triset/bench/ranksum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "triset/error.hpp"

namespace triset::bench {

namespace {

struct Ranked {
    /// Doubled midranks of the pooled sample (integers), xs first.
    std::vector<long> doubled;
    /// Sum over tie groups of t^3 - t.
    double tie_term = 0.0;
};

Ranked rank_pooled(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size() + ys.size();
    std::vector<double> pooled(xs.begin(), xs.end());
    pooled.insert(pooled.end(), ys.begin(), ys.end());
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });

    Ranked r;
    r.doubled.assign(n, 0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        // Ranks i+1 .. j+1 share the midrank (i + j + 2) / 2.
        const long doubled_mid = static_cast<long>(i + j + 2);
        for (std::size_t t = i; t <= j; ++t) r.doubled[order[t]] = doubled_mid;
        const double t = static_cast<double>(j - i + 1);
        r.tie_term += t * t * t - t;
        i = j + 1;
    }
    return r;
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

RankSumResult wilcoxon_rank_sum(std::span<const double> xs, std::span<const double> ys, RankSumMethod method,
                                double alpha) {
    if (xs.empty() || ys.empty()) throw EmptySetError("wilcoxon_rank_sum: empty sample");
    const std::size_t n1 = xs.size();
    const std::size_t n2 = ys.size();
    const std::size_t n = n1 + n2;

    const Ranked ranked = rank_pooled(xs, ys);
    long observed = 0;
    for (std::size_t i = 0; i < n1; ++i) observed += ranked.doubled[i];
    const long doubled_mean = static_cast<long>(n1 * (n + 1));

    RankSumResult result;
    result.rank_sum = static_cast<double>(observed) / 2.0;
    result.direction = observed > doubled_mean ? 1 : (observed < doubled_mean ? -1 : 0);
    result.exact = method == RankSumMethod::Exact || (method == RankSumMethod::Auto && n <= kExactRankSumLimit);

    const double nn = static_cast<double>(n);
    const double variance = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                            ((nn + 1.0) - ranked.tie_term / (nn * (nn - 1.0)));
    if (!(variance > 0.0)) {
        result.direction = 0;
        return result;
    }

    if (result.exact) {
        // counts[j][s]: ways to choose j pooled items whose doubled ranks sum to s.
        const long max_sum = std::accumulate(ranked.doubled.begin(), ranked.doubled.end(), 0L);
        std::vector<std::vector<double>> counts(n1 + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
        counts[0][0] = 1.0;
        for (std::size_t item = 0; item < n; ++item) {
            const long r = ranked.doubled[item];
            for (std::size_t j = std::min(item + 1, n1); j >= 1; --j) {
                auto& to = counts[j];
                const auto& from = counts[j - 1];
                for (long s = max_sum; s >= r; --s) {
                    to[static_cast<std::size_t>(s)] += from[static_cast<std::size_t>(s - r)];
                }
            }
        }
        const long deviation = std::labs(observed - doubled_mean);
        double extreme = 0.0;
        double total = 0.0;
        for (long s = 0; s <= max_sum; ++s) {
            const double c = counts[n1][static_cast<std::size_t>(s)];
            total += c;
            if (std::labs(s - doubled_mean) >= deviation) extreme += c;
        }
        result.p_value = std::min(1.0, extreme / total);
    } else {
        const double mean = static_cast<double>(doubled_mean) / 2.0;
        const double corrected = std::max(0.0, std::fabs(result.rank_sum - mean) - 0.5);
        result.z = corrected / std::sqrt(variance) * (result.direction < 0 ? -1.0 : 1.0);
        result.p_value = std::min(1.0, 2.0 * normal_upper_tail(std::fabs(result.z)));
    }
    result.reject = result.p_value < alpha;
    return result;
}

}  // namespace triset::bench
