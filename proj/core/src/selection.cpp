#include "triset/selection.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "triset/dominance.hpp"
#include "triset/error.hpp"
#include "triset/random.hpp"

namespace triset {

namespace {

std::size_t validate(const SubsetRequest& request) {
    const auto& s = request.candidates;
    if (s.empty()) throw EmptySetError("subset selection: empty candidate set");
    if (request.k < 1 || request.k > s.size()) {
        throw ParameterError("subset size k=" + std::to_string(request.k) + " outside [1, " +
                             std::to_string(s.size()) + "]");
    }
    const std::size_t m = s.front().size();
    for (const auto& p : s) {
        if (p.size() != m) throw DimensionError("subset selection: mixed dimensions");
    }
    return m;
}

double euclidean(const ObjectiveVector& a, const ObjectiveVector& b) {
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sq += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(sq);
}

/// Tracks the best value of one greedy step over candidates visited in
/// canonical order; the first strictly best candidate wins.
class StepArgBest {
public:
    StepArgBest(bool maximize, std::size_t step) : maximize_(maximize), step_(step) {}

    void consider(std::size_t idx, double value) {
        if (!found_ || (maximize_ ? value > best_ : value < best_)) {
            found_ = true;
            best_ = value;
            chosen_ = idx;
            tied_.assign(1, idx);
        } else if (value == best_) {
            tied_.push_back(idx);
        }
    }

    std::size_t chosen() const { return chosen_; }
    double best() const { return best_; }

    void record_tie(std::vector<TieEvent>& ties) const {
        if (tied_.size() > 1) ties.push_back({step_, chosen_, tied_});
    }

private:
    bool maximize_;
    std::size_t step_;
    bool found_ = false;
    double best_ = 0.0;
    std::size_t chosen_ = 0;
    std::vector<std::size_t> tied_;
};

ObjectiveVector reference_for(const SubsetRequest& request, std::size_t m) {
    if (request.hv_reference.empty()) return ObjectiveVector(m, 1.1);
    if (request.hv_reference.size() != m) throw DimensionError("HV reference dimension mismatch");
    return request.hv_reference;
}

/// Greedy HV with contributions estimated from a fixed set of uniform samples
/// in [min(S), ref]; each candidate keeps a bitset of the samples it covers.
SubsetResult hv_greedy_sampled(const SubsetRequest& request, const std::vector<std::size_t>& order,
                               const ObjectiveVector& ref) {
    const auto& s = request.candidates;
    const std::size_t m = ref.size();
    const std::size_t n = s.size();
    const std::size_t samples = std::max<std::size_t>(request.mc_samples, 1000);

    std::vector<double> lo(ref);
    for (const auto& p : s) {
        for (std::size_t k = 0; k < m; ++k) lo[k] = std::min(lo[k], p[k]);
    }
    double box = 1.0;
    for (std::size_t k = 0; k < m; ++k) box *= std::max(0.0, ref[k] - lo[k]);

    const std::size_t words = (samples + 63) / 64;
    std::vector<std::uint64_t> covers(n * words, 0);
    Rng rng(mix_seed(request.seed, 0x48565f67726565ULL));
    std::vector<double> point(m);
    for (std::size_t t = 0; t < samples; ++t) {
        for (std::size_t k = 0; k < m; ++k) point[k] = rng.uniform(lo[k], ref[k]);
        for (std::size_t c = 0; c < n; ++c) {
            const auto& p = s[c];
            bool dominated = true;
            for (std::size_t k = 0; k < m; ++k) {
                if (p[k] > point[k]) {
                    dominated = false;
                    break;
                }
            }
            if (dominated) covers[c * words + t / 64] |= std::uint64_t{1} << (t % 64);
        }
    }

    SubsetResult result;
    result.exact = false;
    std::vector<std::uint64_t> covered(words, 0);
    std::vector<bool> chosen(n, false);
    std::size_t covered_count = 0;
    for (std::size_t step = 0; step < request.k; ++step) {
        StepArgBest best(true, step);
        for (std::size_t idx : order) {
            if (chosen[idx]) continue;
            std::size_t gain = 0;
            const std::uint64_t* row = covers.data() + idx * words;
            for (std::size_t w = 0; w < words; ++w) gain += std::popcount(row[w] & ~covered[w]);
            best.consider(idx, static_cast<double>(gain));
        }
        best.record_tie(result.ties);
        const std::size_t pickd = best.chosen();
        chosen[pickd] = true;
        result.indices.push_back(pickd);
        covered_count += static_cast<std::size_t>(best.best());
        const std::uint64_t* row = covers.data() + pickd * words;
        for (std::size_t w = 0; w < words; ++w) covered[w] |= row[w];
    }
    result.score = box * static_cast<double>(covered_count) / static_cast<double>(samples);
    return result;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap) return cap + 1;
    }
    return result;
}

}  // namespace

SelectionMethod parse_selection_method(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (key == "distance" || key == "distance-greedy" || key == "dist") return SelectionMethod::DistanceGreedy;
    if (key == "hv" || key == "hv-greedy" || key == "hypervolume") return SelectionMethod::HvGreedy;
    if (key == "loss" || key == "loss-greedy" || key == "igd+" || key == "igdplus") {
        return SelectionMethod::LossGreedy;
    }
    throw ParameterError("unknown selection method: " + std::string(name));
}

std::string_view selection_method_name(SelectionMethod method) {
    switch (method) {
        case SelectionMethod::DistanceGreedy: return "distance";
        case SelectionMethod::HvGreedy: return "hv";
        case SelectionMethod::LossGreedy: return "loss";
    }
    return "?";
}

PointSet pick(const PointSet& points, const std::vector<std::size_t>& indices) {
    PointSet out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(points.at(i));
    return out;
}

SubsetResult distance_greedy(const SubsetRequest& request) {
    const std::size_t m = validate(request);
    const auto& s = request.candidates;
    const auto order = canonical_order(s);

    SubsetResult result;
    std::vector<std::size_t> extremes(m);
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t best = order.front();
        for (std::size_t idx : order) {
            if (s[idx][j] < s[best][j]) best = idx;
        }
        extremes[j] = best;
    }
    Rng rng(request.seed);
    result.seed_objective = rng.below(m);
    const std::size_t first = extremes[result.seed_objective];

    std::vector<bool> chosen(s.size(), false);
    std::vector<double> nearest(s.size());
    chosen[first] = true;
    result.indices.push_back(first);
    for (std::size_t c = 0; c < s.size(); ++c) nearest[c] = euclidean(s[c], s[first]);

    for (std::size_t step = 1; step < request.k; ++step) {
        StepArgBest best(true, step);
        for (std::size_t idx : order) {
            if (!chosen[idx]) best.consider(idx, nearest[idx]);
        }
        best.record_tie(result.ties);
        const std::size_t next = best.chosen();
        chosen[next] = true;
        result.indices.push_back(next);
        result.score = best.best();
        for (std::size_t c = 0; c < s.size(); ++c) {
            nearest[c] = std::min(nearest[c], euclidean(s[c], s[next]));
        }
    }
    return result;
}

SubsetResult hv_greedy(const SubsetRequest& request) {
    const std::size_t m = validate(request);
    const auto& s = request.candidates;
    const auto order = canonical_order(s);
    const ObjectiveVector ref = reference_for(request, m);
    if (static_cast<int>(m) > kMaxExactGreedyHvObjectives) return hv_greedy_sampled(request, order, ref);

    SubsetResult result;
    std::vector<bool> chosen(s.size(), false);
    PointSet selected;
    for (std::size_t step = 0; step < request.k; ++step) {
        StepArgBest best(true, step);
        for (std::size_t idx : order) {
            if (!chosen[idx]) best.consider(idx, hypervolume_contribution(s[idx], selected, ref));
        }
        best.record_tie(result.ties);
        const std::size_t next = best.chosen();
        chosen[next] = true;
        result.indices.push_back(next);
        selected.push_back(s[next]);
    }
    result.score = hypervolume_exact(selected, ref);
    return result;
}

SubsetResult loss_greedy(const SubsetRequest& request) {
    validate(request);
    const auto& s = request.candidates;
    const auto order = canonical_order(s);
    const std::size_t n = s.size();

    SubsetResult result;
    std::vector<bool> chosen(n, false);
    std::vector<double> current(n, std::numeric_limits<double>::infinity());
    for (std::size_t step = 0; step < request.k; ++step) {
        StepArgBest best(false, step);
        double bound = std::numeric_limits<double>::infinity();
        for (std::size_t idx : order) {
            if (chosen[idx]) continue;
            double total = 0.0;
            for (std::size_t t = 0; t < n && total <= bound; ++t) {
                if (current[t] == 0.0) continue;
                total += std::min(current[t], loss_pair(s[idx], s[t]));
            }
            // Early exit leaves `total` above the bound, so it can neither win nor tie.
            best.consider(idx, total);
            bound = std::min(bound, total);
        }
        best.record_tie(result.ties);
        const std::size_t next = best.chosen();
        chosen[next] = true;
        result.indices.push_back(next);
        for (std::size_t t = 0; t < n; ++t) current[t] = std::min(current[t], loss_pair(s[next], s[t]));
    }
    result.score = expected_loss(pick(s, result.indices), s);
    return result;
}

SubsetResult select_subset(const SubsetRequest& request) {
    switch (request.method) {
        case SelectionMethod::DistanceGreedy: return distance_greedy(request);
        case SelectionMethod::HvGreedy: return hv_greedy(request);
        case SelectionMethod::LossGreedy: return loss_greedy(request);
    }
    throw ParameterError("unknown selection method");
}

OracleResult exact_subset_oracle(const PointSet& candidates, std::size_t k,
                                 OracleCriterion criterion, std::span<const double> hv_reference) {
    const std::size_t n = candidates.size();
    if (n == 0) throw EmptySetError("exact_subset_oracle: empty candidate set");
    if (k < 1 || k > n) throw ParameterError("exact_subset_oracle: k outside [1, |S|]");
    if (binomial_capped(n, k, kOracleSubsetLimit) > kOracleSubsetLimit) {
        throw SizeError("exact_subset_oracle: more than 10^6 subsets");
    }
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;

    OracleResult best;
    bool found = false;
    while (true) {
        const PointSet subset = pick(candidates, combo);
        const double score = criterion == OracleCriterion::MaxHv ? hypervolume_exact(subset, hv_reference)
                                                                 : expected_loss(subset, candidates);
        const bool better = criterion == OracleCriterion::MaxHv ? score > best.score : score < best.score;
        if (!found || better) {
            found = true;
            best.score = score;
            best.indices = combo;
        }
        // Advance to the next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++combo[i - 1];
        for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    return best;
}

}  // namespace triset
