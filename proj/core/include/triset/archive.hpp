#pragma once

#include <span>
#include <vector>

#include "triset/moead.hpp"
#include "triset/scalarize.hpp"
#include "triset/types.hpp"

namespace triset {

/// Bounded external archive holding, for each of its own lattice weights, the
/// best solution seen so far under the scalarizing function.
///
/// Comparisons use the ideal estimate passed with each offer; slots are not
/// re-scored retroactively when z improves. Replacement needs strict
/// improvement, so re-offering an archived solution is a no-op.
class ScalarizingArchive final : public SolutionSink {
public:
    ScalarizingArchive(std::vector<WeightVector> weights, Scalarizer scalarizer);

    /// Archive whose lattice has exactly `size` weights for `m` objectives.
    static ScalarizingArchive with_size(int m, std::size_t size, Scalarizer scalarizer);

    /// Assigns to every slot the best member of `initial` (ties: lowest index).
    /// Throws EmptySetError if `initial` is empty.
    void initialize(std::span<const Solution> initial, std::span<const double> z) override;

    void offer(const Solution& s, std::span<const double> z) override { update(s, z); }

    /// Replaces every slot that `s` strictly improves; returns the number replaced.
    std::size_t update(const Solution& s, std::span<const double> z);

    bool initialized() const { return !slots_.empty(); }
    std::size_t size() const { return weights_.size(); }
    const std::vector<Solution>& slots() const { return slots_; }
    const WeightSet& weight_set() const { return weights_; }

    /// Scalarizing value of slot i under z.
    double slot_value(std::size_t i, std::span<const double> z) const;

private:
    void refresh_cache(std::span<const double> z);

    WeightSet weights_;
    std::vector<Solution> slots_;
    std::vector<double> cached_values_;
    ObjectiveVector cached_z_;
};

/// Builds and initializes a scalarizing archive in one step.
ScalarizingArchive init_scalarizing_archive(std::vector<WeightVector> weights,
                                            std::span<const Solution> initial_population,
                                            std::span<const double> z, Scalarizer scalarizer);

/// Unbounded archive of mutually non-dominated, objective-distinct solutions.
class UnboundedArchive final : public SolutionSink {
public:
    void initialize(std::span<const Solution> initial, std::span<const double> z) override;
    void offer(const Solution& s, std::span<const double>) override { insert(s); }

    /// Rejects `s` if a member dominates or equals it; otherwise inserts it and
    /// evicts every member it dominates.
    bool insert(const Solution& s);

    const std::vector<Solution>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

private:
    std::vector<Solution> members_;
};

/// Records the complete stream; used to check observers in tests.
class RecordingSink final : public SolutionSink {
public:
    void initialize(std::span<const Solution> initial, std::span<const double> z) override;
    void offer(const Solution& s, std::span<const double> z) override;

    std::vector<Solution> solutions;
    std::vector<ObjectiveVector> z_snapshots;
    std::size_t initial_count = 0;
};

/// Stored solutions whose objective vectors are non-dominated and distinct
/// (first occurrence kept), in slot/member order.
std::vector<Solution> extract_candidates(const ScalarizingArchive& archive);
std::vector<Solution> extract_candidates(const UnboundedArchive& archive);
std::vector<Solution> extract_candidates(std::span<const Solution> solutions);

std::vector<ObjectiveVector> objectives_of(std::span<const Solution> solutions);

}  // namespace triset
