#include "triset/archive.hpp"

#include <algorithm>

#include "triset/dominance.hpp"
#include "triset/error.hpp"

namespace triset {

ScalarizingArchive::ScalarizingArchive(std::vector<WeightVector> weights, Scalarizer scalarizer)
    : weights_(std::move(weights), scalarizer) {}

ScalarizingArchive ScalarizingArchive::with_size(int m, std::size_t size, Scalarizer scalarizer) {
    return ScalarizingArchive(simplex_lattice(m, lattice_divisions_for_size(m, size)), scalarizer);
}

void ScalarizingArchive::initialize(std::span<const Solution> initial, std::span<const double> z) {
    if (initial.empty()) throw EmptySetError("scalarizing archive needs a nonempty initial population");
    require_same_dimension(z, initial.front().f);
    if (z.size() != weights_.dim()) throw DimensionError("archive weights and z differ in dimension");

    slots_.clear();
    slots_.reserve(weights_.size());
    cached_values_.assign(weights_.size(), 0.0);
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        std::size_t best = 0;
        double best_value = weights_.value(i, initial[0].f.data(), z.data());
        for (std::size_t p = 1; p < initial.size(); ++p) {
            const double v = weights_.value(i, initial[p].f.data(), z.data());
            if (v < best_value) {
                best_value = v;
                best = p;
            }
        }
        slots_.push_back(initial[best]);
        cached_values_[i] = best_value;
    }
    cached_z_.assign(z.begin(), z.end());
}

void ScalarizingArchive::refresh_cache(std::span<const double> z) {
    if (std::equal(z.begin(), z.end(), cached_z_.begin(), cached_z_.end())) return;
    cached_z_.assign(z.begin(), z.end());
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        cached_values_[i] = weights_.value(i, slots_[i].f.data(), z.data());
    }
}

std::size_t ScalarizingArchive::update(const Solution& s, std::span<const double> z) {
    if (!initialized()) throw EmptySetError("scalarizing archive used before initialization");
    require_same_dimension(s.f, cached_z_);
    require_same_dimension(z, cached_z_);
    refresh_cache(z);
    std::size_t replaced = 0;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        const double v = weights_.value(i, s.f.data(), z.data());
        if (v < cached_values_[i]) {
            slots_[i] = s;
            cached_values_[i] = v;
            ++replaced;
        }
    }
    return replaced;
}

double ScalarizingArchive::slot_value(std::size_t i, std::span<const double> z) const {
    require_same_dimension(z, slots_.at(i).f);
    return weights_.value(i, slots_[i].f.data(), z.data());
}

ScalarizingArchive init_scalarizing_archive(std::vector<WeightVector> weights,
                                            std::span<const Solution> initial_population,
                                            std::span<const double> z, Scalarizer scalarizer) {
    ScalarizingArchive archive(std::move(weights), scalarizer);
    archive.initialize(initial_population, z);
    return archive;
}

void UnboundedArchive::initialize(std::span<const Solution> initial, std::span<const double>) {
    for (const auto& s : initial) insert(s);
}

bool UnboundedArchive::insert(const Solution& s) {
    for (const auto& member : members_) {
        if (weakly_dominates(member.f, s.f)) return false;
    }
    std::erase_if(members_, [&](const Solution& member) { return dominates(s.f, member.f); });
    members_.push_back(s);
    return true;
}

void RecordingSink::initialize(std::span<const Solution> initial, std::span<const double> z) {
    solutions.assign(initial.begin(), initial.end());
    initial_count = initial.size();
    z_snapshots.assign(initial.size(), ObjectiveVector(z.begin(), z.end()));
}

void RecordingSink::offer(const Solution& s, std::span<const double> z) {
    solutions.push_back(s);
    z_snapshots.emplace_back(z.begin(), z.end());
}

std::vector<Solution> extract_candidates(std::span<const Solution> solutions) {
    if (solutions.empty()) return {};
    std::vector<ObjectiveVector> fs;
    fs.reserve(solutions.size());
    for (const auto& s : solutions) fs.push_back(s.f);
    std::vector<Solution> out;
    for (std::size_t idx : nondominated_indices(fs)) out.push_back(solutions[idx]);
    return out;
}

std::vector<Solution> extract_candidates(const ScalarizingArchive& archive) {
    return extract_candidates(std::span<const Solution>(archive.slots()));
}

std::vector<Solution> extract_candidates(const UnboundedArchive& archive) {
    return archive.members();
}

std::vector<ObjectiveVector> objectives_of(std::span<const Solution> solutions) {
    std::vector<ObjectiveVector> out;
    out.reserve(solutions.size());
    for (const auto& s : solutions) out.push_back(s.f);
    return out;
}

}  // namespace triset
