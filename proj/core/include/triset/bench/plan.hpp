#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "triset/scalarize.hpp"
#include "triset/selection.hpp"

namespace triset::bench {

/// Population and archive sizes used by default: the four lattice sizes
/// 15/91/990/5050 for m = 3 and 15/210/1001/5985 for m = 5.
/// Throws PlanError for other objective counts.
std::vector<std::size_t> default_sizes(int m);

/// Evaluation budget used by default: 50,000 for m = 3, 200,000 otherwise.
std::uint64_t default_budget(int m);

/// Everything needed to run an experiment matrix. Empty size lists mean
/// "default_sizes(m)"; an empty budget map means "default_budget(m)".
struct ExperimentPlan {
    std::vector<std::string> problems;
    std::vector<int> objectives{3};
    std::vector<Scalarizer> algorithms{Scalarizer::tchebycheff()};
    std::vector<std::size_t> populations;
    std::vector<std::size_t> archives;
    std::vector<SelectionMethod> methods{SelectionMethod::DistanceGreedy, SelectionMethod::HvGreedy};
    std::vector<std::size_t> subset_sizes{15};
    /// Selection runs only on archives of these sizes; empty means every archive
    /// at least as large as the subset.
    std::vector<std::size_t> selection_archives;
    std::map<int, std::uint64_t> budgets;
    std::vector<std::uint64_t> seeds;
    /// Scales budgets and the number of seeds; 1.0 is the full protocol.
    double budget_scale = 1.0;
    /// Monte Carlo samples for hypervolumes with more than four objectives.
    std::size_t hv_samples = 100'000;
    /// Also write every final archive as a solution CSV.
    bool save_archives = false;
    std::filesystem::path out_dir = "results";
};

/// Plan defaults: seeds 1..51.
std::vector<std::uint64_t> default_seeds();

/// Sizes, budget and seeds after defaults and budget_scale are applied.
std::vector<std::size_t> populations_for(const ExperimentPlan& plan, int m);
std::vector<std::size_t> archives_for(const ExperimentPlan& plan, int m);
std::uint64_t budget_for(const ExperimentPlan& plan, int m, std::size_t population);
std::vector<std::uint64_t> seeds_for(const ExperimentPlan& plan);
bool selects_on(const ExperimentPlan& plan, std::size_t archive, std::size_t k);

/// Throws PlanError when the plan cannot run: nothing to run, sizes that are
/// not lattice sizes, k larger than an archive it is used with, bad scale.
void validate_plan(const ExperimentPlan& plan);

/// JSON (de)serialization. Unknown keys are rejected with PlanError.
ExperimentPlan parse_plan_json(std::string_view text);
ExperimentPlan read_plan_file(const std::filesystem::path& path);
std::string plan_to_json(const ExperimentPlan& plan);

}  // namespace triset::bench
