#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "triset/bench/plan.hpp"
#include "triset/bench/records.hpp"
#include "triset/indicators.hpp"
#include "triset/problems.hpp"

namespace triset::bench {

/// Name of the environment variable holding the worker count.
inline constexpr const char* kWorkersEnv = "TRISET_WORKERS";

/// Worker count from TRISET_WORKERS, else the hardware concurrency (at least 1).
/// Throws ConfigError for a value that is not a positive integer.
std::size_t workers_from_env();

/// One MOEA/D run: every archive size of the plan observes its solution stream.
struct RunTask {
    std::string problem;
    int m = 3;
    Scalarizer algorithm;
    std::size_t population = 0;
    std::uint64_t seed = 0;
};

/// All runs of the plan, in a fixed order (problem, m, algorithm, pop, seed).
std::vector<RunTask> expand_plan(const ExperimentPlan& plan);

/// Final archive of one cell, raw objectives, for optional persistence.
struct ArchiveSnapshot {
    std::size_t archive = 0;
    std::vector<Solution> slots;
};

struct TaskOutput {
    /// One record per archive size, ascending.
    std::vector<RunRecord> records;
    std::vector<ArchiveSnapshot> archives;
    double wall_seconds = 0.0;
};

/// Normalized hypervolume with reference (1.1, ..., 1.1): exact for m <= 4,
/// Monte Carlo with `samples` points above that.
double normalized_hv(const PointSet& normalized_points, std::size_t samples, std::uint64_t seed);

/// Runs one task and evaluates every archive size and selection of the plan.
/// Deterministic given the task.
TaskOutput run_task(const ExperimentPlan& plan, const RunTask& task);

struct MatrixOptions {
    /// 0 means workers_from_env().
    std::size_t workers = 0;
    /// Progress messages (one per finished run); may be empty.
    std::function<void(std::string_view)> log;
};

/// Runs every task of the plan on a worker pool and writes into plan.out_dir:
///   plan.json              the plan as run
///   records.partial.csv    records appended as runs finish (scheduling order)
///   records.csv            all records sorted by plan coordinates
///   timings.csv            wall time per MOEA/D run
///   summary.csv, significance.csv
///   archives/*.csv         final archives, when plan.save_archives is set
/// Every file except records.partial.csv and timings.csv is byte-identical
/// across reruns and worker counts. Returns the sorted records.
/// Throws PlanError for an invalid plan (nothing written) and IoError when
/// the output directory cannot be written.
std::vector<RunRecord> run_matrix(const ExperimentPlan& plan, const MatrixOptions& options = {});

/// File name used for a saved archive.
std::string archive_file_name(const RunRecord& record);

}  // namespace triset::bench
