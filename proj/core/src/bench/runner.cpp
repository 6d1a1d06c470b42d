#include "triset/bench/runner.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "triset/archive.hpp"
#include "triset/bench/summary.hpp"
#include "triset/dominance.hpp"
#include "triset/error.hpp"
#include "triset/moead.hpp"
#include "triset/random.hpp"
#include "triset/solution_csv.hpp"

namespace triset::bench {

namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kHvSeedTag = 0x68762d6d63ULL;

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
}

std::ofstream open_output(const fs::path& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode | std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

std::string timing_line(const RunTask& task, const TaskOutput& output) {
    std::ostringstream line;
    line << task.problem << ',' << task.m << ',' << scalarizer_name(task.algorithm) << ',' << task.population << ','
         << task.seed << ',' << output.wall_seconds << '\n';
    return line.str();
}

}  // namespace

std::size_t workers_from_env() {
    if (const char* raw = std::getenv(kWorkersEnv); raw != nullptr && *raw != '\0') {
        std::string_view text(raw);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
            throw ConfigError(std::string(kWorkersEnv) + " must be a positive integer, got '" + raw + "'");
        }
        return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<RunTask> expand_plan(const ExperimentPlan& plan) {
    std::vector<RunTask> tasks;
    const auto seeds = seeds_for(plan);
    for (const auto& problem : plan.problems) {
        for (int m : plan.objectives) {
            const std::string name = make_problem(problem, m).name();
            for (const auto& algorithm : plan.algorithms) {
                for (std::size_t pop : populations_for(plan, m)) {
                    for (std::uint64_t seed : seeds) tasks.push_back({name, m, algorithm, pop, seed});
                }
            }
        }
    }
    return tasks;
}

double normalized_hv(const PointSet& normalized_points, std::size_t samples, std::uint64_t seed) {
    if (normalized_points.empty()) return 0.0;
    const auto m = static_cast<int>(normalized_points.front().size());
    const ObjectiveVector ref = default_hv_reference(m);
    if (m <= kMaxExactGreedyHvObjectives) return hypervolume_exact(normalized_points, ref);
    return hypervolume_mc(normalized_points, ref, samples, seed).value;
}

TaskOutput run_task(const ExperimentPlan& plan, const RunTask& task) {
    const auto started = std::chrono::steady_clock::now();
    const ProblemSpec problem = make_problem(task.problem, task.m);
    const NormalizationBounds bounds = analytic_bounds(problem);

    MoeadConfig config;
    config.population_size = task.population;
    config.neighborhood_size = default_neighborhood_size(task.population);
    config.scalarizer = task.algorithm;
    config.max_evaluations = budget_for(plan, task.m, task.population);
    config.seed = task.seed;

    const auto sizes = archives_for(plan, task.m);
    std::vector<ScalarizingArchive> archives;
    archives.reserve(sizes.size());
    for (std::size_t size : sizes) archives.push_back(ScalarizingArchive::with_size(task.m, size, task.algorithm));
    std::vector<SolutionSink*> sinks;
    for (auto& a : archives) sinks.push_back(&a);

    const MoeadState state = run_moead(config, problem, sinks);
    const PointSet population = normalize_all(objectives_of(state.population), bounds);
    const std::uint64_t hv_seed = mix_seed(task.seed, kHvSeedTag);
    const double hv_population = normalized_hv(population, plan.hv_samples, hv_seed);
    const ObjectiveVector ref = default_hv_reference(task.m);

    TaskOutput output;
    for (std::size_t a = 0; a < archives.size(); ++a) {
        const PointSet candidates = normalize_all(objectives_of(extract_candidates(archives[a])), bounds);

        RunRecord r;
        r.problem = task.problem;
        r.m = task.m;
        r.algorithm = std::string(scalarizer_name(task.algorithm));
        r.population = task.population;
        r.archive = sizes[a];
        r.seed = task.seed;
        r.evaluations = state.evals_used;
        r.hv_population = hv_population;
        r.loss_population = expected_loss(population, candidates);
        r.hv_archive = normalized_hv(candidates, plan.hv_samples, hv_seed);
        r.candidates = candidates.size();
        for (SelectionMethod method : plan.methods) {
            for (std::size_t k : plan.subset_sizes) {
                if (!selects_on(plan, sizes[a], k)) continue;
                SubsetRequest request;
                request.candidates = candidates;
                // An archive can hold fewer distinct non-dominated members than
                // slots; then the whole candidate set is the subset.
                request.k = std::min(k, candidates.size());
                request.method = method;
                request.hv_reference = ref;
                request.seed = task.seed;
                const SubsetResult chosen = select_subset(request);
                const PointSet subset = pick(candidates, chosen.indices);
                r.selections.push_back({method, k, normalized_hv(subset, plan.hv_samples, hv_seed),
                                        expected_loss(subset, candidates)});
            }
        }
        output.records.push_back(std::move(r));
        if (plan.save_archives) output.archives.push_back({sizes[a], archives[a].slots()});
    }
    output.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    for (auto& r : output.records) r.wall_seconds = output.wall_seconds;
    return output;
}

std::string archive_file_name(const RunRecord& record) {
    return record.problem + "_m" + std::to_string(record.m) + "_" + record.algorithm + "_p" +
           std::to_string(record.population) + "_a" + std::to_string(record.archive) + "_s" +
           std::to_string(record.seed) + ".csv";
}

std::vector<RunRecord> run_matrix(const ExperimentPlan& plan, const MatrixOptions& options) {
    validate_plan(plan);
    auto tasks = expand_plan(plan);

    const fs::path dir = plan.out_dir;
    ensure_directory(dir);
    if (plan.save_archives) ensure_directory(dir / "archives");
    open_output(dir / "plan.json") << plan_to_json(plan);
    std::ofstream partial = open_output(dir / "records.partial.csv");
    std::ofstream timings = open_output(dir / "timings.csv");
    partial << records_header() << '\n' << std::flush;
    timings << "problem,m,algorithm,pop,seed,seconds\n";

    // Largest populations first so that long runs do not end up last.
    std::vector<std::size_t> order(tasks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return tasks[a].population > tasks[b].population; });

    std::vector<RunRecord> records;
    std::mutex writer;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::size_t finished = 0;

    auto worker = [&] {
        while (!failed) {
            const std::size_t slot = next.fetch_add(1);
            if (slot >= order.size()) return;
            const RunTask& task = tasks[order[slot]];
            try {
                TaskOutput output = run_task(plan, task);
                for (const auto& snap : output.archives) {
                    SolutionSetFile file;
                    file.problem = task.problem;
                    file.m = task.m;
                    file.num_variables = make_problem(task.problem, task.m).num_variables;
                    file.kind = "scalarizing";
                    file.rows = snap.slots;
                    RunRecord name_probe = output.records.front();
                    name_probe.archive = snap.archive;
                    write_solution_csv(dir / "archives" / archive_file_name(name_probe), file);
                }
                std::lock_guard lock(writer);
                for (const auto& r : output.records) partial << format_record(r);
                partial << std::flush;
                timings << timing_line(task, output) << std::flush;
                if (!partial || !timings) throw IoError("error writing to " + dir.string());
                records.insert(records.end(), output.records.begin(), output.records.end());
                ++finished;
                if (options.log) {
                    std::ostringstream msg;
                    msg << '[' << finished << '/' << tasks.size() << "] " << task.problem << " m=" << task.m << ' '
                        << scalarizer_name(task.algorithm) << " pop=" << task.population << " seed=" << task.seed
                        << " (" << output.wall_seconds << " s)";
                    options.log(msg.str());
                }
            } catch (...) {
                std::lock_guard lock(writer);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };

    const std::size_t workers = std::min(options.workers ? options.workers : workers_from_env(), tasks.size());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    sort_records(records);
    write_records_csv(dir / "records.csv", records);
    const Summary summary = summarize(records);
    write_summary_csv(dir / "summary.csv", summary);
    write_significance_csv(dir / "significance.csv", summary);
    return records;
}

}  // namespace triset::bench
