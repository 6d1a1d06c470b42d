// triset: run experiment matrices, select final solution sets and compute
// indicators from the command line.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triset/archive.hpp"
#include "triset/bench/plan.hpp"
#include "triset/bench/records.hpp"
#include "triset/bench/runner.hpp"
#include "triset/bench/summary.hpp"
#include "triset/dominance.hpp"
#include "triset/error.hpp"
#include "triset/indicators.hpp"
#include "triset/problems.hpp"
#include "triset/selection.hpp"
#include "triset/solution_csv.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;
namespace bench = triset::bench;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <typename T>
T to_number(const std::string& text) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw triset::ParameterError("not a number: '" + text + "'");
    }
    return value;
}

std::vector<std::size_t> size_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& item : split_list(text)) out.push_back(to_number<std::size_t>(item));
    return out;
}

// "1-51" or "1,2,7" (ranges and single values may be mixed).
std::vector<std::uint64_t> seed_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split_list(text)) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            out.push_back(to_number<std::uint64_t>(item));
            continue;
        }
        const auto lo = to_number<std::uint64_t>(item.substr(0, dash));
        const auto hi = to_number<std::uint64_t>(item.substr(dash + 1));
        for (auto s = lo; s <= hi; ++s) out.push_back(s);
    }
    return out;
}

std::vector<double> real_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) out.push_back(triset::parse_real(item));
    return out;
}

// Normalization bounds for a set file: analytic bounds of its problem, or
// none when the file names no known problem.
std::optional<triset::NormalizationBounds> bounds_for(const triset::SolutionSetFile& file) {
    if (file.problem == "-" || file.problem.empty()) return std::nullopt;
    return triset::analytic_bounds(triset::make_problem(file.problem, file.m));
}

triset::PointSet objectives_in_space(const triset::SolutionSetFile& file, bool normalize) {
    auto points = triset::objectives_of(file.rows);
    if (!normalize) return points;
    const auto bounds = bounds_for(file);
    if (!bounds) throw triset::InputError("set file names no problem; pass --raw to skip normalization");
    return triset::normalize_all(points, *bounds);
}

struct RunArgs {
    std::string plan_file;
    std::string problems, objectives, algos, pops, archives, methods, k, seeds, out;
    std::optional<double> budget_scale;
    std::optional<std::uint64_t> budget;
    bool save_archives = false;
};

int cmd_run(const RunArgs& a) {
    bench::ExperimentPlan plan;
    if (!a.plan_file.empty()) {
        plan = bench::read_plan_file(a.plan_file);
    } else {
        plan.seeds = bench::default_seeds();
    }
    if (!a.problems.empty()) plan.problems = split_list(a.problems);
    if (!a.objectives.empty()) {
        plan.objectives.clear();
        for (const auto& m : split_list(a.objectives)) plan.objectives.push_back(to_number<int>(m));
    }
    if (!a.algos.empty()) {
        plan.algorithms.clear();
        for (const auto& name : split_list(a.algos)) plan.algorithms.push_back(triset::parse_scalarizer(name));
    }
    if (!a.pops.empty()) plan.populations = size_list(a.pops);
    if (!a.archives.empty()) plan.archives = size_list(a.archives);
    if (!a.methods.empty()) {
        plan.methods.clear();
        for (const auto& name : split_list(a.methods)) plan.methods.push_back(triset::parse_selection_method(name));
    }
    if (!a.k.empty()) plan.subset_sizes = size_list(a.k);
    if (!a.seeds.empty()) plan.seeds = seed_list(a.seeds);
    if (a.budget_scale) plan.budget_scale = *a.budget_scale;
    if (a.budget) {
        for (int m : plan.objectives) plan.budgets[m] = *a.budget;
    }
    if (a.save_archives) plan.save_archives = true;
    if (!a.out.empty()) plan.out_dir = a.out;

    bench::MatrixOptions options;
    options.log = [](std::string_view msg) { std::cerr << msg << '\n'; };
    const auto records = bench::run_matrix(plan, options);
    std::cerr << records.size() << " records written to " << plan.out_dir.string() << '\n';
    return 0;
}

struct SelectArgs {
    std::string in, out, method = "hv", ref;
    std::size_t k = 15;
    std::uint64_t seed = 1;
    std::size_t samples = triset::kDefaultGreedyHvSamples;
    bool raw = false;
};

int cmd_select(const SelectArgs& a) {
    const auto file = triset::read_solution_csv(fs::path(a.in));
    if (file.rows.empty()) throw triset::EmptySetError("no solutions in " + a.in);
    const auto space = objectives_in_space(file, !a.raw);
    // S = distinct non-dominated rows; indices below refer to rows of the input file.
    const auto keep = triset::nondominated_indices(space);

    triset::SubsetRequest request;
    for (std::size_t idx : keep) request.candidates.push_back(space[idx]);
    request.k = a.k;
    request.method = triset::parse_selection_method(a.method);
    request.hv_reference = a.ref.empty() ? triset::default_hv_reference(file.m) : real_list(a.ref);
    request.seed = a.seed;
    request.mc_samples = a.samples;
    const auto result = triset::select_subset(request);

    triset::SolutionSetFile subset = file;
    subset.kind = "subset";
    subset.rows.clear();
    std::vector<std::size_t> rows;
    for (std::size_t i : result.indices) {
        rows.push_back(keep[i]);
        subset.rows.push_back(file.rows[keep[i]]);
    }
    triset::write_solution_csv(fs::path(a.out), subset);

    json ties = json::array();
    for (const auto& t : result.ties) {
        json tied = json::array();
        for (std::size_t i : t.tied) tied.push_back(keep[i]);
        ties.push_back({{"step", t.step}, {"chosen", keep[t.chosen]}, {"tied", tied}});
    }
    json sidecar = {
        {"input", a.in},
        {"method", std::string(triset::selection_method_name(request.method))},
        {"k", request.k},
        {"seed", request.seed},
        {"hv_reference", request.hv_reference},
        {"normalized", !a.raw},
        {"candidates", request.candidates.size()},
        {"rows", rows},
        {"score", result.score},
        {"exact", result.exact},
        {"tie_events", ties},
    };
    if (request.method == triset::SelectionMethod::DistanceGreedy) sidecar["seed_objective"] = result.seed_objective;
    std::ofstream side(a.out + ".json");
    if (!side) throw triset::IoError("cannot write " + a.out + ".json");
    side << sidecar.dump(2) << '\n';
    return 0;
}

struct IndicateArgs {
    std::string in, reference, ref;
    std::size_t pareto_samples = 0;
    std::size_t mc_samples = 0;
    std::uint64_t seed = 1;
    bool raw = false;
};

int cmd_indicate(const IndicateArgs& a) {
    const auto file = triset::read_solution_csv(fs::path(a.in));
    const auto space = objectives_in_space(file, !a.raw);
    const auto hv_ref = a.ref.empty() ? triset::default_hv_reference(file.m) : real_list(a.ref);

    json out = {{"input", a.in}, {"size", space.size()}, {"normalized", !a.raw}, {"hv_reference", hv_ref}};
    out["hv"] = triset::hypervolume_exact(space, hv_ref);
    if (a.mc_samples > 0) {
        const auto est = triset::hypervolume_mc(space, hv_ref, a.mc_samples, a.seed);
        out["hv_mc"] = {{"value", est.value}, {"standard_error", est.standard_error}, {"samples", a.mc_samples}};
    }

    std::optional<triset::PointSet> reference;
    if (!a.reference.empty()) {
        reference = objectives_in_space(triset::read_solution_csv(fs::path(a.reference)), !a.raw);
        out["reference"] = a.reference;
    } else if (a.pareto_samples > 0) {
        const auto problem = triset::make_problem(file.problem, file.m);
        auto front = triset::sample_pareto_reference(problem, a.pareto_samples, a.seed);
        reference = a.raw ? front : triset::normalize_all(front, triset::analytic_bounds(problem));
        out["reference"] = "pareto-sample";
    }
    if (reference) {
        out["igd"] = triset::igd(space, *reference);
        out["igd_plus"] = triset::igd_plus(space, *reference);
        out["expected_loss"] = triset::expected_loss(space, *reference);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_summarize(const std::string& records_path, const std::string& out_dir) {
    const auto summary = bench::summarize(bench::read_records_csv(fs::path(records_path)));
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    bench::write_summary_csv(fs::path(out_dir) / "summary.csv", summary);
    bench::write_significance_csv(fs::path(out_dir) / "significance.csv", summary);
    std::cerr << summary.rows.size() << " summary rows, " << summary.significance.size() << " comparisons\n";
    return 0;
}

int cmd_plotdata(const std::string& records_path, const std::string& out_dir) {
    const auto summary = bench::summarize(bench::read_records_csv(fs::path(records_path)));
    const auto report = bench::emit_plot_data(summary, out_dir);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
    std::cerr << report.files.size() << " data files written\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-set EMO framework: MOEA/D, scalarizing archives and final subset selection"};
    app.require_subcommand(1);

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "Run an experiment matrix");
    run_cmd->add_option("plan", run.plan_file, "Plan file (JSON)")->check(CLI::ExistingFile);
    run_cmd->add_option("--problems", run.problems, "Comma-separated problem names");
    run_cmd->add_option("-m,--objectives", run.objectives, "Comma-separated objective counts");
    run_cmd->add_option("--algos", run.algos, "TCH and/or PBI");
    run_cmd->add_option("--pops", run.pops, "Population sizes");
    run_cmd->add_option("--archives", run.archives, "Archive sizes");
    run_cmd->add_option("--methods", run.methods, "Selection methods (distance, hv, loss)");
    run_cmd->add_option("--k", run.k, "Subset sizes");
    run_cmd->add_option("--seeds", run.seeds, "Seeds, e.g. 1-51 or 1,2,3");
    run_cmd->add_option("--budget", run.budget, "Evaluations per run (all m)");
    run_cmd->add_option("--budget-scale", run.budget_scale, "Scale for budgets and seed counts");
    run_cmd->add_flag("--save-archives", run.save_archives, "Write final archives as CSV");
    run_cmd->add_option("--out", run.out, "Output directory");

    SelectArgs sel;
    auto* sel_cmd = app.add_subcommand("select", "Select a final solution set from an archive CSV");
    sel_cmd->add_option("input", sel.in, "Archive CSV")->required()->check(CLI::ExistingFile);
    sel_cmd->add_option("-o,--out", sel.out, "Subset CSV (sidecar: <out>.json)")->required();
    sel_cmd->add_option("--method", sel.method, "distance, hv or loss")->capture_default_str();
    sel_cmd->add_option("--k", sel.k, "Subset size")->capture_default_str();
    sel_cmd->add_option("--seed", sel.seed, "Seed")->capture_default_str();
    sel_cmd->add_option("--ref", sel.ref, "HV reference point, comma-separated (default 1.1,...)");
    sel_cmd->add_option("--samples", sel.samples, "Sampled HV contributions for m > 4")->capture_default_str();
    sel_cmd->add_flag("--raw", sel.raw, "Use raw objective values instead of normalized ones");

    IndicateArgs ind;
    auto* ind_cmd = app.add_subcommand("indicate", "Indicator values of a solution-set CSV");
    ind_cmd->add_option("input", ind.in, "Set CSV")->required()->check(CLI::ExistingFile);
    ind_cmd->add_option("--reference", ind.reference, "Reference set CSV for IGD/IGD+")->check(CLI::ExistingFile);
    ind_cmd->add_option("--pareto-samples", ind.pareto_samples, "Sample a DTLZ front as the reference set");
    ind_cmd->add_option("--ref", ind.ref, "HV reference point, comma-separated (default 1.1,...)");
    ind_cmd->add_option("--mc-samples", ind.mc_samples, "Also estimate HV by Monte Carlo");
    ind_cmd->add_option("--seed", ind.seed, "Seed for sampling")->capture_default_str();
    ind_cmd->add_flag("--raw", ind.raw, "Use raw objective values instead of normalized ones");

    std::string records_path, out_dir = ".";
    auto* sum_cmd = app.add_subcommand("summarize", "Summary and significance tables from records.csv");
    sum_cmd->add_option("records", records_path, "records.csv")->required()->check(CLI::ExistingFile);
    sum_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    auto* plot_cmd = app.add_subcommand("plotdata", "Plot data files from records.csv");
    plot_cmd->add_option("records", records_path, "records.csv")->required()->check(CLI::ExistingFile);
    plot_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return cmd_run(run);
        if (*sel_cmd) return cmd_select(sel);
        if (*ind_cmd) return cmd_indicate(ind);
        if (*sum_cmd) return cmd_summarize(records_path, out_dir);
        if (*plot_cmd) return cmd_plotdata(records_path, out_dir);
    } catch (const triset::PlanError& e) {
        std::cerr << "plan error: " << e.what() << '\n';
        return 2;
    } catch (const triset::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
