// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.
//
// Usage: triset_acceptance [work-dir]
// TRISET_ACCEPTANCE_REUSE=1 loads records.csv from an earlier run of the same
// plan instead of rerunning the experiment matrices.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/test_support.hpp"
#include "triset/bench/plan.hpp"
#include "triset/bench/ranksum.hpp"
#include "triset/bench/records.hpp"
#include "triset/bench/runner.hpp"
#include "triset/bench/summary.hpp"
#include "triset/dominance.hpp"
#include "triset/indicators.hpp"
#include "triset/scalarize.hpp"
#include "triset/selection.hpp"

namespace fs = std::filesystem;
using namespace triset;
using namespace triset::bench;
using triset::testing::Gen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;
std::ofstream* report_file = nullptr;

void report(int number, const std::string& title, Outcome& o) {
    std::ostringstream line;
    line << "criterion " << number << " (" << title << "): " << (o.pass ? "PASS" : "FAIL") << " -"
         << o.detail.str();
    std::cout << line.str() << std::endl;
    if (report_file) *report_file << line.str() << '\n';
    if (!o.pass) ++failures;
}

std::string fmt(double v, int digits = 4) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(digits);
    s << v;
    return s.str();
}

std::string fmt_p(double p) {
    std::ostringstream s;
    s.precision(3);
    s << p;
    return s.str();
}

// ---- criterion 1 ----------------------------------------------------------

void lattice_counts() {
    Outcome o;
    const auto start = Clock::now();
    const std::vector<std::tuple<int, int, std::size_t>> table{
        {3, 4, 15}, {3, 12, 91}, {3, 43, 990}, {3, 99, 5050},
        {5, 2, 15}, {5, 6, 210}, {5, 10, 1001}, {5, 17, 5985}};
    for (const auto& [m, h, size] : table) {
        const auto got = simplex_lattice(m, h).size();
        o.require(got == size, "m=" + std::to_string(m) + " H=" + std::to_string(h) + " gave " + std::to_string(got));
        o.require(lattice_divisions_for_size(m, size) == h, "H lookup for size " + std::to_string(size));
    }
    const double t = seconds_since(start);
    o.require(t < 1.0, "runtime " + fmt(t, 2) + " s");
    o.detail << " 8 sizes exact, " << fmt(t, 3) << " s";
    report(1, "weight lattice counts", o);
}

// ---- criterion 2 ----------------------------------------------------------

void loss_identity() {
    Outcome o;
    const auto start = Clock::now();
    Gen gen(2024);
    std::size_t checked = 0;
    for (std::size_t m : {2u, 3u, 5u}) {
        for (int t = 0; t < 100; ++t) {
            const auto s = gen.simplex_points(1 + gen.index(200), m);
            const auto a = gen.points(1 + gen.index(20), m, 0.0, 1.2);
            const double el = expected_loss(a, s);
            const double ip = igd_plus(a, s);
            if (el != ip) o.require(false, "m=" + std::to_string(m) + " instance " + std::to_string(t));
            ++checked;
        }
    }
    const double t = seconds_since(start);
    o.require(t < 5.0, "runtime " + fmt(t, 2) + " s");
    o.detail << " " << checked << " instances bit-identical, " << fmt(t, 3) << " s";
    report(2, "expected loss equals IGD+", o);
}

// ---- criterion 3 ----------------------------------------------------------

void loss_cases() {
    Outcome o;
    const double dominated = loss_pair(ObjectiveVector{3, 4}, ObjectiveVector{1, 2});
    const double f1_only = loss_pair(ObjectiveVector{2, 1}, ObjectiveVector{1, 2});
    const double f2_only = loss_pair(ObjectiveVector{1, 3}, ObjectiveVector{2, 1});
    o.require(dominated == std::sqrt(8.0), "dominated case " + fmt(dominated, 17));
    o.require(f1_only == 1.0, "f1-deficit case " + fmt(f1_only, 17));
    o.require(f2_only == 2.0, "f2-deficit case " + fmt(f2_only, 17));
    o.require(loss_pair(ObjectiveVector{1, 2}, ObjectiveVector{1, 2}) == 0.0, "equal points");
    o.require(subset_loss(PointSet{{0, 2}, {2, 0}}, ObjectiveVector{1, 1}) == 1.0, "subset loss");
    o.require(std::fabs(expected_loss(PointSet{{1, 1}}, PointSet{{0, 2}, {1, 1}, {2, 0}}) - 2.0 / 3.0) < 1e-15,
              "expected loss");
    o.detail << " dominated=" << fmt(dominated, 6) << " f1-only=" << fmt(f1_only, 6) << " f2-only=" << fmt(f2_only, 6);
    report(3, "loss cases", o);
}

// ---- criterion 4 ----------------------------------------------------------

void hypervolume_checks() {
    Outcome o;
    const auto start = Clock::now();
    Gen gen(4040);
    double worst_grid = 0.0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t m = t < 25 ? 2 : 3;
        const auto pts = gen.points(1 + gen.index(10), m);
        const ObjectiveVector ref(m, 1.1);
        const double err = std::fabs(hypervolume_exact(pts, ref) - triset::testing::grid_hypervolume(pts, ref));
        worst_grid = std::max(worst_grid, err);
    }
    o.require(worst_grid <= 1e-2, "grid error " + fmt(worst_grid, 5));

    int outside = 0;
    double worst_sigma = 0.0;
    for (int t = 0; t < 100; ++t) {
        const auto pts = gen.points(1 + gen.index(20), 3);
        const ObjectiveVector ref(3, 1.1);
        const double exact = hypervolume_exact(pts, ref);
        const auto est = hypervolume_mc(pts, ref, 100000, 7000 + static_cast<std::uint64_t>(t));
        const double sigmas = est.standard_error > 0 ? std::fabs(est.value - exact) / est.standard_error : 0.0;
        worst_sigma = std::max(worst_sigma, sigmas);
        if (sigmas > 3.0) ++outside;
    }
    o.require(outside == 0, std::to_string(outside) + " MC estimates beyond 3 sigma");
    const double t = seconds_since(start);
    o.require(t < 60.0, "runtime " + fmt(t, 1) + " s");
    o.detail << " max grid error " << fmt(worst_grid, 5) << ", max MC deviation " << fmt(worst_sigma, 2)
             << " sigma, " << fmt(t, 2) << " s";
    report(4, "hypervolume correctness", o);
}

// ---- criterion 5 ----------------------------------------------------------

SubsetRequest make_request(const PointSet& s, std::size_t k, SelectionMethod method) {
    SubsetRequest r;
    r.candidates = s;
    r.k = k;
    r.method = method;
    return r;
}

void greedy_vs_oracle() {
    Outcome o;
    const auto start = Clock::now();
    Gen gen(5050);
    const double bound = 1.0 - 1.0 / std::exp(1.0);
    double worst_ratio = 1.0;
    int loss_mismatch = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = 2 + gen.index(2);
        const PointSet s = nondominated_filter(t % 2 ? gen.simplex_points(2 + gen.index(11), m)
                                                     : gen.points(4 + gen.index(9), m));
        const std::size_t k = 1 + gen.index(std::min<std::size_t>(4, s.size()));
        const ObjectiveVector ref(m, 1.1);
        const auto greedy = hv_greedy(make_request(s, k, SelectionMethod::HvGreedy));
        const auto best = exact_subset_oracle(s, k, OracleCriterion::MaxHv, ref);
        if (best.score > 0) worst_ratio = std::min(worst_ratio, greedy.score / best.score);
        if (greedy.score < bound * best.score - 1e-12) o.require(false, "hv instance " + std::to_string(t));

        for (std::size_t kk : {std::size_t{1}, s.size()}) {
            const auto lg = loss_greedy(make_request(s, kk, SelectionMethod::LossGreedy));
            const auto lo = exact_subset_oracle(s, kk, OracleCriterion::MinLoss, ref);
            if (std::fabs(lg.score - lo.score) > 1e-12) ++loss_mismatch;
        }
    }
    o.require(loss_mismatch == 0, std::to_string(loss_mismatch) + " loss mismatches");
    const double t = seconds_since(start);
    o.require(t < 120.0, "runtime " + fmt(t, 1) + " s");
    o.detail << " worst hv greedy/optimum " << fmt(worst_ratio, 4) << " (bound " << fmt(bound, 4)
             << "), loss greedy optimal at k in {1,|S|}, " << fmt(t, 2) << " s";
    report(5, "greedy versus exact oracle", o);
}

// ---- experiment matrices --------------------------------------------------

std::vector<RunRecord> run_or_reuse(const ExperimentPlan& plan) {
    const char* reuse = std::getenv("TRISET_ACCEPTANCE_REUSE");
    const fs::path records = plan.out_dir / "records.csv";
    const fs::path stored_plan = plan.out_dir / "plan.json";
    if (reuse && std::string(reuse) == "1" && fs::exists(records) && fs::exists(stored_plan)) {
        std::ifstream in(stored_plan);
        std::stringstream text;
        text << in.rdbuf();
        if (text.str() == plan_to_json(plan)) {
            std::cerr << "reusing " << records << '\n';
            return read_records_csv(records);
        }
    }
    MatrixOptions options;
    options.log = [](std::string_view line) { std::cerr << line << '\n'; };
    const auto start = Clock::now();
    auto out = run_matrix(plan, options);
    std::cerr << plan.out_dir.filename().string() << ": " << out.size() << " records in " << fmt(seconds_since(start), 1)
              << " s\n";
    return out;
}

ExperimentPlan matrix_plan(const fs::path& work, const std::string& problem, std::vector<std::size_t> pops,
                           std::vector<std::size_t> archives, bool select) {
    ExperimentPlan plan;
    plan.problems = {problem};
    plan.objectives = {3};
    plan.algorithms = {Scalarizer::tchebycheff()};
    plan.populations = std::move(pops);
    plan.archives = std::move(archives);
    if (select) {
        plan.methods = {SelectionMethod::DistanceGreedy, SelectionMethod::HvGreedy};
        plan.subset_sizes = {15};
        plan.selection_archives = {5050};
    } else {
        plan.methods.clear();
        plan.subset_sizes.clear();
    }
    plan.seeds = default_seeds();
    plan.out_dir = work / problem;
    return plan;
}

CellKey population_key(const std::string& problem, std::size_t pop) {
    return {problem, 3, "TCH", pop, 0, Quantity::Population, "-", 0};
}

CellKey archive_key(const std::string& problem, std::size_t pop, std::size_t archive) {
    return {problem, 3, "TCH", pop, archive, Quantity::Archive, "-", 0};
}

CellKey selected_key(const std::string& problem, std::size_t pop, std::size_t archive, const std::string& method) {
    return {problem, 3, "TCH", pop, archive, Quantity::Selected, method, 15};
}

double mean_of(const Summary& s, const CellKey& key) {
    const auto* row = s.find(key);
    return row ? row->hv.mean : std::nan("");
}

/// Rank-sum test that `better` has larger HV than `worse`.
bool significantly_larger(const Summary& s, const CellKey& better, const CellKey& worse, double& p) {
    const auto a = s.values(better);
    const auto b = s.values(worse);
    if (a.empty() || b.empty()) {
        p = std::nan("");
        return false;
    }
    const auto r = wilcoxon_rank_sum(a, b);
    p = r.p_value;
    return r.reject && r.direction > 0;
}

void near(Outcome& o, const std::string& what, double got, double want, double tol) {
    o.detail << " " << what << "=" << fmt(got) << " (target " << want << ")";
    o.require(std::fabs(got - want) <= tol, what + " off by " + fmt(got - want));
}

void ordered(Outcome& o, const Summary& s, const std::string& what, const CellKey& better, const CellKey& worse) {
    double p = 0.0;
    const bool ok = significantly_larger(s, better, worse, p);
    o.detail << " " << what << " p=" << fmt_p(p);
    o.require(ok, what);
}

void dtlz1_selection(const Summary& s) {
    Outcome o;
    near(o, "distance", mean_of(s, selected_key("DTLZ1", 15, 5050, "distance")), 1.0073, 0.03);
    near(o, "hv", mean_of(s, selected_key("DTLZ1", 15, 5050, "hv")), 1.0133, 0.03);
    o.detail << " pop15=" << fmt(mean_of(s, population_key("DTLZ1", 15)));
    ordered(o, s, "distance>pop15", selected_key("DTLZ1", 15, 5050, "distance"), population_key("DTLZ1", 15));
    ordered(o, s, "hv>pop15", selected_key("DTLZ1", 15, 5050, "hv"), population_key("DTLZ1", 15));
    report(6, "DTLZ1 selected subsets", o);
}

void dtlz4_selection(const Summary& s) {
    Outcome o;
    const auto small = archive_key("DTLZ4", 15, 15);
    const auto large = archive_key("DTLZ4", 5050, 15);
    const auto dist = selected_key("DTLZ4", 5050, 5050, "distance");
    const auto hv = selected_key("DTLZ4", 5050, 5050, "hv");
    near(o, "archive15@pop5050", mean_of(s, large), 0.5634, 0.08);
    near(o, "archive15@pop15", mean_of(s, small), 0.2179, 0.08);
    near(o, "distance", mean_of(s, dist), 0.6234, 0.08);
    near(o, "hv", mean_of(s, hv), 0.6588, 0.08);
    ordered(o, s, "pop5050>pop15", large, small);
    ordered(o, s, "distance>archive15", dist, large);
    ordered(o, s, "hv>distance", hv, dist);
    report(7, "DTLZ4 population size and selection", o);
}

void dtlz1_flatness(const Summary& s) {
    Outcome o;
    for (std::size_t archive : default_sizes(3)) {
        double lo = INFINITY, hi = -INFINITY;
        for (std::size_t pop : default_sizes(3)) {
            const double v = mean_of(s, archive_key("DTLZ1", pop, archive));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        o.detail << " archive" << archive << " spread=" << fmt(hi - lo);
        o.require(std::isfinite(hi - lo) && hi - lo <= 0.05, "archive " + std::to_string(archive));
    }
    report(8, "DTLZ1 archive series flat", o);
}

void dtlz3_small_population(const Summary& s) {
    Outcome o;
    for (std::size_t archive : default_sizes(3)) {
        const auto a = archive_key("DTLZ3", 15, archive);
        const auto b = archive_key("DTLZ3", 5050, archive);
        o.detail << " archive" << archive << ": " << fmt(mean_of(s, a)) << " vs " << fmt(mean_of(s, b));
        ordered(o, s, "pop15>pop5050", a, b);
    }
    report(9, "DTLZ3 small population wins", o);
}

// ---- criterion 10 ---------------------------------------------------------

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void determinism(const fs::path& work, const std::vector<RunRecord>& dtlz1) {
    Outcome o;
    const auto start = Clock::now();
    ExperimentPlan plan = matrix_plan(work, "DTLZ1", {15}, default_sizes(3), true);
    plan.seeds = {3};
    MatrixOptions options;
    options.workers = 1;
    plan.out_dir = work / "determinism_a";
    fs::remove_all(plan.out_dir);
    const auto first = run_matrix(plan, options);
    plan.out_dir = work / "determinism_b";
    fs::remove_all(plan.out_dir);
    const auto second = run_matrix(plan, options);
    const bool bytes = slurp(work / "determinism_a" / "records.csv") == slurp(work / "determinism_b" / "records.csv");
    o.require(bytes, "records.csv differs between reruns");
    o.require(first == second, "records differ");

    // The same cell inside the full matrix, run in a different pool, must agree.
    std::size_t matched = 0;
    for (const auto& r : first) {
        for (const auto& big : dtlz1) {
            if (big.seed == r.seed && big.population == r.population && big.archive == r.archive) {
                o.require(format_record(big) == format_record(r), "cell differs from matrix run");
                ++matched;
            }
        }
    }
    o.require(matched == first.size() && matched == 4, "matched " + std::to_string(matched) + " cells");
    o.detail << " " << first.size() << " records byte-identical across reruns and against the matrix, "
             << fmt(seconds_since(start), 1) << " s";
    report(10, "determinism", o);
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_out");
    fs::create_directories(work);
    std::ofstream report_out(work / "acceptance_report.txt");
    report_file = &report_out;
    const auto start = Clock::now();

    try {
        lattice_counts();
        loss_identity();
        loss_cases();
        hypervolume_checks();
        greedy_vs_oracle();

        const auto dtlz1 = run_or_reuse(matrix_plan(work, "DTLZ1", default_sizes(3), default_sizes(3), true));
        const auto dtlz4 = run_or_reuse(matrix_plan(work, "DTLZ4", {15, 5050}, {15, 5050}, true));
        const auto dtlz3 = run_or_reuse(matrix_plan(work, "DTLZ3", {15, 5050}, default_sizes(3), false));
        const auto s1 = summarize(dtlz1);
        const auto s4 = summarize(dtlz4);
        const auto s3 = summarize(dtlz3);

        dtlz1_selection(s1);
        dtlz4_selection(s4);
        dtlz1_flatness(s1);
        dtlz3_small_population(s3);
        determinism(work, dtlz1);
    } catch (const std::exception& e) {
        std::cout << "acceptance aborted: " << e.what() << std::endl;
        return 2;
    }

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
              << fmt(seconds_since(start), 1) << " s" << std::endl;
    return failures == 0 ? 0 : 1;
}
