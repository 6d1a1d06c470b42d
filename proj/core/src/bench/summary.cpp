#include "triset/bench/summary.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "triset/error.hpp"
#include "triset/solution_csv.hpp"

namespace triset::bench {

namespace {

namespace fs = std::filesystem;

struct Accumulator {
    SeedSeries hv;
    SeedSeries loss;
};

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

void add_sample(SeedSeries& series, std::uint64_t seed, double value) {
    // Population values repeat once per archive size; keep one per seed.
    const auto it = std::lower_bound(series.begin(), series.end(), seed,
                                     [](const auto& entry, std::uint64_t s) { return entry.first < s; });
    if (it != series.end() && it->first == seed) return;
    series.insert(it, {seed, value});
}

std::vector<double> second_of(const SeedSeries& series) {
    std::vector<double> out;
    out.reserve(series.size());
    for (const auto& [seed, v] : series) out.push_back(v);
    return out;
}

double mean_of(const std::vector<double>& values) {
    double total = 0.0;
    for (double v : values) total += v;
    return values.empty() ? 0.0 : total / static_cast<double>(values.size());
}

std::string panel_stem(const CellKey& key) {
    return key.problem + "_m" + std::to_string(key.m) + "_" + key.algorithm;
}

std::string real_or_nan(const Summary& summary, const CellKey& key) {
    const SummaryRow* row = summary.find(key);
    return row ? format_real(row->hv.mean) : std::string("nan");
}

}  // namespace

std::string_view quantity_name(Quantity q) {
    switch (q) {
        case Quantity::Population: return "population";
        case Quantity::Archive: return "archive";
        case Quantity::Selected: return "selected";
    }
    return "?";
}

const SummaryRow* Summary::find(const CellKey& key) const {
    const auto it = std::lower_bound(rows.begin(), rows.end(), key,
                                     [](const SummaryRow& row, const CellKey& k) { return row.key < k; });
    return it != rows.end() && it->key == key ? &*it : nullptr;
}

std::vector<double> Summary::values(const CellKey& key) const {
    const auto it = samples.find(key);
    return it == samples.end() ? std::vector<double>{} : second_of(it->second);
}

DistributionStats describe(std::vector<double> values) {
    DistributionStats s;
    s.runs = values.size();
    if (values.empty()) return s;
    s.mean = mean_of(values);
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    s.median = values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
    s.min = values.front();
    s.max = values.back();
    return s;
}

Summary summarize(const std::vector<RunRecord>& records, RankSumMethod method) {
    std::map<CellKey, Accumulator> cells;
    for (const auto& r : records) {
        CellKey base{r.problem, r.m, r.algorithm, r.population, 0, Quantity::Population, "-", 0};
        auto& pop = cells[base];
        add_sample(pop.hv, r.seed, r.hv_population);
        add_sample(pop.loss, r.seed, r.loss_population);

        CellKey arch = base;
        arch.archive = r.archive;
        arch.quantity = Quantity::Archive;
        auto& a = cells[arch];
        add_sample(a.hv, r.seed, r.hv_archive);
        add_sample(a.loss, r.seed, 0.0);

        for (const auto& s : r.selections) {
            CellKey sel = arch;
            sel.quantity = Quantity::Selected;
            sel.method = std::string(selection_method_name(s.method));
            sel.k = s.k;
            auto& c = cells[sel];
            add_sample(c.hv, r.seed, s.hv);
            add_sample(c.loss, r.seed, s.loss);
        }
    }

    Summary summary;
    for (auto& [key, acc] : cells) {
        summary.rows.push_back({key, describe(second_of(acc.hv)), mean_of(second_of(acc.loss))});
        summary.samples.emplace(key, std::move(acc.hv));
    }

    for (const auto& row : summary.rows) {
        if (row.key.quantity != Quantity::Selected) continue;
        CellKey pop_base{row.key.problem, row.key.m, row.key.algorithm, row.key.k, 0, Quantity::Population, "-", 0};
        CellKey arch_base{row.key.problem, row.key.m, row.key.algorithm, row.key.population, row.key.k,
                          Quantity::Archive, "-", 0};
        const auto subject = summary.values(row.key);
        for (const auto& [kind, base] : {std::pair{"population", pop_base}, std::pair{"archive", arch_base}}) {
            const auto baseline = summary.values(base);
            if (baseline.empty()) continue;
            SignificanceRow sig;
            sig.subject = row.key;
            sig.baseline_kind = kind;
            sig.baseline = base;
            sig.mean_subject = row.hv.mean;
            sig.mean_baseline = mean_of(baseline);
            sig.test = wilcoxon_rank_sum(subject, baseline, method);
            summary.significance.push_back(std::move(sig));
        }
    }
    return summary;
}

void write_summary_csv(std::ostream& out, const Summary& summary) {
    out << "problem,m,algorithm,pop,archive,quantity,method,k,runs,hv_mean,hv_median,hv_min,hv_max,loss_mean\n";
    for (const auto& row : summary.rows) {
        const auto& k = row.key;
        out << k.problem << ',' << k.m << ',' << k.algorithm << ',' << k.population << ',' << k.archive << ','
            << quantity_name(k.quantity) << ',' << k.method << ',' << k.k << ',' << row.hv.runs << ','
            << format_real(row.hv.mean) << ',' << format_real(row.hv.median) << ',' << format_real(row.hv.min)
            << ',' << format_real(row.hv.max) << ',' << format_real(row.mean_loss) << '\n';
    }
}

void write_summary_csv(const fs::path& path, const Summary& summary) {
    auto out = open_output(path);
    write_summary_csv(out, summary);
}

void write_significance_csv(std::ostream& out, const Summary& summary) {
    out << "problem,m,algorithm,pop,archive,method,k,baseline,baseline_pop,baseline_archive,n,n_baseline,"
           "hv_mean,hv_mean_baseline,p_value,test,reject,direction\n";
    for (const auto& s : summary.significance) {
        const auto& k = s.subject;
        const auto n = summary.samples.at(k).size();
        const auto nb = summary.samples.at(s.baseline).size();
        out << k.problem << ',' << k.m << ',' << k.algorithm << ',' << k.population << ',' << k.archive << ','
            << k.method << ',' << k.k << ',' << s.baseline_kind << ',' << s.baseline.population << ','
            << s.baseline.archive << ',' << n << ',' << nb << ',' << format_real(s.mean_subject) << ','
            << format_real(s.mean_baseline) << ',' << format_real(s.test.p_value) << ','
            << (s.test.exact ? "exact" : "normal") << ',' << (s.test.reject ? 1 : 0) << ',' << s.test.direction
            << '\n';
    }
}

void write_significance_csv(const fs::path& path, const Summary& summary) {
    auto out = open_output(path);
    write_significance_csv(out, summary);
}

PlotDataReport emit_plot_data(const Summary& summary, const fs::path& dir) {
    PlotDataReport report;
    if (summary.empty()) {
        report.warnings.push_back("summary is empty; no plot data written");
        return report;
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create plot directory " + dir.string());

    // Panels: one per (problem, m, algorithm).
    std::map<CellKey, std::pair<std::set<std::size_t>, std::set<std::size_t>>> panels;
    for (const auto& row : summary.rows) {
        CellKey panel{row.key.problem, row.key.m, row.key.algorithm, 0, 0, Quantity::Population, "-", 0};
        auto& [pops, archives] = panels[panel];
        pops.insert(row.key.population);
        if (row.key.quantity == Quantity::Archive) archives.insert(row.key.archive);
    }
    for (const auto& [panel, axes] : panels) {
        const auto& [pops, archives] = axes;
        const fs::path path = dir / (panel_stem(panel) + "_hv.dat");
        auto out = open_output(path);
        out << "# problem=" << panel.problem << " m=" << panel.m << " algorithm=" << panel.algorithm
            << " y=mean normalized HV\n";
        out << "# pop population";
        for (std::size_t a : archives) out << " archive_" << a;
        out << '\n';
        for (std::size_t p : pops) {
            CellKey key = panel;
            key.population = p;
            out << p << ' ' << real_or_nan(summary, key);
            key.quantity = Quantity::Archive;
            for (std::size_t a : archives) {
                key.archive = a;
                out << ' ' << real_or_nan(summary, key);
            }
            out << '\n';
        }
        report.files.push_back(path);
    }

    for (const auto& row : summary.rows) {
        const auto& k = row.key;
        if (k.quantity != Quantity::Selected) continue;
        const fs::path path = dir / (panel_stem(k) + "_p" + std::to_string(k.population) + "_a" +
                                     std::to_string(k.archive) + "_" + k.method + "_k" + std::to_string(k.k) +
                                     "_runs.dat");
        CellKey pop_base{k.problem, k.m, k.algorithm, k.k, 0, Quantity::Population, "-", 0};
        CellKey arch_base{k.problem, k.m, k.algorithm, k.population, k.k, Quantity::Archive, "-", 0};
        const auto lookup = [&](const CellKey& key) {
            std::map<std::uint64_t, double> by_seed;
            if (const auto it = summary.samples.find(key); it != summary.samples.end()) {
                for (const auto& [seed, v] : it->second) by_seed[seed] = v;
            }
            return by_seed;
        };
        const auto pop_values = lookup(pop_base);
        const auto arch_values = lookup(arch_base);
        auto out = open_output(path);
        out << "# seed selected population_" << k.k << " archive_" << k.k << '\n';
        for (const auto& [seed, v] : summary.samples.at(k)) {
            out << seed << ' ' << format_real(v);
            for (const auto* values : {&pop_values, &arch_values}) {
                const auto it = values->find(seed);
                out << ' ' << (it == values->end() ? std::string("nan") : format_real(it->second));
            }
            out << '\n';
        }
        report.files.push_back(path);
    }
    return report;
}

}  // namespace triset::bench
