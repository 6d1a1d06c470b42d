#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "triset/bench/ranksum.hpp"
#include "triset/bench/records.hpp"

namespace triset::bench {

enum class Quantity { Population, Archive, Selected };

std::string_view quantity_name(Quantity q);

/// Identifies one summarized distribution. Population cells do not depend on
/// the archive and use archive = 0; non-selection cells use method "-" and k = 0.
struct CellKey {
    std::string problem;
    int m = 3;
    std::string algorithm;
    std::size_t population = 0;
    std::size_t archive = 0;
    Quantity quantity = Quantity::Population;
    std::string method = "-";
    std::size_t k = 0;

    friend auto operator<=>(const CellKey&, const CellKey&) = default;
    friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct DistributionStats {
    std::size_t runs = 0;
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct SummaryRow {
    CellKey key;
    DistributionStats hv;
    double mean_loss = 0.0;
};

/// Rank-sum comparison of a selected-subset HV distribution with a baseline:
/// "population" = final population of size k (same problem/algorithm), or
/// "archive" = final archive of size k fed by the same population size.
struct SignificanceRow {
    CellKey subject;
    std::string baseline_kind;
    CellKey baseline;
    double mean_subject = 0.0;
    double mean_baseline = 0.0;
    RankSumResult test;
};

/// Per-seed HV values of one cell, ascending by seed.
using SeedSeries = std::vector<std::pair<std::uint64_t, double>>;

struct Summary {
    std::vector<SummaryRow> rows;
    std::vector<SignificanceRow> significance;
    std::map<CellKey, SeedSeries> samples;

    bool empty() const { return rows.empty(); }
    const SummaryRow* find(const CellKey& key) const;
    /// HV values of a cell in seed order; empty if the cell is absent.
    std::vector<double> values(const CellKey& key) const;
};

DistributionStats describe(std::vector<double> values);

/// Result does not depend on the order of `records`.
Summary summarize(const std::vector<RunRecord>& records, RankSumMethod method = RankSumMethod::Auto);

void write_summary_csv(std::ostream& out, const Summary& summary);
void write_summary_csv(const std::filesystem::path& path, const Summary& summary);
void write_significance_csv(std::ostream& out, const Summary& summary);
void write_significance_csv(const std::filesystem::path& path, const Summary& summary);

struct PlotDataReport {
    std::vector<std::filesystem::path> files;
    std::vector<std::string> warnings;
};

/// Writes whitespace-delimited data files into `dir`:
///   <problem>_m<m>_<algorithm>_hv.dat   x = population size, columns = mean HV
///                                       of the final population and of each archive size
///   <problem>_m<m>_<algorithm>_p<P>_a<A>_<method>_k<k>_runs.dat
///                                       per-seed HV of the selected subset next to
///                                       its population and archive baselines
/// An empty summary writes nothing and reports a warning.
PlotDataReport emit_plot_data(const Summary& summary, const std::filesystem::path& dir);

}  // namespace triset::bench
