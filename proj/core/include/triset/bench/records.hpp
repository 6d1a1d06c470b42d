#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "triset/selection.hpp"

namespace triset::bench {

/// Indicator values of one subset chosen from a cell's final archive.
struct SelectionOutcome {
    SelectionMethod method = SelectionMethod::DistanceGreedy;
    std::size_t k = 0;
    double hv = 0.0;
    double loss = 0.0;

    friend bool operator==(const SelectionOutcome&, const SelectionOutcome&) = default;
};

/// One (problem, m, algorithm, population, archive, seed) cell.
///
/// Indicators are computed in normalized objective space. `loss_population`
/// is the expected loss of the final population against the archive's
/// candidate set; selection losses use the same candidate set.
struct RunRecord {
    std::string problem;
    int m = 3;
    std::string algorithm;
    std::size_t population = 0;
    std::size_t archive = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    double hv_population = 0.0;
    double loss_population = 0.0;
    double hv_archive = 0.0;
    /// Distinct non-dominated archive members (the candidate set S).
    std::size_t candidates = 0;
    std::vector<SelectionOutcome> selections;
    /// Wall time of the MOEA/D run that fed this cell; kept out of records.csv.
    double wall_seconds = 0.0;

    friend bool operator==(const RunRecord& a, const RunRecord& b) {
        return a.problem == b.problem && a.m == b.m && a.algorithm == b.algorithm &&
               a.population == b.population && a.archive == b.archive && a.seed == b.seed &&
               a.evaluations == b.evaluations && a.hv_population == b.hv_population &&
               a.loss_population == b.loss_population && a.hv_archive == b.hv_archive &&
               a.candidates == b.candidates && a.selections == b.selections;
    }
};

/// Orders records by plan coordinates (problem, m, algorithm, pop, archive, seed).
bool record_less(const RunRecord& a, const RunRecord& b);
void sort_records(std::vector<RunRecord>& records);

/// records.csv header line.
std::string records_header();

/// Lines of one record in records.csv (population, archive, then one line per
/// selection outcome), each terminated by '\n'.
std::string format_record(const RunRecord& record);

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_records_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records);

/// Groups lines back into records; line order within the file is irrelevant.
std::vector<RunRecord> read_records_csv(std::istream& in);
std::vector<RunRecord> read_records_csv(const std::filesystem::path& path);

}  // namespace triset::bench
