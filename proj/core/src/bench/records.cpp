#include "triset/bench/records.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "triset/error.hpp"
#include "triset/solution_csv.hpp"

namespace triset::bench {

namespace {

constexpr std::size_t kColumns = 13;

auto coordinates(const RunRecord& r) {
    return std::tie(r.problem, r.m, r.algorithm, r.population, r.archive, r.seed);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <typename T>
T parse_integer(std::string_view text, std::size_t line_no) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("records line " + std::to_string(line_no) + ": bad integer '" + std::string(text) + "'");
    }
    return value;
}

void line_prefix(std::ostringstream& out, const RunRecord& r) {
    out << r.problem << ',' << r.m << ',' << r.algorithm << ',' << r.population << ',' << r.archive << ','
        << r.seed << ',' << r.evaluations << ',' << r.candidates << ',';
}

}  // namespace

bool record_less(const RunRecord& a, const RunRecord& b) { return coordinates(a) < coordinates(b); }

void sort_records(std::vector<RunRecord>& records) { std::stable_sort(records.begin(), records.end(), record_less); }

std::string records_header() {
    return "problem,m,algorithm,pop,archive,seed,evaluations,candidates,quantity,method,k,hv,loss";
}

std::string format_record(const RunRecord& r) {
    std::ostringstream out;
    line_prefix(out, r);
    out << "population,-," << r.population << ',' << format_real(r.hv_population) << ','
        << format_real(r.loss_population) << '\n';
    line_prefix(out, r);
    out << "archive,-," << r.archive << ',' << format_real(r.hv_archive) << ",0\n";
    for (const auto& s : r.selections) {
        line_prefix(out, r);
        out << "selected," << selection_method_name(s.method) << ',' << s.k << ',' << format_real(s.hv) << ','
            << format_real(s.loss) << '\n';
    }
    return out.str();
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << records_header() << '\n';
    for (const auto& r : records) out << format_record(r);
}

void write_records_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    write_records_csv(out, records);
    if (!out) throw IoError("error writing " + path.string());
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
    std::map<std::tuple<std::string, int, std::string, std::size_t, std::size_t, std::uint64_t>, RunRecord> grouped;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.rfind("problem,", 0) == 0) continue;
        const auto cols = split(line);
        if (cols.size() != kColumns) {
            throw InputError("records line " + std::to_string(line_no) + ": expected " + std::to_string(kColumns) +
                             " columns");
        }
        RunRecord probe;
        probe.problem = std::string(cols[0]);
        probe.m = parse_integer<int>(cols[1], line_no);
        probe.algorithm = std::string(cols[2]);
        probe.population = parse_integer<std::size_t>(cols[3], line_no);
        probe.archive = parse_integer<std::size_t>(cols[4], line_no);
        probe.seed = parse_integer<std::uint64_t>(cols[5], line_no);
        auto [it, fresh] = grouped.try_emplace(coordinates(probe), probe);
        RunRecord& r = it->second;
        r.evaluations = parse_integer<std::uint64_t>(cols[6], line_no);
        r.candidates = parse_integer<std::size_t>(cols[7], line_no);
        const double hv = parse_real(cols[11]);
        const double loss = parse_real(cols[12]);
        if (cols[8] == "population") {
            r.hv_population = hv;
            r.loss_population = loss;
        } else if (cols[8] == "archive") {
            r.hv_archive = hv;
        } else if (cols[8] == "selected") {
            r.selections.push_back({parse_selection_method(cols[9]), parse_integer<std::size_t>(cols[10], line_no),
                                    hv, loss});
        } else {
            throw InputError("records line " + std::to_string(line_no) + ": unknown quantity '" +
                             std::string(cols[8]) + "'");
        }
    }
    std::vector<RunRecord> records;
    records.reserve(grouped.size());
    for (auto& [key, record] : grouped) records.push_back(std::move(record));
    return records;
}

std::vector<RunRecord> read_records_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return read_records_csv(in);
}

}  // namespace triset::bench
