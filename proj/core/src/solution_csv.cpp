#include "triset/solution_csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "triset/error.hpp"

namespace triset {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("bad " + std::string(what) + " in header: '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

double parse_real(std::string_view text) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("not a real number: '" + std::string(text) + "'");
    }
    return v;
}

void write_solution_csv(std::ostream& out, const SolutionSetFile& file) {
    out << "# problem=" << file.problem << " m=" << file.m << " D=" << file.num_variables
        << " kind=" << file.kind << '\n';
    for (int i = 0; i < file.m; ++i) out << (i ? "," : "") << 'f' << (i + 1);
    for (std::size_t i = 0; i < file.num_variables; ++i) out << ",x" << (i + 1);
    out << '\n';
    for (const auto& s : file.rows) {
        if (s.f.size() != static_cast<std::size_t>(file.m) || s.x.size() != file.num_variables) {
            throw DimensionError("row does not match the declared m / D");
        }
        for (std::size_t i = 0; i < s.f.size(); ++i) out << (i ? "," : "") << format_real(s.f[i]);
        for (double v : s.x) out << ',' << format_real(v);
        out << '\n';
    }
}

void write_solution_csv(const std::filesystem::path& path, const SolutionSetFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    write_solution_csv(out, file);
    if (!out) throw IoError("write failed: " + path.string());
}

SolutionSetFile read_solution_csv(std::istream& in) {
    SolutionSetFile file;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
        throw InputError("missing '# problem=... m=... D=... kind=...' header");
    }
    bool have_m = false;
    bool have_d = false;
    for (auto token : split(std::string_view(line).substr(2), ' ')) {
        token = trim(token);
        if (token.empty()) continue;
        const auto eq = token.find('=');
        if (eq == std::string_view::npos) throw InputError("bad header token: " + std::string(token));
        const auto key = token.substr(0, eq);
        const auto value = token.substr(eq + 1);
        if (key == "problem") {
            file.problem = std::string(value);
        } else if (key == "m") {
            file.m = static_cast<int>(parse_count(value, "m"));
            have_m = true;
        } else if (key == "D") {
            file.num_variables = parse_count(value, "D");
            have_d = true;
        } else if (key == "kind") {
            file.kind = std::string(value);
        }
    }
    if (!have_m || !have_d || file.m < 1) throw InputError("header must declare m and D");

    if (!std::getline(in, line)) throw InputError("missing column header row");
    const std::size_t width = static_cast<std::size_t>(file.m) + file.num_variables;
    if (split(trim(line), ',').size() != width) throw InputError("column header does not match m + D");

    std::size_t row_number = 2;
    while (std::getline(in, line)) {
        ++row_number;
        const auto content = trim(line);
        if (content.empty()) continue;
        const auto cells = split(content, ',');
        if (cells.size() != width) {
            throw InputError("row " + std::to_string(row_number) + " has " +
                             std::to_string(cells.size()) + " cells, expected " + std::to_string(width));
        }
        Solution s;
        s.f.reserve(file.m);
        s.x.reserve(file.num_variables);
        for (std::size_t i = 0; i < width; ++i) {
            const double v = parse_real(cells[i]);
            (i < static_cast<std::size_t>(file.m) ? s.f : s.x).push_back(v);
        }
        s.eval_index = file.rows.size();
        file.rows.push_back(std::move(s));
    }
    return file;
}

SolutionSetFile read_solution_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    return read_solution_csv(in);
}

}  // namespace triset
