#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "triset/types.hpp"

namespace triset {

/// Contents of an archive / solution-set CSV file.
///
/// Layout:
///   # problem=DTLZ1 m=3 D=7 kind=scalarizing
///   f1,f2,f3,x1,...,x7
///   <one row per solution: objectives, then decision variables>
///
/// Reals are written with 17 significant digits, so a write/read cycle
/// reproduces every value bit for bit. `D` may be 0 for objective-only sets.
struct SolutionSetFile {
    std::string problem = "-";
    int m = 0;
    std::size_t num_variables = 0;
    std::string kind = "set";
    std::vector<Solution> rows;
};

/// Shortest-form-independent rendering of a double with 17 significant digits.
std::string format_real(double v);

/// Parses a real written by format_real (or any strtod-compatible text).
double parse_real(std::string_view text);

void write_solution_csv(std::ostream& out, const SolutionSetFile& file);
void write_solution_csv(const std::filesystem::path& path, const SolutionSetFile& file);

/// Throws InputError on malformed content, IoError when the file cannot be opened.
SolutionSetFile read_solution_csv(std::istream& in);
SolutionSetFile read_solution_csv(const std::filesystem::path& path);

}  // namespace triset
