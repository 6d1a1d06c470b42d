#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triset/types.hpp"

namespace triset {

enum class ProblemFamily {
    Dtlz1, Dtlz2, Dtlz3, Dtlz4,
    Wfg1, Wfg2, Wfg3, Wfg4, Wfg5, Wfg6, Wfg7, Wfg8, Wfg9,
};

/// A benchmark instance: family, objective count and box-bounded decision space.
///
/// Variable counts: DTLZ1 uses m + 4, DTLZ2-4 use m + 9, WFG uses
/// k = 2(m - 1) position and l = 20 distance variables.
struct ProblemSpec {
    ProblemFamily family = ProblemFamily::Dtlz1;
    int m = 3;
    std::size_t num_variables = 0;
    /// WFG position-parameter count k (0 for DTLZ).
    std::size_t position_params = 0;
    std::vector<double> lower;
    std::vector<double> upper;

    std::string name() const;
    bool is_wfg() const;
};

/// Builds a problem from its name ("DTLZ1" ... "WFG9", case-insensitive).
/// Throws ParameterError for unknown names or m < 2.
ProblemSpec make_problem(std::string_view name, int m);

ProblemFamily parse_problem_family(std::string_view name);

/// Objective vector of `x`. Throws InputError for a wrong length or a variable outside its bounds.
ObjectiveVector evaluate(const ProblemSpec& problem, std::span<const double> x);

/// Ideal (all zero) and nadir of the true Pareto front: 0.5 for DTLZ1, 1 for
/// DTLZ2-4 and 2i for objective i of WFG1-9.
NormalizationBounds analytic_bounds(const ProblemSpec& problem);

/// `n` points drawn uniformly from the analytic Pareto front of DTLZ1-4.
/// Throws NotSupportedError for WFG problems.
std::vector<ObjectiveVector> sample_pareto_reference(const ProblemSpec& problem, std::size_t n,
                                                     std::uint64_t seed);

/// WFG transformation and shape functions, exposed for testing.
namespace wfg {

double correct_to_01(double v);

double b_poly(double y, double alpha);
double b_flat(double y, double a, double b, double c);
double b_param(double y, double u, double a, double b, double c);
double s_linear(double y, double a);
double s_decept(double y, double a, double b, double c);
double s_multi(double y, double a, double b, double c);
double r_sum(std::span<const double> y, std::span<const double> w);
double r_nonsep(std::span<const double> y, std::size_t a);

/// Shape h_1..h_M for x_1..x_{M-1}.
std::vector<double> shape_linear(std::span<const double> x);
std::vector<double> shape_convex(std::span<const double> x);
std::vector<double> shape_concave(std::span<const double> x);
double shape_mixed_last(double x1, double alpha, double a);
double shape_disc_last(double x1, double alpha, double beta, double a);

}  // namespace wfg

}  // namespace triset
