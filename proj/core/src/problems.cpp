#include "triset/problems.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

#include "triset/error.hpp"
#include "triset/random.hpp"

namespace triset {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

constexpr std::array<std::string_view, 13> kNames = {
    "DTLZ1", "DTLZ2", "DTLZ3", "DTLZ4", "WFG1", "WFG2", "WFG3",
    "WFG4",  "WFG5",  "WFG6",  "WFG7",  "WFG8", "WFG9",
};

std::string uppercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

// ------------------------------------------------------------------ DTLZ

double rastrigin_like_g(std::span<const double> xm) {
    double sum = 0.0;
    for (double v : xm) sum += (v - 0.5) * (v - 0.5) - std::cos(20.0 * kPi * (v - 0.5));
    return 100.0 * (static_cast<double>(xm.size()) + sum);
}

double sphere_g(std::span<const double> xm) {
    double sum = 0.0;
    for (double v : xm) sum += (v - 0.5) * (v - 0.5);
    return sum;
}

ObjectiveVector dtlz_linear(std::span<const double> x, int m, double g) {
    ObjectiveVector f(m);
    for (int i = 0; i < m; ++i) {
        double v = 0.5 * (1.0 + g);
        for (int j = 0; j < m - 1 - i; ++j) v *= x[j];
        if (i > 0) v *= 1.0 - x[m - 1 - i];
        f[i] = v;
    }
    return f;
}

ObjectiveVector dtlz_spherical(std::span<const double> x, int m, double g, double alpha) {
    std::vector<double> theta(m - 1);
    for (int j = 0; j < m - 1; ++j) theta[j] = std::pow(x[j], alpha) * kHalfPi;
    ObjectiveVector f(m);
    for (int i = 0; i < m; ++i) {
        double v = 1.0 + g;
        for (int j = 0; j < m - 1 - i; ++j) v *= std::cos(theta[j]);
        if (i > 0) v *= std::sin(theta[m - 1 - i]);
        f[i] = v;
    }
    return f;
}

ObjectiveVector evaluate_dtlz(const ProblemSpec& p, std::span<const double> x) {
    const auto distance = x.subspan(p.m - 1);
    switch (p.family) {
        case ProblemFamily::Dtlz1: return dtlz_linear(x, p.m, rastrigin_like_g(distance));
        case ProblemFamily::Dtlz2: return dtlz_spherical(x, p.m, sphere_g(distance), 1.0);
        case ProblemFamily::Dtlz3: return dtlz_spherical(x, p.m, rastrigin_like_g(distance), 1.0);
        case ProblemFamily::Dtlz4: return dtlz_spherical(x, p.m, sphere_g(distance), 100.0);
        default: break;
    }
    throw NotSupportedError("not a DTLZ problem");
}

// ------------------------------------------------------------------- WFG

using Vec = std::vector<double>;

constexpr double kParamA = 0.98 / 49.98;

Vec position_sums(const Vec& y, std::size_t k, int m, std::span<const double> w) {
    const std::size_t group = k / static_cast<std::size_t>(m - 1);
    Vec t;
    t.reserve(m);
    for (int i = 0; i < m - 1; ++i) {
        const std::size_t lo = i * group;
        t.push_back(wfg::r_sum(std::span(y).subspan(lo, group), w.subspan(lo, group)));
    }
    return t;
}

Vec position_nonsep(const Vec& y, std::size_t k, int m) {
    const std::size_t group = k / static_cast<std::size_t>(m - 1);
    Vec t;
    t.reserve(m);
    for (int i = 0; i < m - 1; ++i) {
        t.push_back(wfg::r_nonsep(std::span(y).subspan(i * group, group), group));
    }
    return t;
}

enum class WfgShape { Wfg1, Wfg2, Linear, Concave };

ObjectiveVector wfg_finish(const Vec& t, int m, WfgShape shape, bool degenerate) {
    const double xm = t[m - 1];
    Vec x(m - 1);
    for (int i = 0; i < m - 1; ++i) {
        const double a = (i == 0 || !degenerate) ? 1.0 : 0.0;
        x[i] = std::max(xm, a) * (t[i] - 0.5) + 0.5;
    }
    Vec h;
    switch (shape) {
        case WfgShape::Wfg1:
            h = wfg::shape_convex(x);
            h[m - 1] = wfg::shape_mixed_last(x[0], 1.0, 5.0);
            break;
        case WfgShape::Wfg2:
            h = wfg::shape_convex(x);
            h[m - 1] = wfg::shape_disc_last(x[0], 1.0, 1.0, 5.0);
            break;
        case WfgShape::Linear: h = wfg::shape_linear(x); break;
        case WfgShape::Concave: h = wfg::shape_concave(x); break;
    }
    ObjectiveVector f(m);
    for (int i = 0; i < m; ++i) f[i] = xm + 2.0 * (i + 1) * h[i];
    return f;
}

ObjectiveVector evaluate_wfg(const ProblemSpec& p, std::span<const double> z) {
    const std::size_t n = z.size();
    const std::size_t k = p.position_params;
    const std::size_t l = n - k;
    const int m = p.m;
    Vec y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = z[i] / (2.0 * static_cast<double>(i + 1));
    const Vec ones(n, 1.0);

    auto distance_linear = [&](Vec& v) {
        for (std::size_t i = k; i < n; ++i) v[i] = wfg::s_linear(v[i], 0.35);
    };
    auto finish_sum = [&](const Vec& v, WfgShape shape, bool degenerate) {
        Vec t = position_sums(v, k, m, ones);
        t.push_back(wfg::r_sum(std::span(v).subspan(k), std::span(ones).subspan(k, v.size() - k)));
        return wfg_finish(t, m, shape, degenerate);
    };

    switch (p.family) {
        case ProblemFamily::Wfg1: {
            distance_linear(y);
            for (std::size_t i = k; i < n; ++i) y[i] = wfg::b_flat(y[i], 0.8, 0.75, 0.85);
            for (double& v : y) v = wfg::b_poly(v, 0.02);
            Vec w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = 2.0 * static_cast<double>(i + 1);
            Vec t = position_sums(y, k, m, w);
            t.push_back(wfg::r_sum(std::span(y).subspan(k), std::span(w).subspan(k)));
            return wfg_finish(t, m, WfgShape::Wfg1, false);
        }
        case ProblemFamily::Wfg2:
        case ProblemFamily::Wfg3: {
            distance_linear(y);
            Vec reduced(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(k));
            for (std::size_t i = 0; i < l / 2; ++i) {
                const std::array<double, 2> pair = {y[k + 2 * i], y[k + 2 * i + 1]};
                reduced.push_back(wfg::r_nonsep(pair, 2));
            }
            if (p.family == ProblemFamily::Wfg2) return finish_sum(reduced, WfgShape::Wfg2, false);
            return finish_sum(reduced, WfgShape::Linear, true);
        }
        case ProblemFamily::Wfg4:
            for (double& v : y) v = wfg::s_multi(v, 30.0, 10.0, 0.35);
            return finish_sum(y, WfgShape::Concave, false);
        case ProblemFamily::Wfg5:
            for (double& v : y) v = wfg::s_decept(v, 0.35, 0.001, 0.05);
            return finish_sum(y, WfgShape::Concave, false);
        case ProblemFamily::Wfg6: {
            distance_linear(y);
            Vec t = position_nonsep(y, k, m);
            t.push_back(wfg::r_nonsep(std::span(y).subspan(k), l));
            return wfg_finish(t, m, WfgShape::Concave, false);
        }
        case ProblemFamily::Wfg7: {
            // Each position variable is biased by the mean of all later variables.
            Vec biased = y;
            for (std::size_t i = 0; i < k; ++i) {
                const double u = wfg::r_sum(std::span(y).subspan(i + 1), std::span(ones).subspan(i + 1));
                biased[i] = wfg::b_param(y[i], u, kParamA, 0.02, 50.0);
            }
            distance_linear(biased);
            return finish_sum(biased, WfgShape::Concave, false);
        }
        case ProblemFamily::Wfg8: {
            Vec biased = y;
            for (std::size_t i = k; i < n; ++i) {
                const double u = wfg::r_sum(std::span(y).first(i), std::span(ones).first(i));
                biased[i] = wfg::b_param(y[i], u, kParamA, 0.02, 50.0);
            }
            distance_linear(biased);
            return finish_sum(biased, WfgShape::Concave, false);
        }
        case ProblemFamily::Wfg9: {
            Vec biased = y;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const double u = wfg::r_sum(std::span(y).subspan(i + 1), std::span(ones).subspan(i + 1));
                biased[i] = wfg::b_param(y[i], u, kParamA, 0.02, 50.0);
            }
            for (std::size_t i = 0; i < k; ++i) biased[i] = wfg::s_decept(biased[i], 0.35, 0.001, 0.05);
            for (std::size_t i = k; i < n; ++i) biased[i] = wfg::s_multi(biased[i], 30.0, 95.0, 0.35);
            Vec t = position_nonsep(biased, k, m);
            t.push_back(wfg::r_nonsep(std::span(biased).subspan(k), l));
            return wfg_finish(t, m, WfgShape::Concave, false);
        }
        default: break;
    }
    throw NotSupportedError("not a WFG problem");
}

}  // namespace

// ---------------------------------------------------------- wfg helpers

namespace wfg {

double correct_to_01(double v) {
    constexpr double eps = 1e-10;
    if (v <= 0.0 && v >= -eps) return 0.0;
    if (v >= 1.0 && v <= 1.0 + eps) return 1.0;
    return v;
}

double b_poly(double y, double alpha) { return correct_to_01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c) {
    const double t1 = std::min(0.0, std::floor(y - b)) * a * (b - y) / b;
    const double t2 = std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
    return correct_to_01(a + t1 - t2);
}

double b_param(double y, double u, double a, double b, double c) {
    const double v = a - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + a);
    return correct_to_01(std::pow(y, b + (c - b) * v));
}

double s_linear(double y, double a) {
    return correct_to_01(std::fabs(y - a) / std::fabs(std::floor(a - y) + a));
}

double s_decept(double y, double a, double b, double c) {
    const double t1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    const double t2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return correct_to_01(1.0 + (std::fabs(y - a) - b) * (t1 + t2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c) {
    const double tmp1 = std::fabs(y - c) / (2.0 * (std::floor(c - y) + c));
    const double tmp2 = (4.0 * a + 2.0) * kPi * (0.5 - tmp1);
    return correct_to_01((1.0 + std::cos(tmp2) + 4.0 * b * tmp1 * tmp1) / (b + 2.0));
}

double r_sum(std::span<const double> y, std::span<const double> w) {
    require_same_dimension(y, w);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return correct_to_01(num / den);
}

double r_nonsep(std::span<const double> y, std::size_t a) {
    const std::size_t n = y.size();
    double num = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        num += y[j];
        for (std::size_t k = 0; k + 1 < a; ++k) num += std::fabs(y[j] - y[(j + k + 1) % n]);
    }
    const double ad = static_cast<double>(a);
    const double half = std::ceil(ad / 2.0);
    const double den = static_cast<double>(n) * half * (1.0 + 2.0 * ad - 2.0 * half) / ad;
    return correct_to_01(num / den);
}

std::vector<double> shape_linear(std::span<const double> x) {
    const std::size_t m = x.size() + 1;
    std::vector<double> h(m);
    for (std::size_t i = 1; i <= m; ++i) {
        double v = 1.0;
        for (std::size_t j = 0; j < m - i; ++j) v *= x[j];
        if (i > 1) v *= 1.0 - x[m - i];
        h[i - 1] = v;
    }
    return h;
}

std::vector<double> shape_convex(std::span<const double> x) {
    const std::size_t m = x.size() + 1;
    std::vector<double> h(m);
    for (std::size_t i = 1; i <= m; ++i) {
        double v = 1.0;
        for (std::size_t j = 0; j < m - i; ++j) v *= 1.0 - std::cos(x[j] * kHalfPi);
        if (i > 1) v *= 1.0 - std::sin(x[m - i] * kHalfPi);
        h[i - 1] = v;
    }
    return h;
}

std::vector<double> shape_concave(std::span<const double> x) {
    const std::size_t m = x.size() + 1;
    std::vector<double> h(m);
    for (std::size_t i = 1; i <= m; ++i) {
        double v = 1.0;
        for (std::size_t j = 0; j < m - i; ++j) v *= std::sin(x[j] * kHalfPi);
        if (i > 1) v *= std::cos(x[m - i] * kHalfPi);
        h[i - 1] = v;
    }
    return h;
}

double shape_mixed_last(double x1, double alpha, double a) {
    const double tmp = 2.0 * a * kPi;
    return std::pow(1.0 - x1 - std::cos(tmp * x1 + kHalfPi) / tmp, alpha);
}

double shape_disc_last(double x1, double alpha, double beta, double a) {
    const double c = std::cos(a * std::pow(x1, beta) * kPi);
    return 1.0 - std::pow(x1, alpha) * c * c;
}

}  // namespace wfg

// -------------------------------------------------------------- public

std::string ProblemSpec::name() const { return std::string(kNames[static_cast<std::size_t>(family)]); }

bool ProblemSpec::is_wfg() const { return family >= ProblemFamily::Wfg1; }

ProblemFamily parse_problem_family(std::string_view name) {
    const auto key = uppercase(name);
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (key == kNames[i]) return static_cast<ProblemFamily>(i);
    }
    throw ParameterError("unknown problem: " + std::string(name));
}

ProblemSpec make_problem(std::string_view name, int m) {
    if (m < 2) throw ParameterError("problems need at least two objectives");
    ProblemSpec p;
    p.family = parse_problem_family(name);
    p.m = m;
    if (p.is_wfg()) {
        p.position_params = 2 * static_cast<std::size_t>(m - 1);
        p.num_variables = p.position_params + 20;
        p.lower.assign(p.num_variables, 0.0);
        p.upper.resize(p.num_variables);
        for (std::size_t i = 0; i < p.num_variables; ++i) p.upper[i] = 2.0 * static_cast<double>(i + 1);
    } else {
        const std::size_t distance = p.family == ProblemFamily::Dtlz1 ? 5 : 10;
        p.num_variables = static_cast<std::size_t>(m - 1) + distance;
        p.lower.assign(p.num_variables, 0.0);
        p.upper.assign(p.num_variables, 1.0);
    }
    return p;
}

ObjectiveVector evaluate(const ProblemSpec& problem, std::span<const double> x) {
    if (x.size() != problem.num_variables) {
        throw InputError(problem.name() + ": expected " + std::to_string(problem.num_variables) +
                         " variables, got " + std::to_string(x.size()));
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= problem.lower[i] && x[i] <= problem.upper[i])) {
            throw InputError(problem.name() + ": variable " + std::to_string(i) + " out of bounds");
        }
    }
    return problem.is_wfg() ? evaluate_wfg(problem, x) : evaluate_dtlz(problem, x);
}

NormalizationBounds analytic_bounds(const ProblemSpec& problem) {
    NormalizationBounds b;
    b.ideal.assign(problem.m, 0.0);
    b.nadir.resize(problem.m);
    for (int i = 0; i < problem.m; ++i) {
        if (problem.is_wfg()) {
            b.nadir[i] = 2.0 * (i + 1);
        } else {
            b.nadir[i] = problem.family == ProblemFamily::Dtlz1 ? 0.5 : 1.0;
        }
    }
    return b;
}

std::vector<ObjectiveVector> sample_pareto_reference(const ProblemSpec& problem, std::size_t n,
                                                     std::uint64_t seed) {
    if (problem.is_wfg()) throw NotSupportedError("reference fronts are only available for DTLZ1-4");
    if (n == 0) throw ParameterError("sample_pareto_reference: n must be positive");
    Rng rng(seed);
    std::vector<ObjectiveVector> out;
    out.reserve(n);
    const bool linear = problem.family == ProblemFamily::Dtlz1;
    while (out.size() < n) {
        ObjectiveVector p(problem.m);
        double total = 0.0;
        if (linear) {
            // Normalized exponential variates are uniform on the simplex.
            for (double& v : p) {
                double u = rng.uniform();
                while (u <= 0.0) u = rng.uniform();
                v = -std::log(u);
                total += v;
            }
            for (double& v : p) v = 0.5 * v / total;
        } else {
            for (double& v : p) {
                v = std::fabs(rng.normal());
                total += v * v;
            }
            if (!(total > 0.0)) continue;
            const double norm = std::sqrt(total);
            for (double& v : p) v /= norm;
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace triset
