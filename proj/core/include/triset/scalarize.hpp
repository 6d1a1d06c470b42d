#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "triset/types.hpp"

namespace triset {

/// Simplex-lattice weight: components j/H summing to one.
using WeightVector = std::vector<double>;

enum class ScalarizerKind { Tchebycheff, Pbi };

/// Weight floor applied by the Tchebycheff function so zero-weight terms still count.
inline constexpr double kTchebycheffWeightFloor = 1e-6;
inline constexpr double kDefaultPbiTheta = 5.0;

struct Scalarizer {
    ScalarizerKind kind = ScalarizerKind::Tchebycheff;
    double theta = kDefaultPbiTheta;

    static Scalarizer tchebycheff() { return {ScalarizerKind::Tchebycheff, kDefaultPbiTheta}; }
    static Scalarizer pbi(double theta = kDefaultPbiTheta) { return {ScalarizerKind::Pbi, theta}; }

    /// Scalarized value of `f` for weight `w` and reference `z`; smaller is better.
    double operator()(std::span<const double> f, std::span<const double> w,
                      std::span<const double> z) const;

    friend bool operator==(const Scalarizer&, const Scalarizer&) = default;
};

/// "TCH" / "PBI" (case-insensitive, also "tchebycheff"); throws ParameterError otherwise.
Scalarizer parse_scalarizer(std::string_view name);
std::string_view scalarizer_name(const Scalarizer& s);

/// binomial(m + H - 1, m - 1): the number of lattice weights.
std::size_t lattice_size(int m, int h);

/// The H whose lattice has exactly `size` weights; throws ParameterError if none.
int lattice_divisions_for_size(int m, std::size_t size);

/// All weights with components in {0/H, ..., H/H} summing to one, in
/// ascending lexicographic order of their integer numerators.
std::vector<WeightVector> simplex_lattice(int m, int h);

double tchebycheff(std::span<const double> f, std::span<const double> w,
                   std::span<const double> z);

double pbi(std::span<const double> f, std::span<const double> w, std::span<const double> z,
           double theta = kDefaultPbiTheta);

/// Componentwise minimum of z and f.
ObjectiveVector update_ideal(std::span<const double> z, std::span<const double> f);

/// In-place variant; returns true when some component of z decreased.
bool update_ideal_in_place(ObjectiveVector& z, std::span<const double> f);

namespace detail {

inline double tchebycheff_kernel(const double* f, const double* w_floored, const double* z,
                                 std::size_t m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double v = w_floored[i] * std::fabs(f[i] - z[i]);
        if (v > worst) worst = v;
    }
    return worst;
}

inline double pbi_kernel(const double* f, const double* w, double w_norm, const double* z,
                         std::size_t m, double theta) {
    double dot = 0.0;
    for (std::size_t i = 0; i < m; ++i) dot += (f[i] - z[i]) * w[i];
    const double d1 = std::fabs(dot) / w_norm;
    double sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = f[i] - (z[i] + d1 * w[i] / w_norm);
        sq += r * r;
    }
    return d1 + theta * std::sqrt(sq);
}

}  // namespace detail

/// A lattice of weights bound to one scalarizer, with the per-weight
/// quantities (floored weights, norms) precomputed for repeated evaluation.
class WeightSet {
public:
    WeightSet(std::vector<WeightVector> weights, Scalarizer scalarizer);

    std::size_t size() const { return weights_.size(); }
    std::size_t dim() const { return dim_; }
    const Scalarizer& scalarizer() const { return scalarizer_; }
    const std::vector<WeightVector>& weights() const { return weights_; }

    /// Same value as scalarizer()(f, weights()[i], z); no dimension checks.
    double value(std::size_t i, const double* f, const double* z) const {
        const double* w = prepared_.data() + i * dim_;
        if (scalarizer_.kind == ScalarizerKind::Tchebycheff) {
            return detail::tchebycheff_kernel(f, w, z, dim_);
        }
        return detail::pbi_kernel(f, w, norms_[i], z, dim_, scalarizer_.theta);
    }

private:
    std::vector<WeightVector> weights_;
    Scalarizer scalarizer_;
    std::size_t dim_ = 0;
    std::vector<double> prepared_;
    std::vector<double> norms_;
};

}  // namespace triset
