#include "triset/scalarize.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>

#include "triset/error.hpp"

namespace triset {

namespace {

double weight_norm(std::span<const double> w) {
    double sq = 0.0;
    for (double v : w) sq += v * v;
    return std::sqrt(sq);
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void append_compositions(int m, int h, std::vector<int>& prefix, int remaining,
                         std::vector<WeightVector>& out) {
    if (static_cast<int>(prefix.size()) == m - 1) {
        WeightVector w(m);
        for (int i = 0; i < m - 1; ++i) w[i] = static_cast<double>(prefix[i]) / h;
        w[m - 1] = static_cast<double>(remaining) / h;
        out.push_back(std::move(w));
        return;
    }
    for (int j = 0; j <= remaining; ++j) {
        prefix.push_back(j);
        append_compositions(m, h, prefix, remaining - j, out);
        prefix.pop_back();
    }
}

}  // namespace

double Scalarizer::operator()(std::span<const double> f, std::span<const double> w,
                              std::span<const double> z) const {
    if (kind == ScalarizerKind::Tchebycheff) return triset::tchebycheff(f, w, z);
    return triset::pbi(f, w, z, theta);
}

Scalarizer parse_scalarizer(std::string_view name) {
    const auto key = lowercase(name);
    if (key == "tch" || key == "tchebycheff" || key == "moead-tch" || key == "moea/d-tch") {
        return Scalarizer::tchebycheff();
    }
    if (key == "pbi" || key == "moead-pbi" || key == "moea/d-pbi") return Scalarizer::pbi();
    throw ParameterError("unknown scalarizing function: " + std::string(name));
}

std::string_view scalarizer_name(const Scalarizer& s) {
    return s.kind == ScalarizerKind::Tchebycheff ? "TCH" : "PBI";
}

std::size_t lattice_size(int m, int h) {
    if (m < 2 || h < 1) throw ParameterError("lattice requires m >= 2 and H >= 1");
    // binomial(h + m - 1, m - 1) computed incrementally; each partial product is exact.
    std::size_t result = 1;
    for (int i = 1; i <= m - 1; ++i) {
        result = result * static_cast<std::size_t>(h + i) / static_cast<std::size_t>(i);
    }
    return result;
}

int lattice_divisions_for_size(int m, std::size_t size) {
    if (m < 2) throw ParameterError("lattice requires m >= 2");
    for (int h = 1;; ++h) {
        const auto n = lattice_size(m, h);
        if (n == size) return h;
        if (n > size) break;
    }
    throw ParameterError("no simplex lattice with m=" + std::to_string(m) + " has " +
                         std::to_string(size) + " weights");
}

std::vector<WeightVector> simplex_lattice(int m, int h) {
    const auto expected = lattice_size(m, h);
    std::vector<WeightVector> out;
    out.reserve(expected);
    std::vector<int> prefix;
    prefix.reserve(m);
    append_compositions(m, h, prefix, h, out);
    return out;
}

double tchebycheff(std::span<const double> f, std::span<const double> w,
                   std::span<const double> z) {
    require_same_dimension(f, w);
    require_same_dimension(f, z);
    std::vector<double> floored(w.begin(), w.end());
    for (double& v : floored) v = std::max(v, kTchebycheffWeightFloor);
    return detail::tchebycheff_kernel(f.data(), floored.data(), z.data(), f.size());
}

double pbi(std::span<const double> f, std::span<const double> w, std::span<const double> z,
           double theta) {
    require_same_dimension(f, w);
    require_same_dimension(f, z);
    const double norm = weight_norm(w);
    if (!(norm > 0.0)) throw ParameterError("PBI requires a nonzero weight vector");
    return detail::pbi_kernel(f.data(), w.data(), norm, z.data(), f.size(), theta);
}

ObjectiveVector update_ideal(std::span<const double> z, std::span<const double> f) {
    require_same_dimension(z, f);
    ObjectiveVector out(z.begin(), z.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], f[i]);
    return out;
}

bool update_ideal_in_place(ObjectiveVector& z, std::span<const double> f) {
    require_same_dimension(z, f);
    bool changed = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (f[i] < z[i]) {
            z[i] = f[i];
            changed = true;
        }
    }
    return changed;
}

WeightSet::WeightSet(std::vector<WeightVector> weights, Scalarizer scalarizer)
    : weights_(std::move(weights)), scalarizer_(scalarizer) {
    if (weights_.empty()) throw EmptySetError("WeightSet: no weights");
    dim_ = weights_.front().size();
    if (scalarizer_.kind == ScalarizerKind::Pbi && !(scalarizer_.theta > 0.0)) {
        throw ParameterError("PBI penalty theta must be positive");
    }
    prepared_.reserve(weights_.size() * dim_);
    norms_.reserve(weights_.size());
    for (const auto& w : weights_) {
        if (w.size() != dim_) throw DimensionError("WeightSet: mixed weight dimensions");
        for (double v : w) {
            prepared_.push_back(scalarizer_.kind == ScalarizerKind::Tchebycheff
                                    ? std::max(v, kTchebycheffWeightFloor)
                                    : v);
        }
        const double norm = weight_norm(w);
        if (scalarizer_.kind == ScalarizerKind::Pbi && !(norm > 0.0)) {
            throw ParameterError("PBI requires nonzero weight vectors");
        }
        norms_.push_back(norm);
    }
}

}  // namespace triset
