#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "triset/error.hpp"
#include "triset/indicators.hpp"
#include "triset/random.hpp"

namespace triset {

namespace {

/// Row-major block of n points in d dimensions.
struct Block {
    std::size_t d = 0;
    std::vector<double> data;

    std::size_t size() const { return d == 0 ? 0 : data.size() / d; }
    const double* row(std::size_t i) const { return data.data() + i * d; }
};

Block clip_to_reference(const PointSet& points, std::span<const double> ref) {
    Block b;
    b.d = ref.size();
    for (const auto& p : points) {
        require_same_dimension(p, ref);
        bool inside = true;
        for (std::size_t i = 0; i < b.d; ++i) {
            if (!(p[i] < ref[i])) {
                inside = false;
                break;
            }
        }
        if (inside) b.data.insert(b.data.end(), p.begin(), p.end());
    }
    return b;
}

double hv1d(const Block& pts, const double* ref) {
    double best = ref[0];
    for (std::size_t i = 0; i < pts.size(); ++i) best = std::min(best, pts.row(i)[0]);
    return ref[0] - best;
}

double hv2d(const Block& pts, const double* ref) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double* pa = pts.row(a);
        const double* pb = pts.row(b);
        return pa[0] != pb[0] ? pa[0] < pb[0] : pa[1] < pb[1];
    });
    double area = 0.0;
    double ceiling = ref[1];
    for (std::size_t idx : order) {
        const double* p = pts.row(idx);
        if (p[1] < ceiling) {
            area += (ref[0] - p[0]) * (ceiling - p[1]);
            ceiling = p[1];
        }
    }
    return area;
}

// Sweep along the third objective, maintaining the 2-D staircase of the points
// seen so far (x ascending, y descending) and the area it dominates.
double hv3d(const Block& pts, const double* ref) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts.row(a)[2] < pts.row(b)[2]; });

    std::map<double, double> stair;
    double area = 0.0;
    double volume = 0.0;
    double prev_z = n ? pts.row(order.front())[2] : ref[2];
    for (std::size_t idx : order) {
        const double* p = pts.row(idx);
        const double px = p[0];
        const double py = p[1];
        volume += area * (p[2] - prev_z);
        prev_z = p[2];

        auto it = stair.lower_bound(px);
        const bool has_pred = it != stair.begin();
        if (has_pred && std::prev(it)->second <= py) continue;
        if (it != stair.end() && it->first == px && it->second <= py) continue;

        double height = has_pred ? std::prev(it)->second : ref[1];
        double x_prev = px;
        double added = 0.0;
        while (it != stair.end() && it->second >= py) {
            added += (it->first - x_prev) * (height - py);
            x_prev = it->first;
            height = it->second;
            it = stair.erase(it);
        }
        const double x_next = it == stair.end() ? ref[0] : it->first;
        added += (x_next - x_prev) * (height - py);
        stair.emplace_hint(it, px, py);
        area += added;
    }
    volume += area * (ref[2] - prev_z);
    return volume;
}

Block nondominated_rows(const Block& pts) {
    const std::size_t n = pts.size();
    const std::size_t d = pts.d;
    std::vector<bool> dominated(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (dominated[i]) continue;
        const double* a = pts.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || dominated[j]) continue;
            const double* b = pts.row(j);
            bool weakly = true;
            for (std::size_t k = 0; k < d; ++k) {
                if (a[k] > b[k]) {
                    weakly = false;
                    break;
                }
            }
            if (weakly) dominated[j] = true;
        }
    }
    Block out;
    out.d = d;
    for (std::size_t i = 0; i < n; ++i) {
        if (!dominated[i]) out.data.insert(out.data.end(), pts.row(i), pts.row(i) + d);
    }
    return out;
}

double hv_recursive(const Block& pts, const double* ref);

// Volume dominated by `p` alone minus the part also dominated by `others`,
// all in the first d coordinates of `pts`.
double exclusive_volume(const double* p, const Block& others, const double* ref) {
    const std::size_t d = others.d;
    double box = 1.0;
    for (std::size_t k = 0; k < d; ++k) box *= ref[k] - p[k];
    if (others.size() == 0) return box;
    Block limited;
    limited.d = d;
    limited.data.resize(others.data.size());
    for (std::size_t j = 0; j < others.size(); ++j) {
        const double* q = others.row(j);
        for (std::size_t k = 0; k < d; ++k) limited.data[j * d + k] = std::max(p[k], q[k]);
    }
    if (d > 3) limited = nondominated_rows(limited);
    return box - hv_recursive(limited, ref);
}

// Slices along the last objective, worst first: each point's exclusive part
// with respect to all later (better in that objective) points is a prism whose
// cross-section is a (d-1)-dimensional exclusive volume.
double hv_slices(const Block& pts, const double* ref) {
    const std::size_t n = pts.size();
    const std::size_t d = pts.d;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pts.row(a)[d - 1] > pts.row(b)[d - 1];
    });
    Block sorted;
    sorted.d = d - 1;
    sorted.data.reserve(n * (d - 1));
    for (std::size_t idx : order) sorted.data.insert(sorted.data.end(), pts.row(idx), pts.row(idx) + d - 1);

    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double height = ref[d - 1] - pts.row(order[k])[d - 1];
        Block later;
        later.d = d - 1;
        later.data.assign(sorted.data.begin() + static_cast<std::ptrdiff_t>((k + 1) * (d - 1)),
                          sorted.data.end());
        total += height * exclusive_volume(sorted.row(k), later, ref);
    }
    return total;
}

double hv_recursive(const Block& pts, const double* ref) {
    if (pts.size() == 0) return 0.0;
    switch (pts.d) {
        case 1: return hv1d(pts, ref);
        case 2: return hv2d(pts, ref);
        case 3: return hv3d(pts, ref);
        default: return hv_slices(pts, ref);
    }
}

}  // namespace

double hypervolume_exact(const PointSet& points, std::span<const double> ref) {
    if (ref.empty()) throw DimensionError("hypervolume: empty reference point");
    Block pts = clip_to_reference(points, ref);
    if (pts.size() == 0) return 0.0;
    if (pts.d > 3) pts = nondominated_rows(pts);
    return hv_recursive(pts, ref.data());
}

double hypervolume_contribution(std::span<const double> point, const PointSet& others,
                                std::span<const double> ref) {
    require_same_dimension(point, ref);
    for (std::size_t k = 0; k < ref.size(); ++k) {
        if (!(point[k] < ref[k])) return 0.0;
    }
    const Block rest = clip_to_reference(others, ref);
    return exclusive_volume(point.data(), rest, ref.data());
}

HypervolumeEstimate hypervolume_mc(const PointSet& points, std::span<const double> ref,
                                   std::size_t n_samples, std::uint64_t seed) {
    if (n_samples < 1000) throw ParameterError("hypervolume_mc needs at least 1000 samples");
    if (ref.empty()) throw DimensionError("hypervolume: empty reference point");
    Block pts = clip_to_reference(points, ref);
    if (pts.size() == 0) return {};
    pts = nondominated_rows(pts);
    const std::size_t d = pts.d;

    std::vector<double> lo(ref.begin(), ref.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t k = 0; k < d; ++k) lo[k] = std::min(lo[k], pts.row(i)[k]);
    }
    double box = 1.0;
    for (std::size_t k = 0; k < d; ++k) box *= ref[k] - lo[k];
    if (!(box > 0.0)) return {};

    Rng rng(seed);
    std::vector<double> sample(d);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < n_samples; ++s) {
        for (std::size_t k = 0; k < d; ++k) sample[k] = rng.uniform(lo[k], ref[k]);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double* p = pts.row(i);
            bool covers = true;
            for (std::size_t k = 0; k < d; ++k) {
                if (p[k] > sample[k]) {
                    covers = false;
                    break;
                }
            }
            if (covers) {
                ++hits;
                break;
            }
        }
    }
    const double frac = static_cast<double>(hits) / static_cast<double>(n_samples);
    HypervolumeEstimate est;
    est.value = frac * box;
    est.standard_error = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(n_samples));
    return est;
}

}  // namespace triset
