#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "triset/archive.hpp"
#include "triset/indicators.hpp"
#include "triset/scalarize.hpp"
#include "triset/selection.hpp"

using namespace triset;

namespace {

// Points on the positive part of the unit sphere, so they are mutually non-dominated.
PointSet sphere_points(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    PointSet points(n, ObjectiveVector(m));
    for (auto& p : points) {
        double norm = 0;
        for (auto& v : p) {
            v = std::fabs(normal(rng));
            norm += v * v;
        }
        for (auto& v : p) v /= std::sqrt(norm);
    }
    return points;
}

void BM_HypervolumeExact(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto points = sphere_points(static_cast<std::size_t>(state.range(1)), m, 1);
    const auto ref = default_hv_reference(static_cast<int>(m));
    for (auto _ : state) benchmark::DoNotOptimize(hypervolume_exact(points, ref));
}
BENCHMARK(BM_HypervolumeExact)->ArgsProduct({{3}, {50, 200, 800}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HypervolumeExact)->ArgsProduct({{4}, {20, 50, 100}})->Unit(benchmark::kMicrosecond);

void BM_HypervolumeMc(benchmark::State& state) {
    const auto points = sphere_points(100, 5, 2);
    const auto ref = default_hv_reference(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hypervolume_mc(points, ref, static_cast<std::size_t>(state.range(0)), 3));
    }
}
BENCHMARK(BM_HypervolumeMc)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_SimplexLattice(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int h = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(simplex_lattice(m, h));
}
BENCHMARK(BM_SimplexLattice)->Args({3, 99})->Args({5, 17});

void BM_ArchiveOffer(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    const auto stream = sphere_points(4096, 3, 4);
    std::vector<Solution> initial(1);
    initial[0].f = ObjectiveVector(3, 1.0);
    const ObjectiveVector z(3, 0.0);
    auto archive = ScalarizingArchive::with_size(3, size, Scalarizer::tchebycheff());
    archive.initialize(initial, z);
    Solution s;
    std::size_t i = 0;
    for (auto _ : state) {
        s.f = stream[i++ & 4095];
        benchmark::DoNotOptimize(archive.update(s, z));
    }
}
BENCHMARK(BM_ArchiveOffer)->Arg(15)->Arg(91)->Arg(990)->Arg(5050);

void BM_GreedySelection(benchmark::State& state) {
    SubsetRequest req;
    req.candidates = sphere_points(static_cast<std::size_t>(state.range(1)), 3, 5);
    req.k = 15;
    req.method = static_cast<SelectionMethod>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(select_subset(req));
    state.SetLabel(std::string(selection_method_name(req.method)));
}
BENCHMARK(BM_GreedySelection)
    ->ArgsProduct({{static_cast<long>(SelectionMethod::DistanceGreedy), static_cast<long>(SelectionMethod::HvGreedy),
                    static_cast<long>(SelectionMethod::LossGreedy)},
                   {200, 1000}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
