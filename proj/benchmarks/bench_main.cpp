#include <benchmark/benchmark.h>

#include "dht/dynamics.hpp"
#include "dht/geodesic.hpp"
#include "dht/pipeline.hpp"
#include "dht/quantum.hpp"

namespace {

std::vector<dht::EventPoint> synthetic_events(int n, int dim, std::uint64_t seed) {
    dht::CounterRng rng(seed);
    std::vector<dht::EventPoint> ev(n);
    for (int i = 0; i < n; ++i) {
        ev[i].id = static_cast<std::uint32_t>(i);
        for (int d = 0; d < dim; ++d) ev[i].coords.push_back(rng.next_unit());
    }
    return ev;
}

void BM_Agglomerate(benchmark::State& state) {
    const auto ev = synthetic_events(static_cast<int>(state.range(0)), 3, 1);
    const auto dm = dht::pairwise_distances(ev, dht::DistanceMetric::euclidean);
    for (auto _ : state) {
        auto tree = dht::agglomerate(dm, dht::Linkage::average);
        benchmark::DoNotOptimize(tree);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Agglomerate)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_AssignCodesAndMonna(benchmark::State& state) {
    const auto ev = synthetic_events(static_cast<int>(state.range(0)), 3, 2);
    const auto dm = dht::pairwise_distances(ev, dht::DistanceMetric::euclidean);
    const auto tree = dht::agglomerate(dm, dht::Linkage::average);
    for (auto _ : state) {
        auto coded = dht::assign_codes(tree);
        auto values = dht::event_values(coded);
        benchmark::DoNotOptimize(values);
    }
}
BENCHMARK(BM_AssignCodesAndMonna)->Arg(128)->Arg(512);

void BM_DifferencePdf(benchmark::State& state) {
    const auto ev = synthetic_events(static_cast<int>(state.range(0)), 3, 3);
    const auto dm = dht::pairwise_distances(ev, dht::DistanceMetric::euclidean);
    const auto tree = dht::assign_codes(dht::agglomerate(dm, dht::Linkage::average));
    const auto q = dht::difference_matrix(dht::event_values(tree));
    for (auto _ : state) {
        auto pdf = dht::difference_pdf(q, 1e-12);
        benchmark::DoNotOptimize(pdf);
    }
}
BENCHMARK(BM_DifferencePdf)->Arg(128)->Arg(512);

void BM_VarietyContinuum(benchmark::State& state) {
    const dht::GridGeometry geom{-1.0, 1.0, static_cast<int>(state.range(0))};
    const auto grid = dht::DensityGrid::from_function(
        geom, [](double q) { return 1.0 + 0.5 * std::cos(1.5 * q); });
    for (auto _ : state) {
        benchmark::DoNotOptimize(dht::variety_continuum(grid, -36.0));
    }
}
BENCHMARK(BM_VarietyContinuum)->RangeMultiplier(2)->Range(32, 256);

void BM_QuantumDiagnostics(benchmark::State& state) {
    const dht::GridGeometry geom{-1.0, 1.0, static_cast<int>(state.range(0))};
    const auto grid = dht::DensityGrid::from_function(
        geom, [](double q) { return std::exp(-q * q / 0.18); });
    const auto phase = dht::phase_field(grid);
    const auto st = dht::wavefunction(grid, phase);
    const auto u = dht::ExternalPotential::zero(geom.bins);
    for (auto _ : state) {
        auto res = dht::bohmian_residuals(st, st, u);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_QuantumDiagnostics)->Arg(64)->Arg(256);

void BM_GeodesicRk4(benchmark::State& state) {
    const auto metric = dht::SpacetimeMetric::schwarzschild(1.0);
    const auto s0 = dht::circular_orbit_state(metric, 6.0);
    for (auto _ : state) {
        auto traj = dht::integrate_geodesic(metric, s0, 0.1, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(traj);
    }
}
BENCHMARK(BM_GeodesicRk4)->Arg(1000)->Arg(10000);

void BM_FullPipeline(benchmark::State& state) {
    dht::PipelineConfig cfg;
    cfg.source = dht::SourceKind::geodesic;
    cfg.geo_steps = static_cast<int>(state.range(0)) - 1;
    for (auto _ : state) {
        auto report = dht::run_pipeline(cfg);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_FullPipeline)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
