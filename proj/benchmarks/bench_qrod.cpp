#include <benchmark/benchmark.h>

#include "qrod/analysis.hpp"
#include "qrod/schrodinger.hpp"
#include "qrod/semiclassical.hpp"

using namespace qrod;

namespace {
const RodParameters kParams = RodParameters::natural(0.01);
} // namespace

static void BM_CayleyStep(benchmark::State& state) {
    const auto grid = AngularGrid::uniform(static_cast<int>(state.range(0)));
    const auto pot = PotentialSpec::full_cosine(kParams);
    auto psi = discretize_initial(make_gaussian(0.1), grid);
    CayleyStepper stepper(kParams, grid, pot, default_time_step(kParams, grid));
    for (auto _ : state) {
        stepper.advance(psi);
        benchmark::DoNotOptimize(psi.amplitudes.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CayleyStep)->RangeMultiplier(4)->Range(256, 4096);

static void BM_DensityAnalytic(benchmark::State& state) {
    const GaussianState gauss = make_gaussian(0.1);
    double theta = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(density_analytic(kParams, gauss, theta, 0.5));
        theta += 1e-6;
    }
}
BENCHMARK(BM_DensityAnalytic);

static void BM_TippingTimeExact(benchmark::State& state) {
    double sigma = 0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tipping_time_exact(kParams, sigma));
        sigma = sigma < 0.3 ? sigma + 1e-7 : 0.05;
    }
}
BENCHMARK(BM_TippingTimeExact);

static void BM_DensityPeakTime(benchmark::State& state) {
    const GaussianState gauss = make_gaussian(0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(density_peak_time(kParams, gauss, 0.2));
    }
}
BENCHMARK(BM_DensityPeakTime);

static void BM_EvolveAnalytic(benchmark::State& state) {
    const auto grid = AngularGrid::uniform(static_cast<int>(state.range(0)));
    const GaussianState gauss = make_gaussian(0.1);
    for (auto _ : state) {
        auto psi = evolve_analytic(kParams, gauss, 0.6, grid);
        benchmark::DoNotOptimize(psi.amplitudes.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvolveAnalytic)->RangeMultiplier(4)->Range(256, 4096);

static void BM_TippingTimeNumeric(benchmark::State& state) {
    const auto grid = AngularGrid::uniform(512);
    const GaussianState gauss = make_gaussian(0.1);
    const auto pot = PotentialSpec::full_cosine(kParams);
    const double dt = default_time_step(kParams, grid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tipping_time_numeric(kParams, gauss, grid, pot, dt));
    }
}
BENCHMARK(BM_TippingTimeNumeric);

BENCHMARK_MAIN();
