#include <benchmark/benchmark.h>

#include "idf/experiment.hpp"

using namespace idf;

namespace {

const Scenario kLumpy{SizeDistribution{Logarithmic(0.9)}, OccurrenceProfile{Stationary(0.5)},
                      0.5};

void BM_forecaster_step(benchmark::State& state) {
    const Method method = static_cast<Method>(state.range(0));
    RngStream rng(1);
    const Scenario sc{SizeDistribution{Logarithmic(0.9)}, OccurrenceProfile{Stationary(0.5)}, 0.5,
                      0, 4096};
    const SeriesPair series = generate_series(sc, rng);
    Forecaster fc(method, SmoothingParams(0.1, 0.1));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fc.step(series.eval[i]));
        if (++i == series.eval.size()) i = 0;
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_sample_size(benchmark::State& state) {
    const SizeDistribution dists[] = {SizeDistribution{Logarithmic(0.9)},
                                      SizeDistribution{Logarithmic(0.001)},
                                      SizeDistribution{Geometric(0.2)}};
    const SizeDistribution& dist = dists[state.range(0)];
    RngStream rng(2);
    for (auto _ : state) benchmark::DoNotOptimize(sample_size(dist, rng));
    state.SetItemsProcessed(state.iterations());
}

void BM_generate_series(benchmark::State& state) {
    RngStream rng(3);
    for (auto _ : state) benchmark::DoNotOptimize(generate_series(kLumpy, rng));
    state.SetItemsProcessed(state.iterations() * (kLumpy.init_len + kLumpy.horizon));
}

void BM_run_single(benchmark::State& state) {
    RngStream rng(4);
    const SeriesPair series = generate_series(kLumpy, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_single(Method::Hes, SmoothingParams(0.1, 0.1), series));
    state.SetItemsProcessed(state.iterations() * (kLumpy.init_len + kLumpy.horizon));
}

void BM_run_grid_single_combo(benchmark::State& state) {
    for (auto _ : state) {
        ExperimentSpec spec(kLumpy);
        spec.methods = {Method::Hes};
        spec.alpha_grid = {0.1};
        spec.beta_grid = {0.1};
        spec.runs = state.range(0);
        spec.threads = 1;
        benchmark::DoNotOptimize(run_grid(spec));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) *
                            (kLumpy.init_len + kLumpy.horizon));
}

}  // namespace

BENCHMARK(BM_forecaster_step)
    ->Arg(static_cast<int>(Method::Croston))
    ->Arg(static_cast<int>(Method::Tsb))
    ->Arg(static_cast<int>(Method::Hes));
BENCHMARK(BM_sample_size)->DenseRange(0, 2);
BENCHMARK(BM_generate_series);
BENCHMARK(BM_run_single);
BENCHMARK(BM_run_grid_single_combo)->Arg(10);

BENCHMARK_MAIN();
