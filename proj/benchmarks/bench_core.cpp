#include <benchmark/benchmark.h>

#include <random>

#include "signet/dataset.hpp"
#include "signet/rng.hpp"
#include "signet/rprop.hpp"
#include "signet/synthetic.hpp"
#include "signet/trading.hpp"

using namespace signet;

namespace {

Dataset sine_dataset(std::size_t quotes) {
    SyntheticSpec spec;
    spec.kind = SeriesKind::Sine;
    spec.length = quotes;
    return build_dataset(compute_returns(generate_series(spec)), "BENCH");
}

void BM_Forward(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const NetParams p = init_params(rng);
    Sample s;
    for (double& v : s.x) v = uniform_pm1(rng) * 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(forward(p, s.x));
    }
}
BENCHMARK(BM_Forward);

void BM_FullBatchGradient(benchmark::State& state) {
    const Dataset ds = sine_dataset(1000);
    std::mt19937_64 rng(2);
    const NetParams p = init_params(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gradient(p, ds.train()));
    }
}
BENCHMARK(BM_FullBatchGradient);

void BM_RpropStep(benchmark::State& state) {
    const RpropConfig cfg;
    std::mt19937_64 rng(3);
    NetParams p = init_params(rng);
    Gradient g;
    for (double& v : g.flat) v = uniform_pm1(rng);
    auto st = RpropState::make(NetParams::kWeightCount, cfg);
    for (auto _ : state) {
        rprop_step(p.flat, g.flat, st, cfg);
        benchmark::DoNotOptimize(p.flat[0]);
    }
}
BENCHMARK(BM_RpropStep);

void BM_TrainEpochs(benchmark::State& state) {
    const Dataset ds = sine_dataset(1000);
    RpropConfig cfg;
    cfg.max_iterations = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(train(ds.train(), cfg, 1));
    }
}
BENCHMARK(BM_TrainEpochs)->Arg(10)->Arg(100);

void BM_BuildDataset(benchmark::State& state) {
    SyntheticSpec spec;
    spec.kind = SeriesKind::Sine;
    spec.length = 1000;
    const auto quotes = generate_series(spec);
    const auto returns = compute_returns(quotes);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_dataset(returns, "BENCH"));
    }
}
BENCHMARK(BM_BuildDataset);

void BM_OptimizeRange(benchmark::State& state) {
    const Dataset ds = sine_dataset(1000);
    std::mt19937_64 rng(4);
    const NetParams p = init_params(rng);
    const auto grid = threshold_grid(0.02, 0.0005);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_range(p, ds.train(), grid, 1));
    }
}
BENCHMARK(BM_OptimizeRange);

}  // namespace

BENCHMARK_MAIN();
