#include "nairu/analysis.hpp"
#include "nairu/simulation.hpp"
#include "nairu/stability.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace nairu;

namespace {

Scenario figure1(double horizon) {
    Scenario sc;
    sc.params = kFigure1Params;
    sc.initial = {0.02, 0.04};
    sc.horizon = horizon;
    return sc;
}

void BM_Integrate(benchmark::State& state) {
    const Scenario sc = figure1(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(sc));
    }
    state.SetItemsProcessed(state.iterations() * step_count(sc));
}
BENCHMARK(BM_Integrate)->Arg(20)->Arg(100);

void BM_IntegrateLinearized(benchmark::State& state) {
    Scenario sc = figure1(20.0);
    sc.dynamics = Dynamics::Linearized;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(sc));
    }
}
BENCHMARK(BM_IntegrateLinearized);

void BM_StabilityReport(benchmark::State& state) {
    const Perturbation q{0.0, -0.01};
    for (auto _ : state) {
        benchmark::DoNotOptimize(stability_report(kFigure1Params, q));
    }
}
BENCHMARK(BM_StabilityReport);

void BM_PhaseLag(benchmark::State& state) {
    const Trajectory t = integrate(figure1(20.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_phase_lag(t));
    }
}
BENCHMARK(BM_PhaseLag);

void BM_AnalyzeCycles(benchmark::State& state) {
    const Trajectory t = integrate(figure1(20.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_cycles(t));
    }
}
BENCHMARK(BM_AnalyzeCycles);

void BM_FitParams(benchmark::State& state) {
    const Trajectory t = integrate(figure1(20.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_params(t));
    }
}
BENCHMARK(BM_FitParams);

void BM_Ensemble(benchmark::State& state) {
    std::vector<Industry> industries;
    for (int i = 0; i < state.range(0); ++i) {
        ModelParams p = kFigure1Params;
        p.a += 0.01 * i;
        industries.push_back({"industry" + std::to_string(i), p, 1.0, std::nullopt});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_ensemble(industries, {0.02, 0.04}, 20.0, 0.01));
    }
}
BENCHMARK(BM_Ensemble)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
