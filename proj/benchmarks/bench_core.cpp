#include <benchmark/benchmark.h>

#include "nvlab/kaplan_meier.hpp"
#include "nvlab/policies.hpp"
#include "nvlab/simulation.hpp"

namespace {

std::vector<nvlab::CensoredObservation> synth_history(int n) {
    auto rng = nvlab::make_rng(42, 0, 0);
    const nvlab::WeibullParams demand{1.0, 1.0};
    std::vector<nvlab::CensoredObservation> history;
    history.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double d = nvlab::weibull_sample(demand, rng);
        history.push_back(nvlab::CensoredObservation::from_demand(2.0, d));
    }
    return history;
}

void BM_ThompsonStep(benchmark::State& state) {
    nvlab::ThompsonPolicy policy({1.0, 1.0}, {4.0, 4.0}, 1.0);
    auto rng = nvlab::make_rng(7, 0, 0);
    const nvlab::WeibullParams demand{1.0, 1.0};
    int period = 1;
    for (auto _ : state) {
        const double y = policy.choose(period, rng);
        const double d = nvlab::weibull_sample(demand, rng);
        policy.observe(nvlab::CensoredObservation::from_demand(y, d));
        benchmark::DoNotOptimize(y);
        ++period;
    }
}
BENCHMARK(BM_ThompsonStep);

void BM_KmFit(benchmark::State& state) {
    const auto history = synth_history(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto estimate = nvlab::km_fit(history);
        benchmark::DoNotOptimize(estimate.survival.data());
    }
}
BENCHMARK(BM_KmFit)->Arg(128)->Arg(512);

void BM_PluginFit(benchmark::State& state) {
    const auto history = synth_history(static_cast<int>(state.range(0)));
    const auto estimate = nvlab::km_fit(history);
    for (auto _ : state) {
        auto fit = nvlab::plugin_fit(estimate, 1.0);
        benchmark::DoNotOptimize(fit.theta_hat);
    }
}
BENCHMARK(BM_PluginFit)->Arg(128)->Arg(512);

void BM_RunTrial(benchmark::State& state) {
    nvlab::ExperimentConfig config;
    config.horizon = static_cast<int>(state.range(0));
    config.trials = 1;
    config.seed = 99;
    config.policies = {"ts"};
    for (auto _ : state) {
        auto trajectory = nvlab::run_trial(config, "ts", 0);
        benchmark::DoNotOptimize(trajectory.periods.data());
    }
}
BENCHMARK(BM_RunTrial)->Arg(600);

}  // namespace

BENCHMARK_MAIN();
