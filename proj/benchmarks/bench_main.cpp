// SPDX-License-Identifier: Apache-2.0
#include "tqu/figures.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

namespace {

using namespace tqu;

void BM_BinaryEntropyInverse(benchmark::State& state) {
    double h = 0.0;
    for (auto _ : state) {
        h += 1e-4;
        if (h > 1.0) h = 0.0;
        benchmark::DoNotOptimize(binary_entropy_inverse(h));
    }
}
BENCHMARK(BM_BinaryEntropyInverse);

void BM_RelationChecks(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const ObservablePair pair{PauliAxis{0, 0, 1},
                              PauliAxis{0, std::sqrt(3.0) / 2.0, 0.5}};
    for (auto _ : state) {
        Vec3 d = normalized({uni(rng), uni(rng), uni(rng)});
        BlochVector n{0.5 * (uni(rng) + 1.0) * d};
        benchmark::DoNotOptimize(check_expectation_relation(n, pair));
        benchmark::DoNotOptimize(check_stddev_relation(n, pair));
        benchmark::DoNotOptimize(check_entropy_relation(n, pair));
    }
}
BENCHMARK(BM_RelationChecks);

void BM_PoissonSample(benchmark::State& state) {
    auto rng = substream(1, 0);
    const double mean = double(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(poisson_sample(rng, mean));
}
BENCHMARK(BM_PoissonSample)->Arg(5)->Arg(1000)->Arg(100000);

void BM_RunExperiment(benchmark::State& state) {
    const ObservablePair pair{PauliAxis{0, 0, 1}, PauliAxis{0, 1, 0}};
    const auto fam = great_circle_family(pair, 0.94, 90);
    for (auto _ : state) {
        ExperimentConfig cfg{pair, 0.94, fam.settings, 100000, 7};
        benchmark::DoNotOptimize(run_experiment(cfg));
    }
}
BENCHMARK(BM_RunExperiment);

}  // namespace

BENCHMARK_MAIN();
