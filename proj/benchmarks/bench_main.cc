// Copyright 2026 The qspoof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "qspoof/bayes.h"
#include "qspoof/bpsk.h"
#include "qspoof/gaussian.h"
#include "qspoof/linalg.h"
#include "qspoof/random.h"
#include "qspoof/two_pulse.h"

namespace {

using namespace qspoof;

void BM_HermitianEigen(benchmark::State &state) {
    const auto dim = static_cast<size_t>(state.range(0));
    Rng rng(1);
    HermitianMatrix h(dim);
    for (size_t m = 0; m < dim; ++m) {
        for (size_t n = m; n < dim; ++n) {
            h.set(m, n, {rng.standard_normal(), m == n ? 0.0 : rng.standard_normal()});
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigen(h));
    }
}
BENCHMARK(BM_HermitianEigen)->Arg(16)->Arg(64)->Arg(146)->Unit(benchmark::kMicrosecond);

void BM_PSuccessBpsk(benchmark::State &state) {
    const ScenarioParams params(0.1, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p_success_bpsk(params));
    }
}
BENCHMARK(BM_PSuccessBpsk);

void BM_PSuccessTwoPulse(benchmark::State &state) {
    const ScenarioParams params(0.1, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p_success_two_pulse(params));
    }
}
BENCHMARK(BM_PSuccessTwoPulse);

void BM_TwoPulseFockOracle(benchmark::State &state) {
    const ScenarioParams params(0.1, 0.3);
    const auto cutoff = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(two_pulse_fock_oracle(params, cutoff));
    }
}
BENCHMARK(BM_TwoPulseFockOracle)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_PSuccessGaussian(benchmark::State &state) {
    const double alpha = std::sqrt(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(p_success_gaussian(alpha));
    }
}
BENCHMARK(BM_PSuccessGaussian)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Trajectory(benchmark::State &state) {
    const ScenarioParams params(0.1, 0.5);
    const TrajectoryOptions options{state.range(0) ? ProjectorMode::kAdaptive : ProjectorMode::kFixed,
                                    Normalization::kGram};
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_trajectory(Hypothesis::kSpoof, params, 200, ++seed, options));
    }
}
BENCHMARK(BM_Trajectory)->ArgName("adaptive")->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_MonteCarloFidelity(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_average_fidelity({1.0}, 100'000, 7));
    }
}
BENCHMARK(BM_MonteCarloFidelity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
