// Copyright 2026 The bellscope Authors
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

#include "bellscope/chsh.h"
#include "bellscope/hvm.h"
#include "bellscope/projection.h"
#include "bellscope/quantum.h"

namespace {

using namespace bellscope;

void BM_qm_product_expectation(benchmark::State &state) {
    auto a = UnitVector3::normalize({0.3, -0.4, 0.8});
    auto b = UnitVector3::normalize({-0.1, 0.9, 0.2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(qm_product_expectation(a, b));
    }
}
BENCHMARK(BM_qm_product_expectation);

void BM_sign_model_monte_carlo(benchmark::State &state) {
    auto m = make_sign_model();
    auto a = UnitVector3::e_x();
    auto b = UnitVector3::from_angle_deg(60.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(monte_carlo_expectations(m, a, b, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sign_model_monte_carlo)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_qm_sampled_trials(benchmark::State &state) {
    auto a = UnitVector3::e_x();
    auto b = UnitVector3::from_angle_deg(45.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_qm_trials(a, b, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_qm_sampled_trials)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_reduced_rotation_model_exact(benchmark::State &state) {
    auto m = reduce_to_hvm(rotation_tensor_ghvm());
    auto a = UnitVector3::e_x();
    auto b = UnitVector3::e_y();
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_expectations(m, a, b));
    }
}
BENCHMARK(BM_reduced_rotation_model_exact);

void BM_maximize_chsh_quantum(benchmark::State &state) {
    Correlator qm = [](const UnitVector3 &a, const UnitVector3 &b) { return qm_product_expectation(a, b); };
    SearchConfig config;
    config.grid_step_deg = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximize_chsh(qm, config));
    }
}
BENCHMARK(BM_maximize_chsh_quantum)->Arg(5)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
