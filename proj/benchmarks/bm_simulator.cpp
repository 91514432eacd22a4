// Copyright 2026 The tokq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "tokq/graph.hpp"
#include "tokq/qaoa.hpp"
#include "tokq/statevector.hpp"

namespace {

void BM_ApplyZz(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto sv = tokq::Statevector::plus_state(n);
    for (auto _ : state) {
        sv.apply_zz(0, n - 1, 0.37);
        benchmark::DoNotOptimize(sv.amplitude(0));
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_ApplyZz)->Arg(10)->Arg(14)->Arg(18);

void BM_ApplyRxAll(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto sv = tokq::Statevector::plus_state(n);
    for (auto _ : state) {
        sv.apply_rx_all(0.11);
        benchmark::DoNotOptimize(sv.amplitude(0));
    }
    state.SetItemsProcessed(state.iterations() * n * (int64_t{1} << n));
}
BENCHMARK(BM_ApplyRxAll)->Arg(10)->Arg(14)->Arg(18);

void BM_ExpectedCut(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto graph = tokq::generate_base_instance(n, 0.5, 7);
    tokq::QaoaParams params;
    params.gammas = {0.4, 0.9};
    params.betas = {0.3, 0.7};
    for (auto _ : state)
        benchmark::DoNotOptimize(tokq::expected_cut(graph, params));
}
BENCHMARK(BM_ExpectedCut)->Arg(10)->Arg(12)->Arg(14);

void BM_BruteForceMaxcut(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto graph = tokq::generate_base_instance(n, 0.5, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(tokq::brute_force_maxcut(graph).best_value);
}
BENCHMARK(BM_BruteForceMaxcut)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

} // namespace
