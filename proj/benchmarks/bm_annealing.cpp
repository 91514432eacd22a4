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

#include "tokq/annealing.hpp"
#include "tokq/graph.hpp"
#include "tokq/ising.hpp"
#include "tokq/spsa.hpp"

namespace {

void BM_ForwardAnnealRead(benchmark::State &state) {
    const auto graph = tokq::generate_base_instance(50, 0.95, 7);
    const auto model = tokq::ising_from_maxcut(graph);
    const double t_max = tokq::default_t_max(model);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const auto result = tokq::forward_anneal(model, 500, 1, t_max, ++seed);
        benchmark::DoNotOptimize(result.best.energy);
    }
}
BENCHMARK(BM_ForwardAnnealRead)->Unit(benchmark::kMillisecond);

void BM_ReverseAnnealRead(benchmark::State &state) {
    const auto graph = tokq::generate_base_instance(50, 0.95, 7);
    const auto model = tokq::ising_from_maxcut(graph);
    const double t_max = tokq::default_t_max(model);
    const auto warm = tokq::forward_anneal(model, 500, 1, t_max, 3);
    tokq::ReverseSchedule schedule;
    schedule.num_reads = 1;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const auto result =
            tokq::reverse_anneal(model, warm.best.config, schedule, t_max, ++seed);
        benchmark::DoNotOptimize(result.best.energy);
    }
}
BENCHMARK(BM_ReverseAnnealRead)->Unit(benchmark::kMillisecond);

void BM_SpsaSphere(benchmark::State &state) {
    auto sphere = [](const std::vector<double> &t) {
        double total = 0.0;
        for (double x : t)
            total += x * x;
        return total;
    };
    for (auto _ : state) {
        const auto result = tokq::spsa_minimize(
            sphere, {1.0, -1.0, 0.5, 2.0}, tokq::SpsaConfig::defaults(100, 5));
        benchmark::DoNotOptimize(result.theta_final[0]);
    }
}
BENCHMARK(BM_SpsaSphere);

} // namespace

BENCHMARK_MAIN();
