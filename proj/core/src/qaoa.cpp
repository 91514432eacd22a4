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
#include "tokq/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tokq {

std::vector<double> QaoaParams::flat() const {
    std::vector<double> values = gammas;
    values.insert(values.end(), betas.begin(), betas.end());
    return values;
}

QaoaParams QaoaParams::from_flat(const std::vector<double> &values) {
    if (values.empty() || values.size() % 2 != 0)
        throw std::invalid_argument("flat parameter vector must have even size");
    const std::size_t p = values.size() / 2;
    QaoaParams params;
    params.gammas.assign(values.begin(), values.begin() + p);
    params.betas.assign(values.begin() + p, values.end());
    return params;
}

void QaoaParams::validate() const {
    if (gammas.empty() || gammas.size() != betas.size())
        throw std::invalid_argument("gamma and beta vectors must share length p >= 1");
}

Statevector qaoa_state(const WeightedGraph &graph, const QaoaParams &params) {
    params.validate();
    Statevector state = Statevector::plus_state(graph.n_vertices());
    for (int layer = 0; layer < params.p(); ++layer) {
        const double gamma = params.gammas[layer];
        for (const Edge &e : graph.edges())
            state.apply_zz(e.u, e.v, -0.5 * gamma * e.weight);
        state.apply_rx_all(params.betas[layer]);
    }
    return state;
}

PauliSum cut_observable(const WeightedGraph &graph) {
    PauliSum sum;
    sum.add({graph.total_weight() / 2.0, {}});
    for (const Edge &e : graph.edges())
        sum.add({-e.weight / 2.0, {{e.u, Pauli::Z}, {e.v, Pauli::Z}}});
    return sum;
}

double expected_cut(const WeightedGraph &graph, const QaoaParams &params) {
    return expectation(qaoa_state(graph, params), cut_observable(graph));
}

double expected_cut_sampled(const WeightedGraph &graph, const QaoaParams &params,
                            std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0)
        throw std::invalid_argument("shot count must be positive");
    const Statevector state = qaoa_state(graph, params);
    const auto counts = sample_counts(state, shots, seed);
    double total = 0.0;
    for (std::size_t index = 0; index < counts.size(); ++index) {
        if (counts[index] == 0)
            continue;
        const Partition p = Partition::from_index(index, graph.n_vertices());
        total += static_cast<double>(counts[index]) * cut_value(graph, p);
    }
    return total / static_cast<double>(shots);
}

double success_probability(const WeightedGraph &graph, const QaoaParams &params) {
    const BruteForceResult optimum = brute_force_maxcut(graph);
    const auto probs = qaoa_state(graph, params).probabilities();
    double mass = 0.0;
    for (const Partition &p : optimum.optimal_partitions) {
        mass += probs[p.to_index()];
        mass += probs[p.complemented().to_index()];
    }
    return mass;
}

namespace {

SpsaConfig resolve_gains(const std::optional<SpsaConfig> &gains, int steps,
                         std::uint64_t seed) {
    SpsaConfig cfg = gains ? *gains : SpsaConfig::defaults(steps, seed);
    cfg.iterations = steps;
    cfg.seed = seed;
    return cfg;
}

QaoaParams random_params(int p, std::uint64_t seed) {
    Rng rng(seed);
    QaoaParams params;
    params.gammas.reserve(p);
    params.betas.reserve(p);
    for (int i = 0; i < p; ++i)
        params.gammas.push_back(rng.uniform(0.0, std::numbers::pi));
    for (int i = 0; i < p; ++i)
        params.betas.push_back(rng.uniform(0.0, std::numbers::pi));
    return params;
}

// Shared setup so a k=1 multitask run reproduces optimize_single exactly.
SpsaOptimizer make_single_optimizer(const WeightedGraph &graph, int p, int steps,
                                    std::uint64_t seed,
                                    const std::optional<SpsaConfig> &gains,
                                    std::optional<QaoaParams> init = {}) {
    const QaoaParams theta0 =
        init ? std::move(*init) : random_params(p, derive_seed(seed, "init"));
    auto objective = [graph_ptr = &graph](const std::vector<double> &flat) {
        return -expected_cut(*graph_ptr, QaoaParams::from_flat(flat));
    };
    return SpsaOptimizer(objective, theta0.flat(),
                         resolve_gains(gains, steps, derive_seed(seed, "spsa")));
}

} // namespace

void TransferConfig::validate() const {
    if (n_transfers < 1)
        throw std::invalid_argument("n_transfers must be positive");
    if (steps_per_block < 1)
        throw std::invalid_argument("steps_per_block must be positive");
    if (resolved_k_prime() < 1 || resolved_k_prime() > steps_per_block)
        throw std::invalid_argument(
            "k_prime must lie in [1, steps_per_block]; branches are compared "
            "at or before the next block boundary");
}

SingleRunResult optimize_single(const WeightedGraph &graph, int p, int steps,
                                std::uint64_t seed,
                                const std::optional<SpsaConfig> &gains) {
    if (steps < 1)
        throw std::invalid_argument("steps must be positive");
    SpsaOptimizer opt = make_single_optimizer(graph, p, steps, seed, gains);
    opt.run(steps);
    const auto best = opt.trace().best_index();
    return {QaoaParams::from_flat(opt.trace().parameters[best]), opt.trace()};
}

namespace {

struct GraphTask {
    const WeightedGraph *graph;
    SpsaOptimizer optimizer;
    std::optional<SpsaOptimizer> fork;
    int fork_source = -1;
    int fork_block = -1;
};

double transfer_metric(const GraphTask &task, const std::vector<double> &flat,
                       std::uint64_t shots, std::uint64_t seed) {
    const QaoaParams params = QaoaParams::from_flat(flat);
    if (shots == 0)
        return expected_cut(*task.graph, params);
    return expected_cut_sampled(*task.graph, params, shots, seed);
}

} // namespace

MultitaskReport run_multitask(const std::vector<WeightedGraph> &graphs, int p,
                              const TransferConfig &config, std::uint64_t seed,
                              const MultitaskOptions &options) {
    config.validate();
    if (graphs.empty())
        throw std::invalid_argument("need at least one graph");
    const int k = static_cast<int>(graphs.size());
    const int n = graphs.front().n_vertices();
    for (const auto &g : graphs)
        if (g.n_vertices() != n)
            throw std::invalid_argument(
                "all graphs must share the vertex count; parameter vectors "
                "are only shareable across same-size circuits");
    if (options.initial_params && static_cast<int>(options.initial_params->size()) != k)
        throw std::invalid_argument("initial_params must match graph count");
    if (options.graph_seeds && static_cast<int>(options.graph_seeds->size()) != k)
        throw std::invalid_argument("graph_seeds must match graph count");

    const int k_prime = config.resolved_k_prime();
    // Gain schedules span the whole optimization, not one block, so a
    // transfer-free multitask run is indistinguishable from optimize_single
    // over n_transfers * steps_per_block iterations.
    const int total_steps = config.n_transfers * config.steps_per_block;

    std::vector<GraphTask> tasks;
    tasks.reserve(k);
    for (int i = 0; i < k; ++i) {
        const std::uint64_t graph_seed = options.graph_seeds
                                             ? (*options.graph_seeds)[i]
                                             : derive_seed(seed, "graph", i);
        std::optional<QaoaParams> init;
        if (options.initial_params)
            init = (*options.initial_params)[i];
        tasks.push_back({&graphs[i],
                         make_single_optimizer(graphs[i], p, total_steps,
                                               graph_seed, options.gains,
                                               std::move(init)),
                         {}, -1, -1});
    }

    MultitaskReport report;
    std::uint64_t metric_draws = 0;
    auto metric_seed = [&] { return derive_seed(seed, "metric", metric_draws++); };

    for (int round = 0; round < config.n_transfers; ++round) {
        // Optimization blocks; resolve pending evolve forks mid-block.
        for (int i = 0; i < k; ++i) {
            GraphTask &task = tasks[i];
            if (task.fork) {
                task.optimizer.run(k_prime);
                task.fork->run(k_prime);
                const double ec_incumbent =
                    transfer_metric(task, task.optimizer.theta(), options.shots,
                                    metric_seed());
                const double ec_fork = transfer_metric(
                    task, task.fork->theta(), options.shots, metric_seed());
                const bool keep_fork = ec_fork > ec_incumbent;
                report.events.push_back(
                    {task.fork_block, i, task.fork_source, ec_incumbent,
                     keep_fork ? ec_fork : ec_incumbent,
                     keep_fork ? TransferEventKind::kRollbackKeep
                               : TransferEventKind::kRollbackDiscard});
                if (keep_fork)
                    task.optimizer = std::move(*task.fork);
                task.fork.reset();
                task.fork_source = -1;
                task.fork_block = -1;
                if (config.steps_per_block > k_prime)
                    task.optimizer.run(config.steps_per_block - k_prime);
            } else {
                task.optimizer.run(config.steps_per_block);
            }
        }

        if (config.strategy == TransferStrategy::kNone || k < 2)
            continue;

        // Cross-evaluation barrier: every graph's metric under every
        // graph's current parameters, all from the same snapshot.
        std::vector<std::vector<double>> snapshot;
        snapshot.reserve(k);
        for (const auto &task : tasks)
            snapshot.push_back(task.optimizer.theta());
        std::vector<std::vector<double>> matrix(k, std::vector<double>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                matrix[i][j] = transfer_metric(tasks[i], snapshot[j],
                                               options.shots, metric_seed());

        const bool final_round = round + 1 == config.n_transfers;
        for (int i = 0; i < k; ++i) {
            int best_source = i;
            for (int j = 0; j < k; ++j)
                if (j != i && matrix[i][j] > matrix[i][best_source])
                    best_source = j;
            if (best_source == i)
                continue; // self preferred on exact ties
            if (config.strategy == TransferStrategy::kStatic) {
                report.events.push_back({round, i, best_source, matrix[i][i],
                                         matrix[i][best_source],
                                         TransferEventKind::kAdoption});
                tasks[i].optimizer.replace_theta(snapshot[best_source]);
            } else if (!final_round) {
                // Evolve: fork now, judged k_prime iterations into the
                // next block. The final barrier cannot be judged, so it
                // does not fork.
                tasks[i].fork = tasks[i].optimizer.forked_with(snapshot[best_source]);
                tasks[i].fork_source = best_source;
                tasks[i].fork_block = round;
            }
        }
    }

    report.per_graph.reserve(k);
    double success_sum = 0.0;
    double success_sq = 0.0;
    for (int i = 0; i < k; ++i) {
        const auto &trace = tasks[i].optimizer.trace();
        MultitaskReport::PerGraph entry;
        entry.final_params = QaoaParams::from_flat(tasks[i].optimizer.theta());
        entry.expected_cut_trace.reserve(trace.size());
        for (double obj : trace.objective)
            entry.expected_cut_trace.push_back(-obj);
        entry.final_expected_cut = expected_cut(graphs[i], entry.final_params);
        entry.success_probability = success_probability(graphs[i], entry.final_params);
        entry.n_adoptions = 0;
        entry.n_rollbacks = 0;
        for (const auto &event : report.events) {
            if (event.target_graph != i)
                continue;
            if (event.kind == TransferEventKind::kAdoption)
                ++entry.n_adoptions;
            else
                ++entry.n_rollbacks;
        }
        success_sum += entry.success_probability;
        success_sq += entry.success_probability * entry.success_probability;
        report.per_graph.push_back(std::move(entry));
    }
    report.mean_success = success_sum / k;
    const double variance =
        k > 1 ? (success_sq - k * report.mean_success * report.mean_success) / (k - 1)
              : 0.0;
    report.stderr_success = std::sqrt(std::max(variance, 0.0) / k);
    return report;
}

} // namespace tokq
