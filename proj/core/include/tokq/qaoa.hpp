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
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tokq/graph.hpp"
#include "tokq/pauli.hpp"
#include "tokq/spsa.hpp"
#include "tokq/statevector.hpp"

namespace tokq {

/// Depth-p variational parameters. Convention: gamma drives the cost
/// layer, beta the mixer.
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    int p() const { return static_cast<int>(gammas.size()); }
    std::vector<double> flat() const;
    static QaoaParams from_flat(const std::vector<double> &values);
    void validate() const;
};

/// |+>^n, then p alternating layers: per edge exp(-i gamma_l w/2 (1 - ZZ))
/// up to global phase, then exp(-i beta_l X) on every qubit.
Statevector qaoa_state(const WeightedGraph &graph, const QaoaParams &params);

/// Cut observable sum_ij w_ij (1 - Z_i Z_j) / 2 as a Pauli sum.
PauliSum cut_observable(const WeightedGraph &graph);

/// Exact expectation of the cut observable in qaoa_state.
double expected_cut(const WeightedGraph &graph, const QaoaParams &params);

/// Finite-shot estimate of expected_cut (multinomial sampling of the QAOA
/// output distribution).
double expected_cut_sampled(const WeightedGraph &graph, const QaoaParams &params,
                            std::uint64_t shots, std::uint64_t seed);

/// Probability mass on basis states realizing the brute-force optimum
/// (both members of every global-flip pair).
double success_probability(const WeightedGraph &graph, const QaoaParams &params);

struct SingleRunResult {
    QaoaParams best_params; // best traced iterate
    OptTrace trace;         // objective is -expected_cut
};

/// SPSA minimization of -expected_cut from uniform-random initial
/// parameters in [0, pi). `gains` overrides the default gain schedule; its
/// iterations and seed fields are ignored.
SingleRunResult optimize_single(const WeightedGraph &graph, int p, int steps,
                                std::uint64_t seed,
                                const std::optional<SpsaConfig> &gains = {});

enum class TransferStrategy { kNone, kStatic, kEvolve };

struct TransferConfig {
    int n_transfers = 4;     // number of optimization sub-blocks
    int steps_per_block = 20;
    int k_prime = -1;        // evolve comparison horizon; -1 = steps_per_block
    TransferStrategy strategy = TransferStrategy::kStatic;

    int resolved_k_prime() const {
        return k_prime < 0 ? steps_per_block : k_prime;
    }
    void validate() const;
};

enum class TransferEventKind {
    kAdoption,        // static: foreign parameters replaced the incumbent
    kRollbackKeep,    // evolve: transferred branch won the comparison
    kRollbackDiscard, // evolve: incumbent won, transfer rolled back
};

struct TransferEvent {
    int block_index;  // 0-based transfer barrier the event belongs to
    int target_graph;
    int source_graph;
    double expected_cut_before; // incumbent's cut at decision time
    double expected_cut_after;  // retained parameters' cut
    TransferEventKind kind;
};

struct MultitaskReport {
    struct PerGraph {
        QaoaParams final_params;
        std::vector<double> expected_cut_trace;
        double final_expected_cut;
        double success_probability;
        int n_adoptions;
        int n_rollbacks;
    };
    std::vector<PerGraph> per_graph;
    std::vector<TransferEvent> events;
    double mean_success;
    double stderr_success;
};

/// Test and reproduction hooks; empty by default.
struct MultitaskOptions {
    std::optional<std::vector<QaoaParams>> initial_params;
    std::optional<std::vector<std::uint64_t>> graph_seeds;
    std::optional<SpsaConfig> gains;
    std::uint64_t shots = 0; // 0 = exact expectations in the transfer rule
};

/// Multitask optimization over same-size graphs: n_transfers rounds of
/// steps_per_block SPSA iterations per graph, each round followed by a
/// cross-evaluation barrier.
///
///   kNone:   independent optimizations, no barrier effect.
///   kStatic: graph i adopts the foreign parameters maximizing its own
///            expected cut when strictly better than its incumbent
///            (smallest source id on ties, self preferred on exact ties).
///   kEvolve: instead of adopting, graph i forks a side branch with the
///            best strictly-better foreign parameters; after k_prime
///            iterations of the next block both branches are compared and
///            only the better survives. The final barrier does not fork
///            (no budget left to compare), so negative transfer can never
///            enter the reported result.
MultitaskReport run_multitask(const std::vector<WeightedGraph> &graphs, int p,
                              const TransferConfig &config, std::uint64_t seed,
                              const MultitaskOptions &options = {});

} // namespace tokq
