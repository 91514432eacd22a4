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
#include <chrono>
#include <sstream>

#include "experiment_detail.hpp"
#include "tokq/parallel.hpp"
#include "tokq/qaoa.hpp"
#include "tokq/rng.hpp"
#include "tokq/stats.hpp"
#include "tokq/svg_plot.hpp"

namespace tokq {

using detail::fmt_double;
using detail::OrderedJson;

namespace {

OrderedJson echo_config(const Uc2Config &cfg) {
    OrderedJson j;
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["modify-frac"] = cfg.modify_frac;
    j["density"] = cfg.density;
    j["p"] = cfg.p;
    j["transfers"] = cfg.transfers;
    j["steps"] = cfg.steps;
    j["k-prime"] = cfg.k_prime;
    j["strategy"] = cfg.strategy;
    j["seeds"] = cfg.seeds;
    j["spsa-a"] = cfg.spsa_a;
    j["spsa-c"] = cfg.spsa_c;
    j["shots"] = cfg.shots;
    j["seed"] = cfg.seed;
    j["out"] = cfg.out;
    j["plot"] = cfg.plot;
    return j;
}

TransferStrategy parse_strategy(const std::string &name) {
    if (name == "none")
        return TransferStrategy::kNone;
    if (name == "static")
        return TransferStrategy::kStatic;
    return TransferStrategy::kEvolve;
}

} // namespace

/// The UC2 instance family: one seeded root, k derivatives with a fixed
/// share of edges swapped for fresh ones.
std::vector<WeightedGraph> uc2_graph_family(int n, int k, double density,
                                            double modify_frac,
                                            std::uint64_t seed) {
    const WeightedGraph root =
        generate_base_instance(n, density, derive_seed(seed, "uc2-root"));
    std::vector<WeightedGraph> graphs;
    graphs.reserve(k);
    for (int i = 0; i < k; ++i)
        graphs.push_back(
            modify_edges(root, modify_frac, derive_seed(seed, "uc2-modify", i)));
    return graphs;
}

SpsaConfig uc2_gains(const Uc2Config &cfg) {
    SpsaConfig gains = SpsaConfig::defaults(cfg.transfers * cfg.steps, 0);
    gains.a = cfg.spsa_a;
    gains.c = cfg.spsa_c;
    return gains;
}

RunArtifacts run_uc2(const Uc2Config &cfg) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();

    const auto graphs =
        uc2_graph_family(cfg.n, cfg.k, cfg.density, cfg.modify_frac, cfg.seed);

    TransferConfig transfer_cfg;
    transfer_cfg.n_transfers = cfg.transfers;
    transfer_cfg.steps_per_block = cfg.steps;
    transfer_cfg.k_prime = cfg.k_prime == 0 ? -1 : cfg.k_prime;
    transfer_cfg.strategy = parse_strategy(cfg.strategy);
    transfer_cfg.validate();

    MultitaskOptions options;
    options.gains = uc2_gains(cfg);
    options.shots = static_cast<std::uint64_t>(cfg.shots);

    std::vector<MultitaskReport> reports(cfg.seeds);
    parallel_for(cfg.seeds, [&](std::size_t rep) {
        reports[rep] = run_multitask(graphs, cfg.p, transfer_cfg,
                                     derive_seed(cfg.seed, "uc2-run", rep),
                                     options);
    });

    std::ostringstream csv;
    csv << "strategy,seed,graph_id,final_expected_cut,success_prob,"
           "n_adoptions,n_rollbacks\n";
    std::vector<double> all_success;
    std::vector<BoxGroup> groups(cfg.k);
    for (int g = 0; g < cfg.k; ++g)
        groups[g].name = "graph_" + std::to_string(g);
    for (int rep = 0; rep < cfg.seeds; ++rep) {
        const auto &report = reports[rep];
        for (int g = 0; g < cfg.k; ++g) {
            const auto &entry = report.per_graph[g];
            csv << cfg.strategy << "," << rep << "," << g << ","
                << fmt_double(entry.final_expected_cut) << ","
                << fmt_double(entry.success_probability) << ","
                << entry.n_adoptions << "," << entry.n_rollbacks << "\n";
            all_success.push_back(entry.success_probability);
            groups[g].values.push_back(entry.success_probability);
        }
    }
    const SummaryStats success = summarize(all_success);

    RunArtifacts artifacts;
    artifacts.csv = cfg.out;
    detail::write_text_file(artifacts.csv, csv.str());
    if (cfg.plot) {
        auto plot_path = std::filesystem::path(cfg.out).replace_extension(".svg");
        emit_boxplot(groups, plot_path);
        artifacts.plots.push_back(plot_path);
    }

    OrderedJson derived;
    derived["mean_success"] = success.mean;
    derived["stderr_success"] = success.mean_stderr;
    derived["transfer"] = {{"what", to_string(transfer_tag(UseCase::kUc2).what)},
                           {"how", to_string(transfer_tag(UseCase::kUc2).how)}};

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    artifacts.manifest = detail::manifest_path_for(artifacts.csv);
    detail::write_manifest(artifacts.manifest, "uc2", echo_config(cfg),
                           std::move(derived), wall);
    return artifacts;
}

} // namespace tokq
