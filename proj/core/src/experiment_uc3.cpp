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
#include <cmath>
#include <sstream>

#include "experiment_detail.hpp"
#include "tokq/parallel.hpp"
#include "tokq/rng.hpp"
#include "tokq/stats.hpp"
#include "tokq/svg_plot.hpp"
#include "tokq/vqe.hpp"

namespace tokq {

using detail::fmt_double;
using detail::OrderedJson;

namespace {

OrderedJson echo_config(const Uc3Config &cfg) {
    OrderedJson j;
    j["table"] = cfg.table;
    j["mode"] = cfg.mode;
    j["iters"] = cfg.iters;
    j["runs"] = cfg.runs;
    j["focus-r"] = cfg.focus_r;
    j["spsa-a"] = cfg.spsa_a;
    j["spsa-c"] = cfg.spsa_c;
    j["seed"] = cfg.seed;
    j["out"] = cfg.out;
    j["plot"] = cfg.plot;
    return j;
}

} // namespace

SpsaConfig uc3_gains(const Uc3Config &cfg) {
    SpsaConfig gains = SpsaConfig::defaults(cfg.iters, 0);
    gains.a = cfg.spsa_a;
    gains.c = cfg.spsa_c;
    return gains;
}

RunArtifacts run_uc3(const Uc3Config &cfg) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();

    const H2Table table = load_h2_table(cfg.table);
    const SweepMode mode =
        cfg.mode == "transfer" ? SweepMode::kTransfer : SweepMode::kColdStart;
    const SpsaConfig gains = uc3_gains(cfg);

    std::vector<SweepResult> sweeps(cfg.runs);
    parallel_for(cfg.runs, [&](std::size_t run) {
        sweeps[run] =
            run_sweep(table, gains, mode, derive_seed(cfg.seed, "uc3-run", run));
    });

    // Focus row for the convergence summary and plot.
    std::size_t focus_index = 0;
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        if (std::abs(table.rows[i].r - cfg.focus_r) <
            std::abs(table.rows[focus_index].r - cfg.focus_r))
            focus_index = i;

    std::ostringstream csv;
    csv << "mode,run,r,theta_final,energy,exact_energy,ica\n";
    std::vector<double> focus_icas;
    int focus_unreached = 0;
    for (int run = 0; run < cfg.runs; ++run) {
        for (const auto &row : sweeps[run].rows) {
            csv << cfg.mode << "," << run << "," << fmt_double(row.r) << ","
                << fmt_double(row.theta_final) << "," << fmt_double(row.energy)
                << "," << fmt_double(row.exact_energy) << ","
                << (row.ica ? std::to_string(*row.ica) : std::string("-1"))
                << "\n";
        }
        const auto &focus_row = sweeps[run].rows[focus_index];
        if (focus_row.ica)
            focus_icas.push_back(*focus_row.ica);
        else
            ++focus_unreached;
    }

    RunArtifacts artifacts;
    artifacts.csv = cfg.out;
    detail::write_text_file(artifacts.csv, csv.str());
    if (cfg.plot && !focus_icas.empty()) {
        auto plot_path = std::filesystem::path(cfg.out).replace_extension(".svg");
        emit_boxplot({{cfg.mode + " ICA @ r=" +
                           fmt_double(table.rows[focus_index].r),
                       focus_icas}},
                     plot_path);
        artifacts.plots.push_back(plot_path);
    }

    OrderedJson derived;
    derived["grid_rows"] = table.rows.size();
    derived["focus_r_used"] = table.rows[focus_index].r;
    if (!focus_icas.empty()) {
        const SummaryStats stats = summarize(focus_icas);
        derived["focus_ica_median"] = stats.median;
        derived["focus_ica_iqr"] = stats.iqr;
    }
    derived["focus_ica_unreached"] = focus_unreached;
    derived["transfer"] = {{"what", to_string(transfer_tag(UseCase::kUc3).what)},
                           {"how", to_string(transfer_tag(UseCase::kUc3).how)}};

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    artifacts.manifest = detail::manifest_path_for(artifacts.csv);
    detail::write_manifest(artifacts.manifest, "uc3", echo_config(cfg),
                           std::move(derived), wall);
    return artifacts;
}

} // namespace tokq
