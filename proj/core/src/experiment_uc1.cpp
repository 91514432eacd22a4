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
#include "tokq/annealing.hpp"
#include "tokq/parallel.hpp"
#include "tokq/rng.hpp"
#include "tokq/stats.hpp"
#include "tokq/svg_plot.hpp"

namespace tokq {

using detail::fmt_double;
using detail::OrderedJson;

namespace {

OrderedJson echo_config(const Uc1Config &cfg) {
    OrderedJson j;
    j["base"] = cfg.base;
    j["n"] = cfg.n;
    j["density"] = cfg.density;
    j["fractions"] = cfg.fractions;
    j["unrelated"] = cfg.unrelated;
    j["reads"] = cfg.reads;
    j["hold"] = cfg.hold;
    j["s-target"] = cfg.s_target;
    j["ramp"] = cfg.ramp;
    j["reinitialize"] = cfg.reinitialize;
    j["runs"] = cfg.runs;
    j["sweeps"] = cfg.sweeps;
    j["t-max"] = cfg.t_max;
    j["t-max-ra"] = cfg.t_max_ra;
    j["seed"] = cfg.seed;
    j["out"] = cfg.out;
    j["plot"] = cfg.plot;
    return j;
}

} // namespace

RunArtifacts run_uc1(const Uc1Config &cfg) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();

    const WeightedGraph base =
        cfg.base == "gen"
            ? generate_base_instance(cfg.n, cfg.density, cfg.seed)
            : load_instance(cfg.base);
    const std::string base_name = "MaxCut_" + std::to_string(base.n_vertices());

    // Condition 0 is the forward-annealing baseline on the target itself;
    // the remaining conditions seed reverse annealing from each relative.
    const auto family = detail::make_instance_family(
        base, base_name, cfg.fractions, cfg.unrelated, cfg.seed);
    std::vector<std::string> condition_names{"baseline"};
    for (std::size_t i = 1; i < family.size(); ++i)
        condition_names.push_back(family[i].name);

    const IsingModel target = ising_from_maxcut(base);
    const int target_sweeps =
        cfg.sweeps > 0 ? cfg.sweeps : 10 * target.n_spins();
    const double target_t_max = cfg.t_max > 0.0 ? cfg.t_max : default_t_max(target);
    // The refinement phase runs cooler than the forward peak, so the hold
    // explores the seed's neighborhood instead of re-randomizing it.
    const double ra_t_max =
        cfg.t_max_ra > 0.0 ? cfg.t_max_ra : default_refinement_t_max(target);
    const ReverseSchedule schedule{cfg.s_target, cfg.hold, cfg.ramp, cfg.reads,
                                   cfg.reinitialize};
    schedule.validate();

    const std::size_t n_conditions = condition_names.size();
    std::vector<double> best_cuts(n_conditions * cfg.runs, 0.0);

    std::vector<IsingModel> source_models;
    std::vector<double> source_t_max;
    source_models.reserve(family.size() - 1);
    for (std::size_t i = 1; i < family.size(); ++i) {
        source_models.push_back(ising_from_maxcut(family[i].graph));
        source_t_max.push_back(cfg.t_max > 0.0 ? cfg.t_max
                                               : default_t_max(source_models.back()));
    }

    parallel_for(n_conditions * cfg.runs, [&](std::size_t job) {
        const std::size_t cond = job / cfg.runs;
        const int run = static_cast<int>(job % cfg.runs);
        if (cond == 0) {
            const auto result =
                forward_anneal(target, target_sweeps, cfg.reads, target_t_max,
                               derive_seed(cfg.seed, "uc1-baseline", run));
            best_cuts[job] = -result.best.energy;
            return;
        }
        // Solve the source instance forward, then refine the target from
        // its best solution.
        const auto &source_model = source_models[cond - 1];
        const std::string &source_name = condition_names[cond];
        const auto solved = forward_anneal(
            source_model, cfg.sweeps > 0 ? cfg.sweeps : 10 * source_model.n_spins(),
            cfg.reads, source_t_max[cond - 1],
            derive_seed(cfg.seed, "uc1-solve-" + source_name, run));
        const auto refined = reverse_anneal(
            target, solved.best.config, schedule, ra_t_max,
            derive_seed(cfg.seed, "uc1-ra-" + source_name, run));
        best_cuts[job] = -refined.best.energy;
    });

    std::ostringstream csv;
    csv << "source_instance,run,best_cut,median_cut,iqr\n";
    std::vector<BoxGroup> groups;
    OrderedJson stats_json;
    for (std::size_t cond = 0; cond < n_conditions; ++cond) {
        std::vector<double> values(best_cuts.begin() + cond * cfg.runs,
                                   best_cuts.begin() + (cond + 1) * cfg.runs);
        const SummaryStats stats = summarize(values);
        for (int run = 0; run < cfg.runs; ++run)
            csv << condition_names[cond] << "," << run << ","
                << fmt_double(values[run]) << "," << fmt_double(stats.median)
                << "," << fmt_double(stats.iqr) << "\n";
        groups.push_back({condition_names[cond], values});
        stats_json[condition_names[cond]] = {{"median", stats.median},
                                             {"iqr", stats.iqr}};
    }

    RunArtifacts artifacts;
    artifacts.csv = cfg.out;
    detail::write_text_file(artifacts.csv, csv.str());
    if (cfg.plot) {
        auto plot_path = std::filesystem::path(cfg.out).replace_extension(".svg");
        emit_boxplot(groups, plot_path);
        artifacts.plots.push_back(plot_path);
    }

    OrderedJson derived;
    derived["base_instance"] = base_name;
    derived["base_edges"] = base.n_edges();
    derived["base_connected"] = base.is_connected();
    derived["t_max_effective"] = target_t_max;
    derived["t_max_ra_effective"] = ra_t_max;
    derived["sweeps_effective"] = target_sweeps;
    derived["transfer"] = {{"what", to_string(transfer_tag(UseCase::kUc1).what)},
                           {"how", to_string(transfer_tag(UseCase::kUc1).how)}};
    derived["stats"] = std::move(stats_json);

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    artifacts.manifest = detail::manifest_path_for(artifacts.csv);
    detail::write_manifest(artifacts.manifest, "uc1", echo_config(cfg),
                           std::move(derived), wall);
    return artifacts;
}

} // namespace tokq
