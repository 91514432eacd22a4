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

// tokq: experiment harness for knowledge-transfer protocols on classical
// simulators of quantum optimization algorithms.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tokq/errors.hpp"
#include "tokq/experiment.hpp"
#include "tokq/h2_sto3g.hpp"

#ifndef TOKQ_VERSION
#define TOKQ_VERSION "0.0.0"
#endif

namespace {

void apply_config_file(const std::string &path, auto &config) {
    if (path.empty())
        return;
    for (const auto &[key, value] : tokq::read_config_file(path))
        config.apply(key, value);
}

void report_artifacts(const tokq::RunArtifacts &artifacts) {
    if (!artifacts.csv.empty())
        std::cout << "wrote " << artifacts.csv.string() << "\n";
    if (!artifacts.manifest.empty())
        std::cout << "wrote " << artifacts.manifest.string() << "\n";
    for (const auto &plot : artifacts.plots)
        std::cout << "wrote " << plot.string() << "\n";
}

int fail_json(const std::string &message, const std::string &field = {}) {
    nlohmann::ordered_json err;
    err["error"]["message"] = message;
    if (!field.empty())
        err["error"]["field"] = field;
    std::cerr << err.dump() << std::endl;
    return 2;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Transfer-of-knowledge experiments for quantum-algorithm "
                 "simulators (seeded reverse annealing, multitask QAOA, "
                 "sequential VQE)"};
    app.set_version_flag("--version", TOKQ_VERSION);
    app.require_subcommand(1);

    tokq::GenInstancesConfig gen_cfg;
    std::string gen_config_file;
    auto *gen = app.add_subcommand("gen-instances",
                                   "Generate a MaxCut instance family");
    gen->add_option("--n", gen_cfg.n, "Vertex count");
    gen->add_option("--density", gen_cfg.density, "Edge probability");
    gen->add_option("--seed", gen_cfg.seed, "Master seed");
    gen->add_option("--perturb-fractions", gen_cfg.perturb_fractions,
                    "Percent of edges to remove per derivative")
        ->delimiter(',');
    gen->add_flag("--unrelated,!--no-unrelated", gen_cfg.unrelated,
                  "Also emit a regenerated, unrelated instance");
    gen->add_option("--out-dir", gen_cfg.out_dir, "Output directory");
    gen->add_option("--config", gen_config_file,
                    "key=value file overriding flags");

    tokq::Uc1Config uc1_cfg;
    std::string uc1_config_file;
    auto *uc1 = app.add_subcommand(
        "uc1", "Seeded reverse annealing vs forward baseline");
    uc1->add_option("--base", uc1_cfg.base, "'gen' or an edge-list file");
    uc1->add_option("--n", uc1_cfg.n, "Vertex count when generating");
    uc1->add_option("--density", uc1_cfg.density, "Density when generating");
    uc1->add_option("--fractions", uc1_cfg.fractions,
                    "Percent of edges removed per source instance")
        ->delimiter(',');
    uc1->add_flag("--unrelated,!--no-unrelated", uc1_cfg.unrelated,
                  "Include the unrelated regenerated source");
    uc1->add_option("--reads", uc1_cfg.reads, "Reads per anneal call");
    uc1->add_option("--hold", uc1_cfg.hold, "Hold sweeps at s_target");
    uc1->add_option("--s-target", uc1_cfg.s_target, "Reverse target fraction");
    uc1->add_option("--ramp", uc1_cfg.ramp, "Ramp slope (0.01 s per sweep unit)");
    uc1->add_flag("--reinitialize,!--no-reinitialize", uc1_cfg.reinitialize,
                  "Restart every read from the seed state");
    uc1->add_option("--runs", uc1_cfg.runs, "Independent runs per condition");
    uc1->add_option("--sweeps", uc1_cfg.sweeps,
                    "Forward sweeps per read (0 = 10n)");
    uc1->add_option("--t-max", uc1_cfg.t_max,
                    "Peak temperature (0 = model default)");
    uc1->add_option("--t-max-ra", uc1_cfg.t_max_ra,
                    "Reverse refinement temperature (0 = 4x mean coupling)");
    uc1->add_option("--seed", uc1_cfg.seed, "Master seed");
    uc1->add_option("--out", uc1_cfg.out, "Results CSV path");
    uc1->add_flag("--plot", uc1_cfg.plot, "Emit an SVG boxplot beside the CSV");
    uc1->add_option("--config", uc1_config_file, "key=value file overriding flags");

    tokq::Uc2Config uc2_cfg;
    std::string uc2_config_file;
    auto *uc2 = app.add_subcommand("uc2", "Multitask QAOA transfer");
    uc2->add_option("--n", uc2_cfg.n, "Vertex count");
    uc2->add_option("--k", uc2_cfg.k, "Number of graphs");
    uc2->add_option("--modify-frac", uc2_cfg.modify_frac,
                    "Share of edges swapped per derivative");
    uc2->add_option("--density", uc2_cfg.density, "Root graph density");
    uc2->add_option("--p", uc2_cfg.p, "QAOA depth");
    uc2->add_option("--transfers", uc2_cfg.transfers, "Optimization sub-blocks");
    uc2->add_option("--steps", uc2_cfg.steps, "SPSA iterations per block");
    uc2->add_option("--k-prime", uc2_cfg.k_prime,
                    "Evolve comparison horizon (0 = steps)");
    uc2->add_option("--strategy", uc2_cfg.strategy, "none | static | evolve");
    uc2->add_option("--seeds", uc2_cfg.seeds, "Independent repetitions");
    uc2->add_option("--spsa-a", uc2_cfg.spsa_a, "SPSA gain a");
    uc2->add_option("--spsa-c", uc2_cfg.spsa_c, "SPSA perturbation c");
    uc2->add_option("--shots", uc2_cfg.shots,
                    "Shots per transfer-metric evaluation (0 = exact)");
    uc2->add_option("--seed", uc2_cfg.seed, "Master seed");
    uc2->add_option("--out", uc2_cfg.out, "Results CSV path");
    uc2->add_flag("--plot", uc2_cfg.plot, "Emit an SVG boxplot beside the CSV");
    uc2->add_option("--config", uc2_config_file, "key=value file overriding flags");

    tokq::Uc3Config uc3_cfg;
    std::string uc3_config_file;
    auto *uc3 = app.add_subcommand("uc3", "Sequential-parameter VQE sweep");
    uc3->add_option("--table", uc3_cfg.table, "H2 coefficient CSV");
    uc3->add_option("--mode", uc3_cfg.mode, "transfer | cold-start");
    uc3->add_option("--iters", uc3_cfg.iters, "SPSA iterations per bond length");
    uc3->add_option("--runs", uc3_cfg.runs, "Independent repetitions");
    uc3->add_option("--focus-r", uc3_cfg.focus_r,
                    "Bond length for the convergence summary");
    uc3->add_option("--spsa-a", uc3_cfg.spsa_a, "SPSA gain a");
    uc3->add_option("--spsa-c", uc3_cfg.spsa_c, "SPSA perturbation c");
    uc3->add_option("--seed", uc3_cfg.seed, "Master seed");
    uc3->add_option("--out", uc3_cfg.out, "Results CSV path");
    uc3->add_flag("--plot", uc3_cfg.plot, "Emit an SVG boxplot beside the CSV");
    uc3->add_option("--config", uc3_config_file, "key=value file overriding flags");

    double h2_r_min = 0.20, h2_r_max = 2.85, h2_dr = 0.05;
    std::string h2_out = "data/h2_coefficients.csv";
    auto *genh2 = app.add_subcommand(
        "gen-h2-table", "Regenerate the H2 coefficient table from scratch");
    genh2->add_option("--r-min", h2_r_min, "Smallest bond length (Angstrom)");
    genh2->add_option("--r-max", h2_r_max, "Largest bond length (Angstrom)");
    genh2->add_option("--dr", h2_dr, "Grid step (Angstrom)");
    genh2->add_option("--out", h2_out, "Output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        std::cerr << nlohmann::ordered_json{
                         {"error", {{"message", e.what()}}}}.dump()
                  << std::endl;
        return e.get_exit_code();
    }

    try {
        if (gen->parsed()) {
            apply_config_file(gen_config_file, gen_cfg);
            report_artifacts(tokq::run_gen_instances(gen_cfg));
        } else if (uc1->parsed()) {
            apply_config_file(uc1_config_file, uc1_cfg);
            report_artifacts(tokq::run_uc1(uc1_cfg));
        } else if (uc2->parsed()) {
            apply_config_file(uc2_config_file, uc2_cfg);
            report_artifacts(tokq::run_uc2(uc2_cfg));
        } else if (uc3->parsed()) {
            apply_config_file(uc3_config_file, uc3_cfg);
            report_artifacts(tokq::run_uc3(uc3_cfg));
        } else if (genh2->parsed()) {
            tokq::save_h2_table(tokq::generate_h2_table(h2_r_min, h2_r_max, h2_dr),
                                h2_out);
            std::cout << "wrote " << h2_out << "\n";
        }
    } catch (const tokq::ConfigError &e) {
        return fail_json(e.what(), e.field());
    } catch (const std::exception &e) {
        return fail_json(e.what());
    }
    return 0;
}
