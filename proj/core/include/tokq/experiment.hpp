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
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tokq/graph.hpp"
#include "tokq/spsa.hpp"

namespace tokq {

enum class UseCase { kUc1, kUc2, kUc3 };

enum class TransferWhat { kIndividual, kParameter, kFeatureRepresentation, kRelational };
enum class TransferHow { kSequential, kMultitasking };

struct TransferTag {
    TransferWhat what;
    TransferHow how;
};

/// Protocol taxonomy label per use case: UC1 moves solutions sequentially,
/// UC2 shares circuit parameters across simultaneous tasks, UC3 hands
/// parameters down a sequential chain.
TransferTag transfer_tag(UseCase uc);

const char *to_string(TransferWhat what);
const char *to_string(TransferHow how);

/// Seeded MaxCut instance generation: base graph plus similarity-controlled
/// derivatives, written as edge-list files.
struct GenInstancesConfig {
    int n = 50;
    double density = 0.95;
    std::uint64_t seed = 1;
    std::vector<double> perturb_fractions = {7, 9, 15, 25, 50}; // percent
    bool unrelated = true;
    std::string out_dir = "instances";

    void validate() const;
    void apply(const std::string &key, const std::string &value);
    static std::vector<std::string> knob_names();
};

/// Seeded reverse annealing against a forward-annealing baseline.
struct Uc1Config {
    std::string base = "gen"; // "gen" or a path to an edge-list file
    int n = 50;
    double density = 0.95;
    std::vector<double> fractions = {7, 9, 15, 25, 50}; // percent removed
    bool unrelated = true;
    int reads = 1000;
    int hold = 100;
    double s_target = 0.5;
    double ramp = 2.0;
    bool reinitialize = true;
    int runs = 10;
    int sweeps = 0;       // forward sweeps per read; 0 = 10 * n_spins
    double t_max = 0.0;   // 0 = largest local field of the model
    double t_max_ra = 0.0; // reverse refinement scale; 0 = 4x mean |J|
    std::uint64_t seed = 1;
    std::string out = "results_uc1.csv";
    bool plot = false;

    void validate() const;
    void apply(const std::string &key, const std::string &value);
    static std::vector<std::string> knob_names();
};

/// Multitask QAOA over a family of related graphs.
struct Uc2Config {
    int n = 10;
    int k = 4;
    double modify_frac = 0.20;
    double density = 0.5;
    int p = 2;
    int transfers = 4;
    int steps = 20;
    int k_prime = 0; // 0 = steps
    std::string strategy = "static"; // none | static | evolve
    int seeds = 10;
    double spsa_a = 0.08;
    double spsa_c = 0.1;
    int shots = 0; // finite-shot transfer metric; 0 = exact expectations
    std::uint64_t seed = 1;
    std::string out = "results_uc2.csv";
    bool plot = false;

    void validate() const;
    void apply(const std::string &key, const std::string &value);
    static std::vector<std::string> knob_names();
};

/// Sequential-parameter VQE sweep over the H2 bond-length grid.
struct Uc3Config {
    std::string table = "data/h2_coefficients.csv";
    std::string mode = "transfer"; // transfer | cold-start
    int iters = 100;
    int runs = 100;
    double focus_r = 0.75;
    double spsa_a = 0.1;
    double spsa_c = 0.1;
    std::uint64_t seed = 1;
    std::string out = "results_uc3.csv";
    bool plot = false;

    void validate() const;
    void apply(const std::string &key, const std::string &value);
    static std::vector<std::string> knob_names();
};

struct RunArtifacts {
    std::filesystem::path csv;
    std::filesystem::path manifest;
    std::vector<std::filesystem::path> plots;
};

RunArtifacts run_gen_instances(const GenInstancesConfig &config);
RunArtifacts run_uc1(const Uc1Config &config);
RunArtifacts run_uc2(const Uc2Config &config);
RunArtifacts run_uc3(const Uc3Config &config);

/// UC2 instance family: a seeded root graph and k derivatives, each with
/// modify_frac of the edges swapped for fresh non-edges.
std::vector<WeightedGraph> uc2_graph_family(int n, int k, double density,
                                            double modify_frac,
                                            std::uint64_t seed);

/// Gain schedules the runners feed into SPSA (seed/iterations filled later).
SpsaConfig uc2_gains(const Uc2Config &config);
SpsaConfig uc3_gains(const Uc3Config &config);

/// Flat key=value config file ('#' starts a comment). Keys match the CLI
/// flag names and override any flag already given.
std::map<std::string, std::string> read_config_file(const std::filesystem::path &path);

} // namespace tokq
