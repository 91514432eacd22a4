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
#include "experiment_detail.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tokq/errors.hpp"
#include "tokq/rng.hpp"

#ifndef TOKQ_VERSION
#define TOKQ_VERSION "0.0.0"
#endif

namespace tokq {

TransferTag transfer_tag(UseCase uc) {
    switch (uc) {
    case UseCase::kUc1:
        return {TransferWhat::kIndividual, TransferHow::kSequential};
    case UseCase::kUc2:
        return {TransferWhat::kParameter, TransferHow::kMultitasking};
    case UseCase::kUc3:
    default:
        return {TransferWhat::kParameter, TransferHow::kSequential};
    }
}

const char *to_string(TransferWhat what) {
    switch (what) {
    case TransferWhat::kIndividual:
        return "individual";
    case TransferWhat::kParameter:
        return "parameter";
    case TransferWhat::kFeatureRepresentation:
        return "feature-representation";
    case TransferWhat::kRelational:
    default:
        return "relational";
    }
}

const char *to_string(TransferHow how) {
    return how == TransferHow::kSequential ? "sequential" : "multitasking";
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open config file " + path.string());
    std::map<std::string, std::string> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value", line_no);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ParseError("empty key", line_no);
        entries[key] = value;
    }
    return entries;
}

namespace detail {

std::string fmt_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string fmt_fraction(double percent) {
    const auto rounded = static_cast<long long>(std::llround(percent));
    if (static_cast<double>(rounded) == percent)
        return std::to_string(rounded);
    return fmt_double(percent);
}

void write_text_file(const std::filesystem::path &path, const std::string &content) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

std::filesystem::path manifest_path_for(const std::filesystem::path &csv) {
    auto p = csv;
    p += ".manifest.json";
    return p;
}

void write_manifest(const std::filesystem::path &path, const std::string &use_case,
                    OrderedJson config_echo, OrderedJson extra,
                    double wall_seconds) {
    OrderedJson manifest;
    manifest["use_case"] = use_case;
    manifest["version"] = TOKQ_VERSION;
    manifest["config"] = std::move(config_echo);
    if (!extra.is_null())
        manifest["derived"] = std::move(extra);
    manifest["wall_time_seconds"] = wall_seconds;
    write_text_file(path, manifest.dump(2) + "\n");
}

std::vector<NamedGraph> make_instance_family(const WeightedGraph &base,
                                             const std::string &base_name,
                                             const std::vector<double> &fractions,
                                             bool unrelated, std::uint64_t seed) {
    std::vector<NamedGraph> family;
    family.push_back({base_name, base});
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        const double percent = fractions[i];
        PerturbationSpec spec{percent / 100.0, derive_seed(seed, "perturb", i),
                              PerturbMode::kRemoveEdges};
        family.push_back(
            {base_name + "_" + fmt_fraction(percent), perturb(base, spec)});
    }
    if (unrelated) {
        PerturbationSpec spec{1.0, derive_seed(seed, "unrelated"),
                              PerturbMode::kRegenerateAll};
        family.push_back({base_name + "_100", perturb(base, spec)});
    }
    return family;
}

std::uint64_t parse_u64(const std::string &key, const std::string &value) {
    std::uint64_t out = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
        throw ConfigError(key, "expected unsigned integer, got '" + value + "'");
    return out;
}

int parse_int(const std::string &key, const std::string &value) {
    int out = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
        throw ConfigError(key, "expected integer, got '" + value + "'");
    return out;
}

double parse_double(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        const double out = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return out;
    } catch (const std::exception &) {
        throw ConfigError(key, "expected number, got '" + value + "'");
    }
}

bool parse_bool(const std::string &key, const std::string &value) {
    if (value == "true" || value == "1" || value == "yes")
        return true;
    if (value == "false" || value == "0" || value == "no")
        return false;
    throw ConfigError(key, "expected boolean, got '" + value + "'");
}

std::vector<double> parse_fraction_list(const std::string &key,
                                        const std::string &value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(parse_double(key, cell));
    if (out.empty())
        throw ConfigError(key, "expected comma-separated list");
    return out;
}

} // namespace detail

namespace {

using detail::parse_bool;
using detail::parse_double;
using detail::parse_fraction_list;
using detail::parse_int;
using detail::parse_u64;

void require(bool ok, const std::string &field, const std::string &message) {
    if (!ok)
        throw ConfigError(field, message);
}

} // namespace

void GenInstancesConfig::validate() const {
    require(n >= 2, "n", "need at least 2 vertices");
    require(density > 0.0 && density <= 1.0, "density", "must lie in (0, 1]");
    for (double f : perturb_fractions)
        require(f >= 0.0 && f <= 100.0, "perturb-fractions",
                "percentages must lie in [0, 100]");
    require(!out_dir.empty(), "out-dir", "must not be empty");
}

void GenInstancesConfig::apply(const std::string &key, const std::string &value) {
    if (key == "n")
        n = parse_int(key, value);
    else if (key == "density")
        density = parse_double(key, value);
    else if (key == "seed")
        seed = parse_u64(key, value);
    else if (key == "perturb-fractions")
        perturb_fractions = parse_fraction_list(key, value);
    else if (key == "unrelated")
        unrelated = parse_bool(key, value);
    else if (key == "out-dir")
        out_dir = value;
    else
        throw ConfigError(key, "unknown configuration key");
}

std::vector<std::string> GenInstancesConfig::knob_names() {
    return {"n", "density", "seed", "perturb-fractions", "unrelated", "out-dir"};
}

void Uc1Config::validate() const {
    require(!base.empty(), "base", "must be 'gen' or a file path");
    if (base == "gen") {
        require(n >= 2, "n", "need at least 2 vertices");
        require(density > 0.0 && density <= 1.0, "density", "must lie in (0, 1]");
    }
    for (double f : fractions)
        require(f >= 0.0 && f <= 100.0, "fractions",
                "percentages must lie in [0, 100]");
    require(reads >= 1, "reads", "must be positive");
    require(hold >= 0, "hold", "must be non-negative");
    require(s_target > 0.0 && s_target < 1.0, "s-target",
            "must lie strictly in (0, 1)");
    require(ramp > 0.0, "ramp", "must be positive");
    require(runs >= 1, "runs", "must be positive");
    require(sweeps >= 0, "sweeps", "must be non-negative (0 = default)");
    require(t_max >= 0.0, "t-max", "must be non-negative (0 = default)");
    require(t_max_ra >= 0.0, "t-max-ra", "must be non-negative (0 = default)");
    require(!out.empty(), "out", "must not be empty");
}

void Uc1Config::apply(const std::string &key, const std::string &value) {
    if (key == "base")
        base = value;
    else if (key == "n")
        n = parse_int(key, value);
    else if (key == "density")
        density = parse_double(key, value);
    else if (key == "fractions")
        fractions = parse_fraction_list(key, value);
    else if (key == "unrelated")
        unrelated = parse_bool(key, value);
    else if (key == "reads")
        reads = parse_int(key, value);
    else if (key == "hold")
        hold = parse_int(key, value);
    else if (key == "s-target")
        s_target = parse_double(key, value);
    else if (key == "ramp")
        ramp = parse_double(key, value);
    else if (key == "reinitialize")
        reinitialize = parse_bool(key, value);
    else if (key == "runs")
        runs = parse_int(key, value);
    else if (key == "sweeps")
        sweeps = parse_int(key, value);
    else if (key == "t-max")
        t_max = parse_double(key, value);
    else if (key == "t-max-ra")
        t_max_ra = parse_double(key, value);
    else if (key == "seed")
        seed = parse_u64(key, value);
    else if (key == "out")
        out = value;
    else if (key == "plot")
        plot = parse_bool(key, value);
    else
        throw ConfigError(key, "unknown configuration key");
}

std::vector<std::string> Uc1Config::knob_names() {
    return {"base", "n", "density", "fractions", "unrelated", "reads", "hold",
            "s-target", "ramp", "reinitialize", "runs", "sweeps", "t-max",
            "t-max-ra", "seed", "out", "plot"};
}

void Uc2Config::validate() const {
    require(n >= 2, "n", "need at least 2 vertices");
    require(k >= 1, "k", "need at least one graph");
    require(modify_frac >= 0.0 && modify_frac <= 1.0, "modify-frac",
            "must lie in [0, 1]");
    require(density > 0.0 && density <= 1.0, "density", "must lie in (0, 1]");
    require(p >= 1, "p", "must be positive");
    require(transfers >= 1, "transfers", "must be positive");
    require(steps >= 1, "steps", "must be positive");
    require(k_prime >= 0 && k_prime <= steps, "k-prime",
            "must lie in [0, steps] (0 = steps)");
    require(strategy == "none" || strategy == "static" || strategy == "evolve",
            "strategy", "must be none, static or evolve");
    require(seeds >= 1, "seeds", "must be positive");
    require(spsa_a > 0.0, "spsa-a", "must be positive");
    require(spsa_c > 0.0, "spsa-c", "must be positive");
    require(shots >= 0, "shots", "must be non-negative (0 = exact)");
    require(!out.empty(), "out", "must not be empty");
}

void Uc2Config::apply(const std::string &key, const std::string &value) {
    if (key == "n")
        n = parse_int(key, value);
    else if (key == "k")
        k = parse_int(key, value);
    else if (key == "modify-frac")
        modify_frac = parse_double(key, value);
    else if (key == "density")
        density = parse_double(key, value);
    else if (key == "p")
        p = parse_int(key, value);
    else if (key == "transfers")
        transfers = parse_int(key, value);
    else if (key == "steps")
        steps = parse_int(key, value);
    else if (key == "k-prime")
        k_prime = parse_int(key, value);
    else if (key == "strategy")
        strategy = value;
    else if (key == "seeds")
        seeds = parse_int(key, value);
    else if (key == "spsa-a")
        spsa_a = parse_double(key, value);
    else if (key == "spsa-c")
        spsa_c = parse_double(key, value);
    else if (key == "shots")
        shots = parse_int(key, value);
    else if (key == "seed")
        seed = parse_u64(key, value);
    else if (key == "out")
        out = value;
    else if (key == "plot")
        plot = parse_bool(key, value);
    else
        throw ConfigError(key, "unknown configuration key");
}

std::vector<std::string> Uc2Config::knob_names() {
    return {"n", "k", "modify-frac", "density", "p", "transfers", "steps",
            "k-prime", "strategy", "seeds", "spsa-a", "spsa-c", "shots",
            "seed", "out", "plot"};
}

void Uc3Config::validate() const {
    require(!table.empty(), "table", "must not be empty");
    require(mode == "transfer" || mode == "cold-start", "mode",
            "must be transfer or cold-start");
    require(iters >= 1, "iters", "must be positive");
    require(runs >= 1, "runs", "must be positive");
    require(focus_r > 0.0, "focus-r", "must be positive");
    require(spsa_a > 0.0, "spsa-a", "must be positive");
    require(spsa_c > 0.0, "spsa-c", "must be positive");
    require(!out.empty(), "out", "must not be empty");
}

void Uc3Config::apply(const std::string &key, const std::string &value) {
    if (key == "table")
        table = value;
    else if (key == "mode")
        mode = value;
    else if (key == "iters")
        iters = parse_int(key, value);
    else if (key == "runs")
        runs = parse_int(key, value);
    else if (key == "focus-r")
        focus_r = parse_double(key, value);
    else if (key == "spsa-a")
        spsa_a = parse_double(key, value);
    else if (key == "spsa-c")
        spsa_c = parse_double(key, value);
    else if (key == "seed")
        seed = parse_u64(key, value);
    else if (key == "out")
        out = value;
    else if (key == "plot")
        plot = parse_bool(key, value);
    else
        throw ConfigError(key, "unknown configuration key");
}

std::vector<std::string> Uc3Config::knob_names() {
    return {"table", "mode", "iters", "runs", "focus-r", "spsa-a", "spsa-c",
            "seed", "out", "plot"};
}

} // namespace tokq
