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

// Internal helpers shared by the experiment runners. Not installed.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "tokq/experiment.hpp"
#include "tokq/graph.hpp"

namespace tokq::detail {

using OrderedJson = nlohmann::ordered_json;

/// Shortest round-trip decimal form; identical bytes on every rerun.
std::string fmt_double(double value);

/// Percent label: 7.0 -> "7", 12.5 -> "12.5".
std::string fmt_fraction(double percent);

void write_text_file(const std::filesystem::path &path, const std::string &content);

/// Manifest beside the CSV: <csv>.manifest.json.
std::filesystem::path manifest_path_for(const std::filesystem::path &csv);

void write_manifest(const std::filesystem::path &path, const std::string &use_case,
                    OrderedJson config_echo, OrderedJson extra,
                    double wall_seconds);

struct NamedGraph {
    std::string name;
    WeightedGraph graph;
};

/// Base instance plus its perturbed relatives, shared by gen-instances and
/// the UC1 runner so both produce the same family for the same seed.
/// Order: base, one graph per fraction, then the regenerated instance when
/// `unrelated` is set.
std::vector<NamedGraph> make_instance_family(const WeightedGraph &base,
                                             const std::string &base_name,
                                             const std::vector<double> &fractions,
                                             bool unrelated, std::uint64_t seed);

std::uint64_t parse_u64(const std::string &key, const std::string &value);
double parse_double(const std::string &key, const std::string &value);
int parse_int(const std::string &key, const std::string &value);
bool parse_bool(const std::string &key, const std::string &value);
std::vector<double> parse_fraction_list(const std::string &key,
                                        const std::string &value);

} // namespace tokq::detail
