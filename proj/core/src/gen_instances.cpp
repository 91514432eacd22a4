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

#include "experiment_detail.hpp"

namespace tokq {

using detail::OrderedJson;

namespace {

OrderedJson echo_config(const GenInstancesConfig &cfg) {
    OrderedJson j;
    j["n"] = cfg.n;
    j["density"] = cfg.density;
    j["seed"] = cfg.seed;
    j["perturb-fractions"] = cfg.perturb_fractions;
    j["unrelated"] = cfg.unrelated;
    j["out-dir"] = cfg.out_dir;
    return j;
}

} // namespace

RunArtifacts run_gen_instances(const GenInstancesConfig &cfg) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();

    const WeightedGraph base = generate_base_instance(cfg.n, cfg.density, cfg.seed);
    const std::string base_name = "MaxCut_" + std::to_string(cfg.n);
    const auto family = detail::make_instance_family(
        base, base_name, cfg.perturb_fractions, cfg.unrelated, cfg.seed);

    const std::filesystem::path dir(cfg.out_dir);
    std::filesystem::create_directories(dir);

    OrderedJson instances = OrderedJson::array();
    for (const auto &entry : family) {
        const auto path = dir / (entry.name + ".txt");
        save_instance(entry.graph, path);
        instances.push_back({{"name", entry.name},
                             {"file", path.string()},
                             {"n_vertices", entry.graph.n_vertices()},
                             {"n_edges", entry.graph.n_edges()},
                             {"connected", entry.graph.is_connected()}});
    }

    OrderedJson derived;
    derived["instances"] = std::move(instances);

    RunArtifacts artifacts;
    artifacts.manifest = dir / "gen_manifest.json";
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    detail::write_manifest(artifacts.manifest, "gen-instances", echo_config(cfg),
                           std::move(derived), wall);
    return artifacts;
}

} // namespace tokq
