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
#include <vector>

namespace tokq {

struct Edge {
    int u;
    int v;
    double weight;
};

/// Undirected weighted graph, the MaxCut task instance.
///
/// Invariants enforced on construction: 0 <= u < v < n_vertices for every
/// edge, edges sorted by (u, v) with no duplicates, weights strictly
/// positive and finite.
class WeightedGraph {
  public:
    WeightedGraph(int n_vertices, std::vector<Edge> edges);

    int n_vertices() const { return n_vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }
    std::size_t n_edges() const { return edges_.size(); }
    double total_weight() const;
    bool is_connected() const;

  private:
    int n_vertices_;
    std::vector<Edge> edges_;
};

/// Two-sided vertex assignment; side[v] is 0 or 1.
struct Partition {
    std::vector<std::uint8_t> side;

    static Partition from_index(std::uint64_t index, int n_vertices);
    std::uint64_t to_index() const;
    Partition complemented() const;

    bool operator==(const Partition &) const = default;
};

enum class PerturbMode {
    kRemoveEdges,   // delete round(fraction * |E|) randomly chosen edges
    kRegenerateAll, // fresh graph, same vertex count and expected density
};

struct PerturbationSpec {
    double fraction = 0.0;
    std::uint64_t seed = 0;
    PerturbMode mode = PerturbMode::kRemoveEdges;
};

/// Erdos-Renyi style instance with unit weights: every pair independently
/// kept with probability `density`. Deterministic in (n, density, seed).
/// Connectedness is not guaranteed; callers record it where it matters.
WeightedGraph generate_base_instance(int n, double density, std::uint64_t seed);

/// Edge-list text format: first line `n_vertices`, then `u v w` per line.
WeightedGraph load_instance(const std::filesystem::path &path);
void save_instance(const WeightedGraph &graph, const std::filesystem::path &path);

WeightedGraph perturb(const WeightedGraph &graph, const PerturbationSpec &spec);

/// Removes round(fraction * |E|) seeded-random edges and inserts the same
/// number of fresh non-edges (unit weight), keeping |E| constant.
WeightedGraph modify_edges(const WeightedGraph &graph, double fraction,
                           std::uint64_t seed);

/// Sum of weights of edges whose endpoints lie on different sides.
double cut_value(const WeightedGraph &graph, const Partition &partition);

struct BruteForceResult {
    double best_value;
    /// All optimizers with vertex 0 on side 0 (one representative per
    /// global-flip pair), in enumeration order.
    std::vector<Partition> optimal_partitions;
};

/// Exhaustive MaxCut over 2^(n-1) partitions (vertex 0 pinned to side 0).
/// Throws CapacityError for n_vertices > 24.
BruteForceResult brute_force_maxcut(const WeightedGraph &graph);

} // namespace tokq
