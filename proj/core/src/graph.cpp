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
#include "tokq/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "tokq/errors.hpp"
#include "tokq/parallel.hpp"
#include "tokq/rng.hpp"

namespace tokq {

WeightedGraph::WeightedGraph(int n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
    if (n_vertices_ < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return std::pair{a.u, a.v} < std::pair{b.u, b.v};
    });
    const Edge *prev = nullptr;
    for (const Edge &e : edges_) {
        if (e.u < 0 || e.v >= n_vertices_ || e.u >= e.v)
            throw std::invalid_argument(
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                ") violates 0 <= u < v < n");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw std::invalid_argument("edge weight must be positive and finite");
        if (prev && prev->u == e.u && prev->v == e.v)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) +
                                        "," + std::to_string(e.v) + ")");
        prev = &e;
    }
}

double WeightedGraph::total_weight() const {
    double total = 0.0;
    for (const Edge &e : edges_)
        total += e.weight;
    return total;
}

bool WeightedGraph::is_connected() const {
    if (n_vertices_ <= 1)
        return true;
    std::vector<std::vector<int>> adj(n_vertices_);
    for (const Edge &e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n_vertices_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_vertices_;
}

Partition Partition::from_index(std::uint64_t index, int n_vertices) {
    Partition p;
    p.side.resize(n_vertices);
    for (int v = 0; v < n_vertices; ++v)
        p.side[v] = static_cast<std::uint8_t>((index >> v) & 1u);
    return p;
}

std::uint64_t Partition::to_index() const {
    std::uint64_t index = 0;
    for (std::size_t v = 0; v < side.size(); ++v)
        index |= static_cast<std::uint64_t>(side[v] & 1u) << v;
    return index;
}

Partition Partition::complemented() const {
    Partition p = *this;
    for (auto &s : p.side)
        s ^= 1u;
    return p;
}

WeightedGraph generate_base_instance(int n, double density, std::uint64_t seed) {
    if (n < 2)
        throw std::invalid_argument("instance needs n >= 2 vertices");
    if (!(density > 0.0) || density > 1.0)
        throw std::invalid_argument("density must lie in (0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n - 1; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < density)
                edges.push_back({u, v, 1.0});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph load_instance(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::string line;
    int line_no = 0;
    int n_vertices = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ss(line);
        if (!(ss >> n_vertices) || n_vertices < 1)
            throw ParseError("expected vertex count", line_no);
        break;
    }
    if (n_vertices == 0)
        throw ParseError("empty instance file " + path.string());

    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ss(line);
        Edge e;
        if (!(ss >> e.u >> e.v >> e.weight))
            throw ParseError("expected `u v w`", line_no);
        std::string rest;
        if (ss >> rest)
            throw ParseError("trailing token '" + rest + "'", line_no);
        if (e.u == e.v)
            throw ParseError("self-loop on vertex " + std::to_string(e.u), line_no);
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_vertices)
            throw ParseError("vertex id out of range", line_no);
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw ParseError("weight must be positive and finite", line_no);
        if (!seen.insert({e.u, e.v}).second)
            throw ParseError("duplicate edge (" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) + ")",
                             line_no);
        edges.push_back(e);
    }
    return WeightedGraph(n_vertices, std::move(edges));
}

namespace {

std::string format_weight(double w) {
    std::ostringstream ss;
    ss.precision(17);
    ss << w;
    return ss.str();
}

} // namespace

void save_instance(const WeightedGraph &graph, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << graph.n_vertices() << "\n";
    for (const Edge &e : graph.edges())
        out << e.u << " " << e.v << " " << format_weight(e.weight) << "\n";
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

WeightedGraph perturb(const WeightedGraph &graph, const PerturbationSpec &spec) {
    if (spec.fraction < 0.0 || spec.fraction > 1.0)
        throw std::invalid_argument("perturbation fraction must lie in [0, 1]");
    if (spec.mode == PerturbMode::kRegenerateAll) {
        const auto pairs = static_cast<double>(graph.n_vertices()) *
                           (graph.n_vertices() - 1) / 2.0;
        const double density =
            pairs > 0 ? static_cast<double>(graph.n_edges()) / pairs : 1.0;
        return generate_base_instance(graph.n_vertices(), density, spec.seed);
    }

    const auto n_remove = static_cast<std::size_t>(
        std::llround(spec.fraction * static_cast<double>(graph.n_edges())));
    if (n_remove == 0)
        return graph;

    // Partial Fisher-Yates: first n_remove slots hold the removed edges.
    std::vector<std::size_t> order(graph.n_edges());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    Rng rng(spec.seed);
    for (std::size_t i = 0; i < n_remove; ++i) {
        const std::size_t j = i + rng.uniform_below(order.size() - i);
        std::swap(order[i], order[j]);
    }
    std::vector<char> removed(graph.n_edges(), 0);
    for (std::size_t i = 0; i < n_remove; ++i)
        removed[order[i]] = 1;

    std::vector<Edge> kept;
    kept.reserve(graph.n_edges() - n_remove);
    for (std::size_t i = 0; i < graph.n_edges(); ++i)
        if (!removed[i])
            kept.push_back(graph.edges()[i]);
    return WeightedGraph(graph.n_vertices(), std::move(kept));
}

WeightedGraph modify_edges(const WeightedGraph &graph, double fraction,
                           std::uint64_t seed) {
    if (fraction < 0.0 || fraction > 1.0)
        throw std::invalid_argument("modification fraction must lie in [0, 1]");
    const auto n_swap = static_cast<std::size_t>(
        std::llround(fraction * static_cast<double>(graph.n_edges())));
    if (n_swap == 0)
        return graph;

    std::set<std::pair<int, int>> present;
    for (const Edge &e : graph.edges())
        present.insert({e.u, e.v});
    std::vector<std::pair<int, int>> absent;
    for (int u = 0; u < graph.n_vertices() - 1; ++u)
        for (int v = u + 1; v < graph.n_vertices(); ++v)
            if (!present.count({u, v}))
                absent.push_back({u, v});
    if (absent.size() < n_swap)
        throw std::invalid_argument("not enough non-edges to keep |E| constant");

    WeightedGraph thinned =
        perturb(graph, {fraction, derive_seed(seed, "modify-remove"),
                        PerturbMode::kRemoveEdges});

    Rng rng(derive_seed(seed, "modify-add"));
    for (std::size_t i = 0; i < n_swap; ++i) {
        const std::size_t j = i + rng.uniform_below(absent.size() - i);
        std::swap(absent[i], absent[j]);
    }
    std::vector<Edge> edges = thinned.edges();
    for (std::size_t i = 0; i < n_swap; ++i)
        edges.push_back({absent[i].first, absent[i].second, 1.0});
    return WeightedGraph(graph.n_vertices(), std::move(edges));
}

double cut_value(const WeightedGraph &graph, const Partition &partition) {
    if (partition.side.size() != static_cast<std::size_t>(graph.n_vertices()))
        throw std::invalid_argument("partition length does not match graph");
    double value = 0.0;
    for (const Edge &e : graph.edges())
        if (partition.side[e.u] != partition.side[e.v])
            value += e.weight;
    return value;
}

namespace {

// Same edge order and accumulation order as cut_value, so tied values
// compare bit-equal.
double cut_of_mask(const WeightedGraph &graph, std::uint64_t mask) {
    double value = 0.0;
    for (const Edge &e : graph.edges())
        if (((mask >> e.u) ^ (mask >> e.v)) & 1u)
            value += e.weight;
    return value;
}

struct Shard {
    double best = -1.0;
    std::vector<std::uint64_t> masks;
};

} // namespace

BruteForceResult brute_force_maxcut(const WeightedGraph &graph) {
    const int n = graph.n_vertices();
    if (n > 24)
        throw CapacityError("brute force bounded to 24 vertices, got " +
                            std::to_string(n));
    // Vertex 0 stays on side 0: the complement of any partition cuts the
    // same edges, so half the space suffices.
    const std::uint64_t count = 1ULL << (n - 1);
    const unsigned workers = worker_count(count);
    const std::uint64_t chunk = (count + workers - 1) / workers;

    std::vector<Shard> shards(workers);
    parallel_for(workers, [&](std::size_t w) {
        Shard &shard = shards[w];
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(count, lo + chunk);
        for (std::uint64_t half = lo; half < hi; ++half) {
            const std::uint64_t mask = half << 1;
            const double value = cut_of_mask(graph, mask);
            if (value > shard.best) {
                shard.best = value;
                shard.masks.assign(1, mask);
            } else if (value == shard.best) {
                shard.masks.push_back(mask);
            }
        }
    });

    // Merge in shard order: associative max, set union on ties. Equivalent
    // to the sequential scan because shards cover ascending ranges.
    BruteForceResult result;
    result.best_value = -1.0;
    std::vector<std::uint64_t> best_masks;
    for (const Shard &shard : shards) {
        if (shard.best > result.best_value) {
            result.best_value = shard.best;
            best_masks = shard.masks;
        } else if (shard.best == result.best_value) {
            best_masks.insert(best_masks.end(), shard.masks.begin(),
                              shard.masks.end());
        }
    }
    result.optimal_partitions.reserve(best_masks.size());
    for (std::uint64_t mask : best_masks)
        result.optimal_partitions.push_back(Partition::from_index(mask, n));
    return result;
}

} // namespace tokq
