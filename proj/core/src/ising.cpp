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
#include "tokq/ising.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tokq {

IsingModel::IsingModel(int n_spins,
                       std::map<std::pair<int, int>, double> couplings,
                       std::map<int, double> fields, double offset)
    : n_spins_(n_spins), couplings_(std::move(couplings)),
      fields_(std::move(fields)), offset_(offset) {
    if (n_spins_ < 1)
        throw std::invalid_argument("Ising model needs at least one spin");
    for (const auto &[key, j] : couplings_) {
        const auto [i, k] = key;
        if (i < 0 || k >= n_spins_ || i >= k)
            throw std::invalid_argument("coupling (" + std::to_string(i) + "," +
                                        std::to_string(k) +
                                        ") violates 0 <= i < j < n");
        if (!std::isfinite(j))
            throw std::invalid_argument("coupling must be finite");
    }
    for (const auto &[i, h] : fields_) {
        if (i < 0 || i >= n_spins_)
            throw std::invalid_argument("field index out of range");
        if (!std::isfinite(h))
            throw std::invalid_argument("field must be finite");
    }
}

IsingModel ising_from_maxcut(const WeightedGraph &graph) {
    std::map<std::pair<int, int>, double> couplings;
    double total = 0.0;
    for (const Edge &e : graph.edges()) {
        couplings[{e.u, e.v}] = e.weight / 2.0;
        total += e.weight;
    }
    return IsingModel(graph.n_vertices(), std::move(couplings), {}, -total / 2.0);
}

double energy(const IsingModel &model, const SpinConfig &config) {
    if (config.spins.size() != static_cast<std::size_t>(model.n_spins()))
        throw std::invalid_argument("spin configuration length mismatch");
    double e = model.offset();
    for (const auto &[key, j] : model.couplings())
        e += j * config.spins[key.first] * config.spins[key.second];
    for (const auto &[i, h] : model.fields())
        e += h * config.spins[i];
    return e;
}

Partition partition_from_spins(const SpinConfig &config) {
    Partition p;
    p.side.reserve(config.spins.size());
    for (auto s : config.spins)
        p.side.push_back(s > 0 ? 0 : 1);
    return p;
}

SpinConfig spins_from_partition(const Partition &partition) {
    SpinConfig c;
    c.spins.reserve(partition.side.size());
    for (auto s : partition.side)
        c.spins.push_back(s == 0 ? 1 : -1);
    return c;
}

} // namespace tokq
