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
#include "tokq/annealing.hpp"

#include <cmath>
#include <stdexcept>

#include "tokq/rng.hpp"

namespace tokq {

void ReverseSchedule::validate() const {
    if (!(s_target > 0.0) || !(s_target < 1.0))
        throw std::invalid_argument("s_target must lie strictly in (0, 1)");
    if (hold_sweeps < 0)
        throw std::invalid_argument("hold_sweeps must be non-negative");
    if (!(ramp_slope > 0.0))
        throw std::invalid_argument("ramp_slope must be positive");
    if (num_reads < 1)
        throw std::invalid_argument("num_reads must be positive");
}

double default_t_max(const IsingModel &model) {
    std::vector<double> local(model.n_spins(), 0.0);
    for (const auto &[key, j] : model.couplings()) {
        local[key.first] += std::abs(j);
        local[key.second] += std::abs(j);
    }
    for (const auto &[i, h] : model.fields())
        local[i] += std::abs(h);
    double t = 0.0;
    for (double v : local)
        t = std::max(t, v);
    return t > 0.0 ? t : 1.0;
}

double default_refinement_t_max(const IsingModel &model) {
    if (model.couplings().empty())
        return 1.0;
    double total = 0.0;
    for (const auto &[key, j] : model.couplings()) {
        (void)key;
        total += std::abs(j);
    }
    const double mean = total / static_cast<double>(model.couplings().size());
    return mean > 0.0 ? 4.0 * mean : 1.0;
}

namespace {

// Flat adjacency for the sweep inner loop.
struct Adjacency {
    std::vector<int> offsets;
    std::vector<std::pair<int, double>> neighbors;
    std::vector<double> field;

    explicit Adjacency(const IsingModel &model)
        : offsets(model.n_spins() + 1, 0), field(model.n_spins(), 0.0) {
        for (const auto &[key, j] : model.couplings()) {
            (void)j;
            ++offsets[key.first + 1];
            ++offsets[key.second + 1];
        }
        for (int i = 0; i < model.n_spins(); ++i)
            offsets[i + 1] += offsets[i];
        neighbors.resize(offsets.back());
        std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
        for (const auto &[key, j] : model.couplings()) {
            neighbors[cursor[key.first]++] = {key.second, j};
            neighbors[cursor[key.second]++] = {key.first, j};
        }
        for (const auto &[i, h] : model.fields())
            field[i] = h;
    }

    double local_field(const std::vector<std::int8_t> &spins, int k) const {
        double f = field[k];
        for (int idx = offsets[k]; idx < offsets[k + 1]; ++idx)
            f += neighbors[idx].second * spins[neighbors[idx].first];
        return f;
    }
};

// Flip energy: energy(flip_k(s)) - energy(s) = -2 s_k (h_k + sum_j J_kj s_j).
double flip_delta(const Adjacency &adj, const std::vector<std::int8_t> &spins,
                  int k) {
    return -2.0 * spins[k] * adj.local_field(spins, k);
}

void metropolis_sweep(const Adjacency &adj, std::vector<std::int8_t> &spins,
                      double temperature, Rng &rng) {
    const int n = static_cast<int>(spins.size());
    for (int k = 0; k < n; ++k) {
        const double delta = flip_delta(adj, spins, k);
        if (delta <= 0.0) {
            spins[k] = -spins[k];
        } else if (temperature > 0.0 &&
                   rng.uniform() < std::exp(-delta / temperature)) {
            spins[k] = -spins[k];
        }
    }
}

// Index-order scan, accept the first strict improvement, repeat until a
// full pass makes no flip.
void zero_temperature_descent(const Adjacency &adj,
                              std::vector<std::int8_t> &spins) {
    const int n = static_cast<int>(spins.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k < n; ++k) {
            if (flip_delta(adj, spins, k) < 0.0) {
                spins[k] = -spins[k];
                changed = true;
            }
        }
    }
}

AnnealResult run_reads(const IsingModel &model, const Adjacency &adj,
                       const std::vector<double> &temperatures, int num_reads,
                       std::uint64_t seed, const SpinConfig *seed_state,
                       bool reinitialize) {
    AnnealResult result;
    result.samples.reserve(num_reads);
    result.per_read_seeds.reserve(num_reads);

    std::vector<std::int8_t> chain_state;
    for (int read = 0; read < num_reads; ++read) {
        const std::uint64_t read_seed = derive_seed(seed, "read", read);
        result.per_read_seeds.push_back(read_seed);
        Rng rng(read_seed);

        std::vector<std::int8_t> spins;
        if (seed_state == nullptr) {
            spins.resize(model.n_spins());
            for (auto &s : spins)
                s = rng.rademacher() > 0 ? 1 : -1;
        } else if (reinitialize || chain_state.empty()) {
            spins = seed_state->spins;
        } else {
            spins = chain_state;
        }

        for (double t : temperatures)
            metropolis_sweep(adj, spins, t, rng);
        zero_temperature_descent(adj, spins);

        chain_state = spins;
        SpinConfig config{std::move(spins)};
        const double e = energy(model, config);
        result.samples.push_back({std::move(config), e});
    }

    result.best = result.samples.front();
    for (const auto &sample : result.samples)
        if (sample.energy < result.best.energy)
            result.best = sample;
    return result;
}

} // namespace

AnnealResult forward_anneal(const IsingModel &model, int n_sweeps, int num_reads,
                            double t_max, std::uint64_t seed) {
    if (n_sweeps < 1 || num_reads < 1)
        throw std::invalid_argument("n_sweeps and num_reads must be positive");
    if (!(t_max > 0.0))
        throw std::invalid_argument("t_max must be positive");
    const Adjacency adj(model);
    std::vector<double> temperatures(n_sweeps);
    for (int i = 0; i < n_sweeps; ++i)
        temperatures[i] = t_max * (1.0 - static_cast<double>(i) / n_sweeps);
    return run_reads(model, adj, temperatures, num_reads, seed, nullptr, true);
}

AnnealResult reverse_anneal(const IsingModel &model, const SpinConfig &seed_state,
                            const ReverseSchedule &schedule, double t_max,
                            std::uint64_t rng_seed) {
    schedule.validate();
    if (seed_state.spins.size() != static_cast<std::size_t>(model.n_spins()))
        throw std::invalid_argument("seed state length does not match model");
    for (auto s : seed_state.spins)
        if (s != 1 && s != -1)
            throw std::invalid_argument("seed state spins must be +1 or -1");
    if (!(t_max > 0.0))
        throw std::invalid_argument("t_max must be positive");

    const double step = 0.01 * schedule.ramp_slope;
    std::vector<double> s_values;
    double s = 1.0;
    while (s > schedule.s_target) {
        s = std::max(s - step, schedule.s_target);
        s_values.push_back(s);
    }
    for (int i = 0; i < schedule.hold_sweeps; ++i)
        s_values.push_back(schedule.s_target);
    s = schedule.s_target;
    while (s < 1.0) {
        s = std::min(s + step, 1.0);
        s_values.push_back(s);
    }

    std::vector<double> temperatures;
    temperatures.reserve(s_values.size());
    for (double sv : s_values)
        temperatures.push_back(t_max * (1.0 - sv));

    const Adjacency adj(model);
    return run_reads(model, adj, temperatures, schedule.num_reads, rng_seed,
                     &seed_state, schedule.reinitialize);
}

} // namespace tokq
