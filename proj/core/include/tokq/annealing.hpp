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
#include <vector>

#include "tokq/ising.hpp"

namespace tokq {

/// Piecewise-linear reverse schedule over the anneal fraction s:
/// 1 -> s_target (ramp), hold, s_target -> 1 (ramp). The Metropolis
/// temperature follows T(s) = t_max * (1 - s); each ramp sweep moves s by
/// 0.01 * ramp_slope. A terminal zero-temperature descent runs after the
/// schedule, so every reported state is single-flip stable.
struct ReverseSchedule {
    double s_target = 0.5;
    int hold_sweeps = 100;
    double ramp_slope = 2.0;
    int num_reads = 1000;
    bool reinitialize = true;

    void validate() const;
};

struct AnnealResult {
    struct Sample {
        SpinConfig config;
        double energy;
    };
    std::vector<Sample> samples; // one per read
    Sample best;                 // min energy, first read on ties
    std::vector<std::uint64_t> per_read_seeds;
};

/// Largest local field max_i (|h_i| + sum_j |J_ij|); at this temperature
/// almost every single flip is accepted.
double default_t_max(const IsingModel &model);

/// Peak temperature for seeded refinement: 4x the mean absolute coupling,
/// so the hold phase (at half of it) trades moves on the scale of a couple
/// of couplings without re-randomizing the seed.
double default_refinement_t_max(const IsingModel &model);

/// One read: random initial spins, n_sweeps Metropolis sweeps with the
/// temperature annealed linearly t_max -> 0, then zero-temperature descent
/// to a single-flip-stable state.
AnnealResult forward_anneal(const IsingModel &model, int n_sweeps, int num_reads,
                            double t_max, std::uint64_t seed);

/// Seeded refinement: each read starts from seed_state (or from the
/// previous read's final state when reinitialize is false) and follows the
/// reverse schedule before the terminal descent.
AnnealResult reverse_anneal(const IsingModel &model, const SpinConfig &seed_state,
                            const ReverseSchedule &schedule, double t_max,
                            std::uint64_t rng_seed);

} // namespace tokq
