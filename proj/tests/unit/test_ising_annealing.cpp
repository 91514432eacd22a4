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
#include <doctest.h>

#include <cmath>

#include "tokq/annealing.hpp"
#include "tokq/graph.hpp"
#include "tokq/ising.hpp"
#include "tokq/rng.hpp"

using namespace tokq;

namespace {

SpinConfig random_spins(int n, Rng &rng) {
    SpinConfig c;
    c.spins.reserve(n);
    for (int i = 0; i < n; ++i)
        c.spins.push_back(rng.rademacher() > 0 ? 1 : -1);
    return c;
}

} // namespace

TEST_CASE("ising_from_maxcut: two-spin hand values") {
    const WeightedGraph k2(2, {{0, 1, 1.0}});
    const auto model = ising_from_maxcut(k2);
    CHECK(model.offset() == -0.5);
    CHECK(energy(model, {{1, -1}}) == -1.0);
    CHECK(energy(model, {{1, 1}}) == 0.0);
}

TEST_CASE("energy equals minus cut for random graphs and configs") {
    Rng rng(777);
    for (int trial = 0; trial < 4; ++trial) {
        const auto g = generate_base_instance(10, 0.5, derive_seed(1, "g", trial));
        const auto model = ising_from_maxcut(g);
        for (int i = 0; i < 100; ++i) {
            const auto spins = random_spins(10, rng);
            CHECK(energy(model, spins) ==
                  -cut_value(g, partition_from_spins(spins)));
        }
    }
}

TEST_CASE("spin/partition mapping round trips") {
    const SpinConfig spins{{1, -1, -1, 1}};
    const auto p = partition_from_spins(spins);
    CHECK(p.side == std::vector<std::uint8_t>{0, 1, 1, 0});
    CHECK(spins_from_partition(p) == spins);
}

TEST_CASE("energy: trivial and error cases") {
    const IsingModel empty(3, {}, {}, 2.5);
    CHECK(energy(empty, {{1, 1, -1}}) == 2.5);
    CHECK_THROWS_AS(energy(empty, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(IsingModel(3, {{{1, 1}, 0.5}}, {}, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(IsingModel(3, {{{2, 1}, 0.5}}, {}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("single-flip delta matches full re-evaluation") {
    Rng rng(90210);
    const auto g = generate_base_instance(12, 0.6, 555);
    auto model = ising_from_maxcut(g);
    // add fields so the h-term of the delta formula is exercised
    std::map<int, double> fields;
    for (int i = 0; i < 12; ++i)
        fields[i] = rng.uniform(-1.0, 1.0);
    const IsingModel with_fields(12, model.couplings(), fields, model.offset());

    for (int trial = 0; trial < 50; ++trial) {
        auto spins = random_spins(12, rng);
        const int k = static_cast<int>(rng.uniform_below(12));
        const double before = energy(with_fields, spins);

        double local = fields.at(k);
        for (const auto &[key, j] : with_fields.couplings()) {
            if (key.first == k)
                local += j * spins.spins[key.second];
            else if (key.second == k)
                local += j * spins.spins[key.first];
        }
        const double predicted = -2.0 * spins.spins[k] * local;

        spins.spins[k] = -spins.spins[k];
        const double after = energy(with_fields, spins);
        CHECK(after - before == doctest::Approx(predicted).epsilon(1e-12));
    }
}

TEST_CASE("global-flip symmetry of the h=0 model") {
    Rng rng(1123);
    const auto g = generate_base_instance(10, 0.7, 999);
    const auto model = ising_from_maxcut(g);
    for (int i = 0; i < 50; ++i) {
        auto spins = random_spins(10, rng);
        auto flipped = spins;
        for (auto &s : flipped.spins)
            s = -s;
        CHECK(energy(model, spins) == energy(model, flipped));
    }
}

TEST_CASE("forward_anneal solves tiny instances") {
    SUBCASE("two spins") {
        const auto model = ising_from_maxcut(WeightedGraph(2, {{0, 1, 1.0}}));
        const auto result = forward_anneal(model, 20, 5, default_t_max(model), 3);
        CHECK(result.best.energy == -1.0);
        CHECK(result.samples.size() == 5);
        CHECK(result.per_read_seeds.size() == 5);
    }

    SUBCASE("frustrated unit triangle reaches cut 2") {
        const WeightedGraph tri(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
        const auto model = ising_from_maxcut(tri);
        const auto result = forward_anneal(model, 30, 8, default_t_max(model), 4);
        CHECK(result.best.energy == -2.0);
    }
}

TEST_CASE("forward_anneal finds the brute-force optimum on 10 vertices") {
    // Scaled-down version of the acceptance calibration: 10 trials here.
    int hits = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto g =
            generate_base_instance(10, 0.5, derive_seed(7, "fa", trial));
        const auto model = ising_from_maxcut(g);
        const auto best = brute_force_maxcut(g).best_value;
        const auto result = forward_anneal(model, 10 * model.n_spins(), 200,
                                           default_t_max(model),
                                           derive_seed(7, "fa-run", trial));
        if (-result.best.energy == best)
            ++hits;
    }
    CHECK(hits == 10);
}

TEST_CASE("anneal results are deterministic and single-flip stable") {
    const auto g = generate_base_instance(12, 0.5, 220);
    const auto model = ising_from_maxcut(g);
    const auto a = forward_anneal(model, 60, 10, default_t_max(model), 88);
    const auto b = forward_anneal(model, 60, 10, default_t_max(model), 88);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].config == b.samples[i].config);
        CHECK(a.samples[i].energy == b.samples[i].energy);
    }
    // no improving single flip at any reported state
    for (const auto &sample : a.samples) {
        for (int k = 0; k < model.n_spins(); ++k) {
            auto flipped = sample.config;
            flipped.spins[k] = -flipped.spins[k];
            CHECK(energy(model, flipped) >= sample.energy);
        }
    }
    // best is the sample minimum
    double min_e = a.samples[0].energy;
    for (const auto &s : a.samples)
        min_e = std::min(min_e, s.energy);
    CHECK(a.best.energy == min_e);
}

TEST_CASE("monotone reads: nested seed sequences only improve") {
    const auto g = generate_base_instance(12, 0.5, 313);
    const auto model = ising_from_maxcut(g);
    const auto few = forward_anneal(model, 40, 5, default_t_max(model), 42);
    const auto many = forward_anneal(model, 40, 25, default_t_max(model), 42);
    for (std::size_t i = 0; i < few.samples.size(); ++i)
        CHECK(few.samples[i].config == many.samples[i].config);
    CHECK(many.best.energy <= few.best.energy);
}

TEST_CASE("reverse_anneal validates inputs") {
    const auto model = ising_from_maxcut(generate_base_instance(6, 0.8, 1));
    ReverseSchedule bad;
    bad.s_target = 0.0;
    CHECK_THROWS_AS(reverse_anneal(model, {{1, 1, 1, 1, 1, 1}}, bad, 1.0, 1),
                    std::invalid_argument);
    ReverseSchedule ok;
    CHECK_THROWS_AS(reverse_anneal(model, {{1, 1}}, ok, 1.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(reverse_anneal(model, {{1, 1, 1, 1, 1, 2}}, ok, 1.0, 1),
                    std::invalid_argument);
}

TEST_CASE("reverse_anneal: near-degenerate schedule acts as descent") {
    const auto g = generate_base_instance(10, 0.6, 616);
    const auto model = ising_from_maxcut(g);
    Rng rng(17);
    const auto seed_state = random_spins(10, rng);
    const double seed_energy = energy(model, seed_state);

    // s_target -> 1 limit: zero hold, temperature ~0 throughout the ramp.
    ReverseSchedule schedule;
    schedule.s_target = 0.999;
    schedule.hold_sweeps = 0;
    schedule.num_reads = 4;
    const auto result =
        reverse_anneal(model, seed_state, schedule, 1e-9, 99);
    CHECK(result.best.energy <= seed_energy);
    // pure descent from the same seed every read: identical samples
    for (const auto &sample : result.samples)
        CHECK(sample.config == result.samples[0].config);
}

TEST_CASE("reverse_anneal seeded at the optimum never loses it") {
    for (int trial = 0; trial < 5; ++trial) {
        const auto g =
            generate_base_instance(9, 0.6, derive_seed(33, "opt", trial));
        const auto model = ising_from_maxcut(g);
        const auto brute = brute_force_maxcut(g);
        const auto seed_state =
            spins_from_partition(brute.optimal_partitions.front());
        ReverseSchedule schedule;
        schedule.num_reads = 50;
        const auto result = reverse_anneal(model, seed_state, schedule,
                                           default_t_max(model),
                                           derive_seed(33, "ra", trial));
        // best-of-reads includes a read that never escapes the optimum,
        // and descent cannot overshoot below the global minimum
        CHECK(result.best.energy == -brute.best_value);
    }
}

TEST_CASE("reverse_anneal chains reads when reinitialize is off") {
    const auto g = generate_base_instance(10, 0.5, 808);
    const auto model = ising_from_maxcut(g);
    Rng rng(5);
    const auto seed_state = random_spins(10, rng);
    ReverseSchedule chained;
    chained.reinitialize = false;
    chained.num_reads = 6;
    chained.hold_sweeps = 10;
    const auto a = reverse_anneal(model, seed_state, chained,
                                  default_t_max(model), 1234);
    const auto b = reverse_anneal(model, seed_state, chained,
                                  default_t_max(model), 1234);
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        CHECK(a.samples[i].config == b.samples[i].config);
}

TEST_CASE("default_t_max is the largest local field") {
    const WeightedGraph star(4, {{0, 1, 2.0}, {0, 2, 4.0}, {0, 3, 6.0}});
    const auto model = ising_from_maxcut(star);
    // centre spin: (2+4+6)/2
    CHECK(default_t_max(model) == 6.0);
}

TEST_CASE("default_refinement_t_max is four mean couplings") {
    const WeightedGraph star(4, {{0, 1, 2.0}, {0, 2, 4.0}, {0, 3, 6.0}});
    CHECK(default_refinement_t_max(ising_from_maxcut(star)) == 8.0);
    // unit-weight graphs land at 2 regardless of density
    const auto unit = generate_base_instance(20, 0.7, 3);
    CHECK(default_refinement_t_max(ising_from_maxcut(unit)) == 2.0);
}
