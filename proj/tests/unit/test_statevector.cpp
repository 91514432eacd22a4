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
#include <complex>

#include "oracles.hpp"
#include "tokq/errors.hpp"
#include "tokq/pauli.hpp"
#include "tokq/rng.hpp"
#include "tokq/statevector.hpp"

using namespace tokq;

namespace {

Statevector random_state(int n, std::uint64_t seed) {
    // random unitary-ish preparation through the public gate set
    Rng rng(seed);
    auto state = Statevector::plus_state(n);
    for (int round = 0; round < 3; ++round) {
        state.apply_rx_all(rng.uniform(-1.5, 1.5));
        for (int q = 0; q + 1 < n; ++q)
            state.apply_zz(q, q + 1, rng.uniform(-1.5, 1.5));
    }
    return state;
}

} // namespace

TEST_CASE("plus_state and basis_state basics") {
    const auto plus1 = Statevector::plus_state(1);
    CHECK(plus1.amplitude(0).real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(plus1.amplitude(1).real() == doctest::Approx(1 / std::sqrt(2.0)));

    const auto plus2 = Statevector::plus_state(2);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(plus2.amplitude(i).real() == doctest::Approx(0.5));

    CHECK(Statevector::plus_state(10).norm() == doctest::Approx(1.0).epsilon(1e-12));

    // "01" reads q0=0, q1=1, little-endian index 2
    const auto basis = Statevector::basis_state(2, "01");
    CHECK(basis.amplitude(2) == std::complex<double>{1.0, 0.0});
    CHECK(Statevector::basis_state(3, "000").amplitude(0) ==
          std::complex<double>{1.0, 0.0});
    CHECK(Statevector::basis_state(4, "1011").norm() == doctest::Approx(1.0));

    CHECK_THROWS_AS(Statevector::basis_state(2, "011"), std::invalid_argument);
    CHECK_THROWS_AS(Statevector::basis_state(2, "0x"), std::invalid_argument);
    CHECK_THROWS_AS(Statevector::plus_state(25), CapacityError);
}

TEST_CASE("apply_rx_all: identity, full flip, norm") {
    auto state = Statevector::plus_state(3);
    const auto before = state.amplitudes();
    state.apply_rx_all(0.0);
    CHECK(state.amplitudes() == before);

    auto zero = Statevector::basis_state(1, "0");
    zero.apply_rx_all(std::numbers::pi / 2);
    CHECK(std::abs(zero.amplitude(1)) == doctest::Approx(1.0));
    CHECK(std::abs(zero.amplitude(0)) == doctest::Approx(0.0));

    auto random = random_state(5, 42);
    random.apply_rx_all(0.7654);
    CHECK(random.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("apply_zz: identity, commutation, dense oracle") {
    auto state = Statevector::plus_state(2);
    const auto before = state.amplitudes();
    state.apply_zz(0, 1, 0.0);
    CHECK(state.amplitudes() == before);

    SUBCASE("diagonal gates commute") {
        auto a = random_state(4, 1);
        auto b = a;
        a.apply_zz(0, 2, 0.3).apply_zz(1, 3, -0.8).apply_zz(0, 1, 1.1);
        b.apply_zz(0, 1, 1.1).apply_zz(0, 2, 0.3).apply_zz(1, 3, -0.8);
        for (std::size_t i = 0; i < a.dim(); ++i)
            CHECK(std::abs(a.amplitude(i) - b.amplitude(i)) < 1e-14);
    }

    SUBCASE("matches exp(-i angle ZZ) built densely") {
        const double angle = 0.837;
        auto state2 = random_state(2, 7);
        const auto ref_in = oracle::to_eigen(state2);
        const oracle::Matrix zz =
            oracle::op_at(2, 0, oracle::pauli_matrix_1q(Pauli::Z)) *
            oracle::op_at(2, 1, oracle::pauli_matrix_1q(Pauli::Z));
        const oracle::Vector expected = oracle::expi(zz, -angle) * ref_in;
        state2.apply_zz(0, 1, angle);
        CHECK(oracle::state_distance(state2, expected) < 1e-12);
    }

    CHECK_THROWS_AS(Statevector::plus_state(2).apply_zz(0, 2, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(Statevector::plus_state(2).apply_zz(1, 1, 1.0),
                    std::invalid_argument);
}

TEST_CASE("apply_xy_exponential: inverse pair and dense oracle") {
    SUBCASE("theta = 0 is the identity") {
        auto state = random_state(3, 3);
        const auto before = state.amplitudes();
        state.apply_xy_exponential(0, 2, 0.0);
        for (std::size_t i = 0; i < state.dim(); ++i)
            CHECK(std::abs(state.amplitude(i) - before[i]) < 1e-15);
    }

    SUBCASE("theta then -theta restores the state") {
        auto state = random_state(4, 9);
        const auto before = state.amplitudes();
        state.apply_xy_exponential(1, 3, 0.91).apply_xy_exponential(1, 3, -0.91);
        for (std::size_t i = 0; i < state.dim(); ++i)
            CHECK(std::abs(state.amplitude(i) - before[i]) < 1e-12);
    }

    SUBCASE("matches the dense matrix exponential on |01>") {
        const double theta = 0.3;
        auto state = Statevector::basis_state(2, "01");
        state.apply_xy_exponential(0, 1, theta);
        const oracle::Matrix xy =
            oracle::op_at(2, 0, oracle::pauli_matrix_1q(Pauli::X)) *
            oracle::op_at(2, 1, oracle::pauli_matrix_1q(Pauli::Y));
        oracle::Vector input = oracle::Vector::Zero(4);
        input(2) = 1.0; // |01| in little-endian
        const oracle::Vector expected = oracle::expi(xy, -theta) * input;
        CHECK(oracle::state_distance(state, expected) < 1e-12);
    }

    SUBCASE("norm preserved on bigger registers") {
        auto state = random_state(6, 11);
        state.apply_xy_exponential(2, 5, 1.234);
        CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("gate unitarity: apply then un-apply for all three gates") {
    Rng rng(2718);
    for (int trial = 0; trial < 5; ++trial) {
        const double angle = rng.uniform(-2.0, 2.0);
        auto state = random_state(4, derive_seed(1, "u", trial));
        const auto before = state.amplitudes();
        state.apply_rx_all(angle).apply_rx_all(-angle);
        state.apply_zz(0, 3, angle).apply_zz(0, 3, -angle);
        state.apply_xy_exponential(1, 2, angle).apply_xy_exponential(1, 2, -angle);
        for (std::size_t i = 0; i < state.dim(); ++i)
            CHECK(std::abs(state.amplitude(i) - before[i]) < 1e-12);
    }
}

TEST_CASE("probabilities: basis, uniform, normalization") {
    const auto basis = Statevector::basis_state(3, "010");
    const auto probs = basis.probabilities();
    for (std::size_t i = 0; i < probs.size(); ++i)
        CHECK(probs[i] == (i == 2 ? 1.0 : 0.0));

    for (double p : Statevector::plus_state(2).probabilities())
        CHECK(p == doctest::Approx(0.25));

    const auto random = random_state(6, 99);
    double total = 0.0;
    for (double p : random.probabilities())
        total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("expectation: hand values and the dense quadratic-form oracle") {
    SUBCASE("identity term returns its coefficient") {
        PauliSum h{{2.5, {}}};
        CHECK(expectation(random_state(3, 5), h) == doctest::Approx(2.5));
    }

    SUBCASE("Z0 on basis states") {
        PauliSum z0{{1.0, {{0, Pauli::Z}}}};
        CHECK(expectation(Statevector::basis_state(1, "0"), z0) ==
              doctest::Approx(1.0));
        CHECK(expectation(Statevector::basis_state(1, "1"), z0) ==
              doctest::Approx(-1.0));
    }

    SUBCASE("random 3-qubit sums agree with the dense oracle") {
        Rng rng(31337);
        const Pauli kinds[3] = {Pauli::X, Pauli::Y, Pauli::Z};
        for (int trial = 0; trial < 8; ++trial) {
            PauliSum h;
            for (int t = 0; t < 4; ++t) {
                PauliTerm term;
                term.coefficient = rng.uniform(-2.0, 2.0);
                for (int q = 0; q < 3; ++q)
                    if (rng.uniform() < 0.6)
                        term.ops[q] = kinds[rng.uniform_below(3)];
                h.add(term);
            }
            const auto state = random_state(3, derive_seed(2, "e", trial));
            const auto dense = oracle::dense_pauli_sum(h, 3);
            const auto vec = oracle::to_eigen(state);
            const double expected = (vec.adjoint() * dense * vec)(0, 0).real();
            CHECK(expectation(state, h) == doctest::Approx(expected).epsilon(1e-9));
        }
    }

    SUBCASE("qubit range is checked") {
        PauliSum h{{1.0, {{5, Pauli::Z}}}};
        CHECK_THROWS_AS(expectation(Statevector::plus_state(2), h),
                        std::invalid_argument);
    }
}

TEST_CASE("PauliSum merges duplicate operator content") {
    PauliSum h;
    h.add({1.0, {{0, Pauli::Z}}});
    h.add({0.5, {{0, Pauli::Z}}});
    h.add({2.0, {{1, Pauli::X}}});
    CHECK(h.terms().size() == 2);
    CHECK(h.terms()[0].coefficient == 1.5);
    CHECK(h.max_qubit() == 1);
}

TEST_CASE("exact_ground_energy: trivial spectra and variational bound") {
    PauliSum z0{{1.0, {{0, Pauli::Z}}}};
    CHECK(exact_ground_energy(z0, 1) == doctest::Approx(-1.0));

    PauliSum scaled_identity{{2.0, {}}};
    CHECK(exact_ground_energy(scaled_identity, 2) == doctest::Approx(2.0));

    SUBCASE("ground energy lower-bounds random expectations") {
        Rng rng(424242);
        const Pauli kinds[3] = {Pauli::X, Pauli::Y, Pauli::Z};
        for (int trial = 0; trial < 5; ++trial) {
            PauliSum h;
            for (int t = 0; t < 3; ++t) {
                PauliTerm term;
                term.coefficient = rng.uniform(-1.0, 1.0);
                for (int q = 0; q < 2; ++q)
                    if (rng.uniform() < 0.7)
                        term.ops[q] = kinds[rng.uniform_below(3)];
                h.add(term);
            }
            const double ground = exact_ground_energy(h, 2);
            for (int s = 0; s < 10; ++s) {
                const auto state = random_state(2, derive_seed(3, "v", 10 * trial + s));
                CHECK(expectation(state, h) >= ground - 1e-9);
            }
        }
    }

    CHECK_THROWS_AS(exact_ground_energy(z0, 13), CapacityError);
}

TEST_CASE("sample_counts totals shots and tracks probabilities") {
    const auto state = random_state(4, 1001);
    const auto counts = sample_counts(state, 20000, 55);
    std::uint64_t total = 0;
    for (auto c : counts)
        total += c;
    CHECK(total == 20000);
    const auto probs = state.probabilities();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double freq = static_cast<double>(counts[i]) / 20000.0;
        CHECK(freq == doctest::Approx(probs[i]).epsilon(0.15).scale(1.0));
    }
}
