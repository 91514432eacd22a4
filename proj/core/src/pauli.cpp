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
#include "tokq/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "tokq/errors.hpp"

namespace tokq {

PauliSum::PauliSum(std::initializer_list<PauliTerm> terms) {
    for (const auto &t : terms)
        add(t);
}

PauliSum &PauliSum::add(PauliTerm term) {
    if (!std::isfinite(term.coefficient))
        throw std::invalid_argument("Pauli coefficient must be finite");
    for (const auto &[qubit, op] : term.ops) {
        (void)op;
        if (qubit < 0)
            throw std::invalid_argument("negative qubit index in Pauli term");
    }
    for (auto &existing : terms_) {
        if (existing.ops == term.ops) {
            existing.coefficient += term.coefficient;
            return *this;
        }
    }
    terms_.push_back(std::move(term));
    return *this;
}

int PauliSum::max_qubit() const {
    int max = -1;
    for (const auto &term : terms_)
        if (!term.ops.empty())
            max = std::max(max, term.ops.rbegin()->first);
    return max;
}

namespace {

struct TermMasks {
    std::size_t flip = 0;    // X and Y qubits
    std::size_t sign = 0;    // Y and Z qubits: (-1)^popcount(b & sign)
    int n_y = 0;             // global factor i^n_y
};

TermMasks masks_for(const PauliTerm &term, int n_qubits) {
    TermMasks m;
    for (const auto &[qubit, op] : term.ops) {
        if (qubit >= n_qubits)
            throw std::invalid_argument("Pauli term touches qubit " +
                                        std::to_string(qubit) +
                                        " beyond state size");
        const std::size_t bit = std::size_t{1} << qubit;
        switch (op) {
        case Pauli::X:
            m.flip |= bit;
            break;
        case Pauli::Y:
            m.flip |= bit;
            m.sign |= bit;
            ++m.n_y;
            break;
        case Pauli::Z:
            m.sign |= bit;
            break;
        }
    }
    return m;
}

std::complex<double> i_power(int n) {
    switch (((n % 4) + 4) % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

} // namespace

double expectation(const Statevector &state, const PauliSum &hamiltonian) {
    const auto &amps = state.amplitudes();
    std::complex<double> total{0.0, 0.0};
    for (const auto &term : hamiltonian.terms()) {
        const TermMasks m = masks_for(term, state.n_qubits());
        const std::complex<double> prefactor = i_power(m.n_y);
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t b = 0; b < amps.size(); ++b) {
            const double sign =
                (std::popcount(b & m.sign) & 1) ? -1.0 : 1.0;
            acc += std::conj(amps[b ^ m.flip]) * (sign * amps[b]);
        }
        total += term.coefficient * prefactor * acc;
    }
    if (std::abs(total.imag()) >= 1e-10)
        throw std::runtime_error(
            "expectation has non-negligible imaginary part " +
            std::to_string(total.imag()) + "; operator is not Hermitian");
    return total.real();
}

double exact_ground_energy(const PauliSum &hamiltonian, int n_qubits) {
    if (n_qubits < 1)
        throw std::invalid_argument("need at least one qubit");
    if (n_qubits > 12)
        throw CapacityError("dense diagonalization bounded to 12 qubits, got " +
                            std::to_string(n_qubits));
    if (hamiltonian.max_qubit() >= n_qubits)
        throw std::invalid_argument("Hamiltonian touches qubits beyond n_qubits");

    const std::size_t dim = std::size_t{1} << n_qubits;
    Eigen::MatrixXcd matrix = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &term : hamiltonian.terms()) {
        const TermMasks m = masks_for(term, n_qubits);
        const std::complex<double> prefactor =
            term.coefficient * i_power(m.n_y);
        for (std::size_t b = 0; b < dim; ++b) {
            const double sign =
                (std::popcount(b & m.sign) & 1) ? -1.0 : 1.0;
            matrix(b ^ m.flip, b) += prefactor * sign;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dense eigensolver failed");
    return solver.eigenvalues().minCoeff();
}

} // namespace tokq
