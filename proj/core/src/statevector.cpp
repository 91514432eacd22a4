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
#include "tokq/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tokq/errors.hpp"
#include "tokq/rng.hpp"

namespace tokq {

namespace {

void check_capacity(int n_qubits) {
    if (n_qubits < 1)
        throw std::invalid_argument("need at least one qubit");
    if (n_qubits > Statevector::kMaxQubits)
        throw CapacityError("dense statevector bounded to " +
                            std::to_string(Statevector::kMaxQubits) +
                            " qubits, got " + std::to_string(n_qubits));
}

void check_qubit(int qubit, int n_qubits) {
    if (qubit < 0 || qubit >= n_qubits)
        throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                    " out of range");
}

} // namespace

Statevector Statevector::plus_state(int n_qubits) {
    check_capacity(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    const double amp = std::pow(2.0, -0.5 * n_qubits);
    return Statevector(n_qubits,
                       std::vector<std::complex<double>>(dim, {amp, 0.0}));
}

Statevector Statevector::basis_state(int n_qubits, std::string_view bits) {
    check_capacity(n_qubits);
    if (bits.size() != static_cast<std::size_t>(n_qubits))
        throw std::invalid_argument("bitstring length does not match qubit count");
    std::size_t index = 0;
    for (int k = 0; k < n_qubits; ++k) {
        if (bits[k] == '1')
            index |= std::size_t{1} << k;
        else if (bits[k] != '0')
            throw std::invalid_argument("bitstring must contain only 0 and 1");
    }
    std::vector<std::complex<double>> amps(std::size_t{1} << n_qubits,
                                           {0.0, 0.0});
    amps[index] = {1.0, 0.0};
    return Statevector(n_qubits, std::move(amps));
}

Statevector &Statevector::apply_rx_all(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const std::complex<double> mis{0.0, -s};
    for (int k = 0; k < n_qubits_; ++k) {
        const std::size_t stride = std::size_t{1} << k;
        for (std::size_t block = 0; block < amps_.size(); block += 2 * stride) {
            for (std::size_t i = block; i < block + stride; ++i) {
                const auto a0 = amps_[i];
                const auto a1 = amps_[i + stride];
                amps_[i] = c * a0 + mis * a1;
                amps_[i + stride] = mis * a0 + c * a1;
            }
        }
    }
    return *this;
}

Statevector &Statevector::apply_zz(int qubit_i, int qubit_j, double angle) {
    check_qubit(qubit_i, n_qubits_);
    check_qubit(qubit_j, n_qubits_);
    if (qubit_i == qubit_j)
        throw std::invalid_argument("apply_zz needs two distinct qubits");
    const std::complex<double> same{std::cos(angle), -std::sin(angle)};
    const std::complex<double> diff = std::conj(same);
    for (std::size_t b = 0; b < amps_.size(); ++b) {
        const bool crossed = ((b >> qubit_i) ^ (b >> qubit_j)) & 1u;
        amps_[b] *= crossed ? diff : same;
    }
    return *this;
}

Statevector &Statevector::apply_xy_exponential(int qubit_i, int qubit_j,
                                               double theta) {
    check_qubit(qubit_i, n_qubits_);
    check_qubit(qubit_j, n_qubits_);
    if (qubit_i == qubit_j)
        throw std::invalid_argument("apply_xy_exponential needs two distinct qubits");
    const std::size_t flip =
        (std::size_t{1} << qubit_i) | (std::size_t{1} << qubit_j);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // X_i Y_j |b> = phase(b) |b ^ flip| with phase(b) = +i when bit j of b
    // is 0, -i when it is 1.
    for (std::size_t b = 0; b < amps_.size(); ++b) {
        const std::size_t partner = b ^ flip;
        if (partner < b)
            continue;
        const auto a0 = amps_[b];
        const auto a1 = amps_[partner];
        const std::complex<double> phase_b =
            ((b >> qubit_j) & 1u) ? std::complex<double>{0.0, -1.0}
                                  : std::complex<double>{0.0, 1.0};
        const std::complex<double> phase_p = -phase_b;
        const std::complex<double> mi{0.0, -1.0};
        amps_[b] = c * a0 + mi * s * phase_p * a1;
        amps_[partner] = c * a1 + mi * s * phase_b * a0;
    }
    return *this;
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> probs(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i)
        probs[i] = std::norm(amps_[i]);
    return probs;
}

double Statevector::norm() const {
    double total = 0.0;
    for (const auto &a : amps_)
        total += std::norm(a);
    return std::sqrt(total);
}

std::vector<std::uint64_t> sample_counts(const Statevector &state,
                                         std::uint64_t shots,
                                         std::uint64_t seed) {
    const auto probs = state.probabilities();
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    std::vector<std::uint64_t> counts(probs.size(), 0);
    Rng rng(seed);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const double u = rng.uniform() * acc;
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx =
            it == cdf.end() ? probs.size() - 1 : static_cast<std::size_t>(it - cdf.begin());
        ++counts[idx];
    }
    return counts;
}

} // namespace tokq
