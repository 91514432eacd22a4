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

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

namespace tokq {

/// Dense complex statevector over n qubits, little-endian: bit k of a basis
/// index is qubit k. A bitstring such as "01" reads left to right as
/// q0, q1, so "01" means q0=0, q1=1 (basis index 2).
///
/// Gate members mutate in place and return *this for chaining. Every gate
/// is unitary and preserves the norm to ~1e-15 per application.
class Statevector {
  public:
    static constexpr int kMaxQubits = 24;

    /// Uniform superposition, each amplitude 2^(-n/2).
    static Statevector plus_state(int n_qubits);
    /// Single unit amplitude at the index encoded by `bits` (see above).
    static Statevector basis_state(int n_qubits, std::string_view bits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<std::complex<double>> &amplitudes() const { return amps_; }
    std::complex<double> amplitude(std::size_t index) const {
        return amps_[index];
    }

    /// exp(-i * angle * X) on every qubit.
    Statevector &apply_rx_all(double angle);
    /// Diagonal phase exp(-i * angle * Z_i Z_j): basis index b picks up
    /// exp(-i * angle * (-1)^(b_i xor b_j)).
    Statevector &apply_zz(int qubit_i, int qubit_j, double angle);
    /// Exact two-qubit unitary exp(-i * theta * X_i Y_j)
    ///   = cos(theta) I - i sin(theta) X_i Y_j.
    Statevector &apply_xy_exponential(int qubit_i, int qubit_j, double theta);

    /// |amplitude|^2 per basis index; sums to 1 within 1e-10.
    std::vector<double> probabilities() const;
    double norm() const;

  private:
    Statevector(int n_qubits, std::vector<std::complex<double>> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    int n_qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Multinomial shot sampler over probabilities(); returns per-index counts.
/// Optional noise source for studies that want finite-shot estimates.
std::vector<std::uint64_t> sample_counts(const Statevector &state,
                                         std::uint64_t shots,
                                         std::uint64_t seed);

} // namespace tokq
