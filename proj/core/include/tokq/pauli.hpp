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

#include <map>
#include <vector>

#include "tokq/statevector.hpp"

namespace tokq {

enum class Pauli : char { X = 'X', Y = 'Y', Z = 'Z' };

/// coefficient * product of single-qubit Paulis; identity factors are
/// omitted, an empty map is a scaled identity.
struct PauliTerm {
    double coefficient = 0.0;
    std::map<int, Pauli> ops;
};

/// Real-weighted sum of Pauli terms (Hermitian by construction). Terms with
/// identical operator content are merged on insertion.
class PauliSum {
  public:
    PauliSum() = default;
    PauliSum(std::initializer_list<PauliTerm> terms);

    PauliSum &add(PauliTerm term);
    const std::vector<PauliTerm> &terms() const { return terms_; }
    /// Largest qubit index touched, -1 for identity-only sums.
    int max_qubit() const;

  private:
    std::vector<PauliTerm> terms_;
};

/// <state|H|state>, computed term by term with a fixed reduction order.
/// The imaginary part must cancel below 1e-10 or the input was not
/// Hermitian; that case throws.
double expectation(const Statevector &state, const PauliSum &hamiltonian);

/// Minimum eigenvalue via dense Hermitian diagonalization. Bounded to 12
/// qubits.
double exact_ground_energy(const PauliSum &hamiltonian, int n_qubits);

} // namespace tokq
