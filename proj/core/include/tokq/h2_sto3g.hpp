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

#include "tokq/vqe.hpp"

namespace tokq {

/// Minimal-basis (STO-3G) H2 reduced to the two-qubit form of H2Row, from
/// closed-form s-Gaussian integrals. Energies are total molecular energies
/// (nuclear repulsion included), in Hartree. The |01> basis state carries
/// the mean-field (Hartree-Fock) energy and the ansatz subspace
/// {|01>, |10>} carries the closed-shell correlation problem, so the
/// single-parameter ansatz is exact for this model.
///
/// This is the generator behind the shipped data/h2_coefficients.csv; the
/// file is frozen and treated as the input of record.
H2Row h2_sto3g_row(double r_angstrom);

/// Inclusive grid r_min, r_min + dr, ..., r_max.
H2Table generate_h2_table(double r_min, double r_max, double dr);

} // namespace tokq
