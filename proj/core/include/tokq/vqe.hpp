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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "tokq/pauli.hpp"
#include "tokq/spsa.hpp"
#include "tokq/statevector.hpp"

namespace tokq {

/// Chemical accuracy, ~1 kcal/mol in Hartree.
inline constexpr double kChemicalAccuracyHa = 0.0016;

/// Two-qubit reduced H2 Hamiltonian coefficients at one bond length:
/// H = g0 I + g1 Z0 + g2 Z1 + g3 Z0Z1 + g4 X0X1 + g5 Y0Y1.
struct H2Row {
    double r; // bond length, Angstrom
    std::array<double, 6> g;
};

/// Bond-length table, strictly increasing r.
struct H2Table {
    std::vector<H2Row> rows;

    void validate() const;
    /// Row with r closest to the requested bond length.
    const H2Row &nearest(double r) const;
};

/// CSV with header `r,g0,g1,g2,g3,g4,g5`.
H2Table load_h2_table(const std::filesystem::path &path);
void save_h2_table(const H2Table &table, const std::filesystem::path &path);

PauliSum h2_hamiltonian(const H2Row &row);

/// exp(-i theta X0 Y1) |01>; the single-parameter coupled-cluster ansatz
/// over the mean-field reference state.
Statevector ucc_ansatz_state(double theta);

double vqe_energy(const H2Row &row, double theta);

struct VqeRunResult {
    double theta;  // best traced iterate
    double energy; // objective at that iterate
    OptTrace trace;
};

/// SPSA over the single parameter; wrap_theta folds the iterate into
/// (-pi, pi] after each step (off by default to keep traces raw).
VqeRunResult vqe_solve(const H2Row &row, double theta0, const SpsaConfig &config,
                       bool wrap_theta = false);

/// Iteration for chemical accuracy: smallest trace index whose raw
/// objective is within tol of the exact energy; nullopt when never reached.
std::optional<int> ica(const OptTrace &trace, double exact_energy,
                       double tol = kChemicalAccuracyHa);

struct GridScanResult {
    double theta_star;
    double energy;
};

/// Argmin of vqe_energy over a theta grid of the given step covering one
/// full period [-pi/2, pi/2].
GridScanResult grid_scan_minimum(const H2Row &row, double step = 1e-3);

enum class SweepMode { kTransfer, kColdStart };

struct SweepResult {
    struct RowResult {
        double r;
        double theta_final;
        double energy;
        double exact_energy;
        std::optional<int> ica;
        OptTrace trace;
    };
    std::vector<RowResult> rows;
    SweepMode mode;
};

/// Bond-length sweep in increasing r. Transfer mode seeds each row with the
/// previous row's best theta (first row from 0); cold-start uses theta0 = 0,
/// the mean-field point, everywhere. Per-row exact energy comes from dense
/// diagonalization. Seeds split deterministically per row.
SweepResult run_sweep(const H2Table &table, const SpsaConfig &gains,
                      SweepMode mode, std::uint64_t seed);

} // namespace tokq
