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
#include "tokq/vqe.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tokq/errors.hpp"

namespace tokq {

void H2Table::validate() const {
    if (rows.empty())
        throw std::invalid_argument("H2 table must not be empty");
    double prev = -1.0;
    for (const auto &row : rows) {
        if (!(row.r > 0.0))
            throw std::invalid_argument("bond length must be positive");
        if (row.r <= prev)
            throw std::invalid_argument("bond lengths must be strictly increasing");
        for (double g : row.g)
            if (!std::isfinite(g))
                throw std::invalid_argument("coefficients must be finite");
        prev = row.r;
    }
}

const H2Row &H2Table::nearest(double r) const {
    validate();
    const H2Row *best = &rows.front();
    for (const auto &row : rows)
        if (std::abs(row.r - r) < std::abs(best->r - r))
            best = &row;
    return *best;
}

H2Table load_h2_table(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line))
        throw ParseError("empty table file " + path.string());
    ++line_no;
    // Tolerate surrounding whitespace but not a different column set.
    std::string header = line;
    header.erase(std::remove_if(header.begin(), header.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 header.end());
    if (header != "r,g0,g1,g2,g3,g4,g5")
        throw ParseError("expected header `r,g0,g1,g2,g3,g4,g5`", line_no);

    H2Table table;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream ss(line);
        std::string cell;
        std::vector<double> values;
        while (std::getline(ss, cell, ',')) {
            try {
                values.push_back(std::stod(cell));
            } catch (const std::exception &) {
                throw ParseError("bad number '" + cell + "'", line_no);
            }
        }
        if (values.size() != 7)
            throw ParseError("expected 7 columns", line_no);
        H2Row row;
        row.r = values[0];
        for (int i = 0; i < 6; ++i)
            row.g[i] = values[i + 1];
        if (!table.rows.empty() && row.r <= table.rows.back().r)
            throw ParseError("bond lengths must be strictly increasing", line_no);
        table.rows.push_back(row);
    }
    table.validate();
    return table;
}

namespace {

std::string format_coeff(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

} // namespace

void save_h2_table(const H2Table &table, const std::filesystem::path &path) {
    table.validate();
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << "r,g0,g1,g2,g3,g4,g5\n";
    for (const auto &row : table.rows) {
        char rbuf[32];
        std::snprintf(rbuf, sizeof(rbuf), "%.2f", row.r);
        out << rbuf;
        for (double g : row.g)
            out << "," << format_coeff(g);
        out << "\n";
    }
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

PauliSum h2_hamiltonian(const H2Row &row) {
    PauliSum sum;
    sum.add({row.g[0], {}});
    sum.add({row.g[1], {{0, Pauli::Z}}});
    sum.add({row.g[2], {{1, Pauli::Z}}});
    sum.add({row.g[3], {{0, Pauli::Z}, {1, Pauli::Z}}});
    sum.add({row.g[4], {{0, Pauli::X}, {1, Pauli::X}}});
    sum.add({row.g[5], {{0, Pauli::Y}, {1, Pauli::Y}}});
    return sum;
}

Statevector ucc_ansatz_state(double theta) {
    return Statevector::basis_state(2, "01").apply_xy_exponential(0, 1, theta);
}

double vqe_energy(const H2Row &row, double theta) {
    return expectation(ucc_ansatz_state(theta), h2_hamiltonian(row));
}

VqeRunResult vqe_solve(const H2Row &row, double theta0, const SpsaConfig &config,
                       bool wrap_theta) {
    auto objective = [row](const std::vector<double> &theta) {
        return vqe_energy(row, theta[0]);
    };
    SpsaOptimizer opt(objective, {theta0}, config);
    if (wrap_theta) {
        opt.set_post_step([](std::vector<double> &theta) {
            double t = std::remainder(theta[0], 2.0 * std::numbers::pi);
            if (t <= -std::numbers::pi)
                t += 2.0 * std::numbers::pi;
            theta[0] = t;
        });
    }
    opt.run(config.iterations);
    const auto best = opt.trace().best_index();
    return {opt.trace().parameters[best][0], opt.trace().objective[best],
            opt.trace()};
}

std::optional<int> ica(const OptTrace &trace, double exact_energy, double tol) {
    if (trace.objective.empty())
        throw std::invalid_argument("trace must not be empty");
    for (std::size_t i = 0; i < trace.objective.size(); ++i)
        if (std::abs(trace.objective[i] - exact_energy) < tol)
            return static_cast<int>(i);
    return std::nullopt;
}

GridScanResult grid_scan_minimum(const H2Row &row, double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("grid step must be positive");
    GridScanResult best{0.0, vqe_energy(row, 0.0)};
    const double half_pi = std::numbers::pi / 2.0;
    for (double theta = -half_pi; theta <= half_pi; theta += step) {
        const double e = vqe_energy(row, theta);
        if (e < best.energy)
            best = {theta, e};
    }
    return best;
}

SweepResult run_sweep(const H2Table &table, const SpsaConfig &gains,
                      SweepMode mode, std::uint64_t seed) {
    table.validate();
    SweepResult result;
    result.mode = mode;
    result.rows.reserve(table.rows.size());
    double previous_theta = 0.0;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const H2Row &row = table.rows[i];
        SpsaConfig cfg = gains;
        cfg.seed = derive_seed(seed, "row", i);
        const double theta0 =
            (mode == SweepMode::kTransfer && i > 0) ? previous_theta : 0.0;
        VqeRunResult run = vqe_solve(row, theta0, cfg);
        const double exact = exact_ground_energy(h2_hamiltonian(row), 2);
        result.rows.push_back({row.r, run.theta, run.energy, exact,
                               ica(run.trace, exact), std::move(run.trace)});
        previous_theta = run.theta;
    }
    return result;
}

} // namespace tokq
