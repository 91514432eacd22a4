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
#include "tokq/h2_sto3g.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tokq {

namespace {

// STO-3G hydrogen 1s primitives (exponents already carry the 1.24^2 scale).
constexpr double kExp[3] = {3.42525091, 0.62391373, 0.16885540};
constexpr double kCoef[3] = {0.15432897, 0.53532814, 0.44463454};
constexpr double kAngstromPerBohr = 0.529177210903;

constexpr double kPi = std::numbers::pi;

double boys_f0(double t) {
    if (t < 1e-12)
        return 1.0 - t / 3.0;
    return 0.5 * std::sqrt(kPi / t) * std::erf(std::sqrt(t));
}

double prim_norm(double a) { return std::pow(2.0 * a / kPi, 0.75); }

double prim_overlap(double a, double b, double r2) {
    const double p = a + b;
    return prim_norm(a) * prim_norm(b) * std::pow(kPi / p, 1.5) *
           std::exp(-a * b / p * r2);
}

double prim_kinetic(double a, double b, double r2) {
    const double mu = a * b / (a + b);
    return mu * (3.0 - 2.0 * mu * r2) * prim_overlap(a, b, r2);
}

// Attraction to a unit charge at cx, orbitals centered at ax and bx.
double prim_nuclear(double a, double ax, double b, double bx, double cx) {
    const double p = a + b;
    const double px = (a * ax + b * bx) / p;
    const double r2ab = (ax - bx) * (ax - bx);
    return -prim_norm(a) * prim_norm(b) * (2.0 * kPi / p) *
           std::exp(-a * b / p * r2ab) * boys_f0(p * (px - cx) * (px - cx));
}

// (ab|cd) in chemist notation, all s-type.
double prim_eri(double a, double ax, double b, double bx, double c, double cx,
                double d, double dx) {
    const double p = a + b;
    const double q = c + d;
    const double px = (a * ax + b * bx) / p;
    const double qx = (c * cx + d * dx) / q;
    const double pref = 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q));
    return prim_norm(a) * prim_norm(b) * prim_norm(c) * prim_norm(d) * pref *
           std::exp(-a * b / p * (ax - bx) * (ax - bx) -
                    c * d / q * (cx - dx) * (cx - dx)) *
           boys_f0(p * q / (p + q) * (px - qx) * (px - qx));
}

template <typename Fn> double contract2(Fn &&fn) {
    double total = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            total += kCoef[i] * kCoef[j] * fn(kExp[i], kExp[j]);
    return total;
}

template <typename Fn> double contract4(Fn &&fn) {
    double total = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    total += kCoef[i] * kCoef[j] * kCoef[k] * kCoef[l] *
                             fn(kExp[i], kExp[j], kExp[k], kExp[l]);
    return total;
}

} // namespace

H2Row h2_sto3g_row(double r_angstrom) {
    if (!(r_angstrom > 0.0))
        throw std::invalid_argument("bond length must be positive");
    const double R = r_angstrom / kAngstromPerBohr; // bohr
    const double r2 = R * R;

    const double s12 = contract2([&](double a, double b) {
        return prim_overlap(a, b, r2);
    });
    const double t11 = contract2([&](double a, double b) {
        return prim_kinetic(a, b, 0.0);
    });
    const double t12 = contract2([&](double a, double b) {
        return prim_kinetic(a, b, r2);
    });
    const double v11 = contract2([&](double a, double b) {
        return prim_nuclear(a, 0.0, b, 0.0, 0.0) +
               prim_nuclear(a, 0.0, b, 0.0, R);
    });
    const double v12 = contract2([&](double a, double b) {
        return prim_nuclear(a, 0.0, b, R, 0.0) + prim_nuclear(a, 0.0, b, R, R);
    });
    const double h11 = t11 + v11;
    const double h12 = t12 + v12;

    const double i1111 = contract4([&](double a, double b, double c, double d) {
        return prim_eri(a, 0.0, b, 0.0, c, 0.0, d, 0.0);
    });
    const double i1122 = contract4([&](double a, double b, double c, double d) {
        return prim_eri(a, 0.0, b, 0.0, c, R, d, R);
    });
    const double i1212 = contract4([&](double a, double b, double c, double d) {
        return prim_eri(a, 0.0, b, R, c, 0.0, d, R);
    });
    const double i1112 = contract4([&](double a, double b, double c, double d) {
        return prim_eri(a, 0.0, b, 0.0, c, 0.0, d, R);
    });

    // Symmetry-fixed molecular orbitals: bonding g, antibonding u.
    const double h_gg = (h11 + h12) / (1.0 + s12);
    const double h_uu = (h11 - h12) / (1.0 - s12);
    const double j_gg =
        (i1111 + i1122 + 2.0 * i1212 + 4.0 * i1112) / (2.0 * (1.0 + s12) * (1.0 + s12));
    const double j_uu =
        (i1111 + i1122 + 2.0 * i1212 - 4.0 * i1112) / (2.0 * (1.0 - s12) * (1.0 - s12));
    const double j_gu = (i1111 + i1122 - 2.0 * i1212) / (2.0 * (1.0 - s12 * s12));
    const double k_gu = (i1111 - i1122) / (2.0 * (1.0 - s12 * s12));
    const double e_nn = 1.0 / R;

    // Two-electron configuration energies (total, repulsion included).
    const double e_hf = 2.0 * h_gg + j_gg + e_nn;          // |01>
    const double e_double = 2.0 * h_uu + j_uu + e_nn;      // |10>
    const double e_open_singlet = h_gg + h_uu + j_gu + k_gu + e_nn; // |11>
    const double e_triplet = h_gg + h_uu + j_gu - k_gu + e_nn;      // |00>

    H2Row row;
    row.r = r_angstrom;
    row.g[0] = (e_triplet + e_open_singlet + e_hf + e_double) / 4.0;
    row.g[1] = (e_triplet - e_open_singlet) / 4.0 + (e_hf - e_double) / 4.0;
    row.g[2] = (e_triplet - e_open_singlet) / 4.0 - (e_hf - e_double) / 4.0;
    row.g[3] = (e_triplet + e_open_singlet - e_hf - e_double) / 4.0;
    row.g[4] = k_gu / 2.0; // X0X1
    row.g[5] = k_gu / 2.0; // Y0Y1
    return row;
}

H2Table generate_h2_table(double r_min, double r_max, double dr) {
    if (!(r_min > 0.0) || !(dr > 0.0) || r_max < r_min)
        throw std::invalid_argument("need 0 < r_min <= r_max and dr > 0");
    H2Table table;
    const int steps = static_cast<int>(std::round((r_max - r_min) / dr));
    for (int k = 0; k <= steps; ++k)
        table.rows.push_back(h2_sto3g_row(r_min + k * dr));
    table.validate();
    return table;
}

} // namespace tokq
