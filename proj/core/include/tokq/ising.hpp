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

#include <cstdint>
#include <map>
#include <vector>

#include "tokq/graph.hpp"

namespace tokq {

/// energy(s) = offset + sum_{i<j} J_ij s_i s_j + sum_i h_i s_i
class IsingModel {
  public:
    IsingModel(int n_spins, std::map<std::pair<int, int>, double> couplings,
               std::map<int, double> fields, double offset);

    int n_spins() const { return n_spins_; }
    const std::map<std::pair<int, int>, double> &couplings() const {
        return couplings_;
    }
    const std::map<int, double> &fields() const { return fields_; }
    double offset() const { return offset_; }

  private:
    int n_spins_;
    std::map<std::pair<int, int>, double> couplings_; // keys i < j
    std::map<int, double> fields_;
    double offset_;
};

struct SpinConfig {
    std::vector<std::int8_t> spins; // each +1 or -1

    bool operator==(const SpinConfig &) const = default;
};

/// MaxCut encoding: J_ij = w_ij / 2, h = 0, offset = -sum(w)/2, so that
/// energy(s) == -cut_value(partition(s)). Minimizing energy maximizes cut.
IsingModel ising_from_maxcut(const WeightedGraph &graph);

double energy(const IsingModel &model, const SpinConfig &config);

/// Spin +1 maps to side 0.
Partition partition_from_spins(const SpinConfig &config);
SpinConfig spins_from_partition(const Partition &partition);

} // namespace tokq
