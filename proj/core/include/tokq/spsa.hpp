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

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "tokq/rng.hpp"

namespace tokq {

/// Gain schedule a_k = a / (k+1+A)^alpha, c_k = c / (k+1)^gamma_exp.
struct SpsaConfig {
    int iterations = 100;
    double a = 0.1 * std::pow(11.0, 0.602); // 0.1 * (1 + A)^alpha: first
                                            // step ~0.1 for unit-gradient
                                            // objectives
    double c = 0.1;
    double A = 10.0;          // 0.1 * iterations
    double alpha = 0.602;
    double gamma_exp = 0.101;
    std::uint64_t seed = 0;

    /// Canonical gains for a given iteration budget.
    static SpsaConfig defaults(int iterations, std::uint64_t seed);
    void validate() const;
};

/// Per-iteration record of the nominal iterate (never the +-c_k probes).
/// Entry 0 is the initial point, so size() == iterations + 1.
struct OptTrace {
    std::vector<std::vector<double>> parameters;
    std::vector<double> objective;
    std::vector<double> best_so_far;

    std::size_t size() const { return objective.size(); }
    std::size_t best_index() const;
};

/// Resumable SPSA minimizer. Each iteration draws one Rademacher
/// perturbation, evaluates the two probes, takes the gradient step and then
/// evaluates the nominal iterate for the trace: 3 evaluations per
/// iteration, plus 1 for the initial point.
class SpsaOptimizer {
  public:
    using Objective = std::function<double(const std::vector<double> &)>;
    using PostStep = std::function<void(std::vector<double> &)>;

    SpsaOptimizer(Objective objective, std::vector<double> theta0,
                  SpsaConfig config);

    /// Optional projection applied after every gradient step (e.g. angle
    /// wrapping). Off unless installed.
    void set_post_step(PostStep hook) { post_step_ = std::move(hook); }

    void run(int n_iterations);

    int iteration() const { return iteration_; }
    std::uint64_t evaluations() const { return evaluations_; }
    const std::vector<double> &theta() const { return theta_; }
    const OptTrace &trace() const { return trace_; }
    const SpsaConfig &config() const { return config_; }

    /// Clone for a side branch: same gain position, same RNG state, new
    /// parameters. Both branches then see identical perturbation draws.
    SpsaOptimizer forked_with(std::vector<double> params) const;

    /// Replace the current iterate in place (knowledge adoption); the gain
    /// schedule keeps advancing.
    void replace_theta(std::vector<double> params);

  private:
    double evaluate(const std::vector<double> &theta);
    void record(double objective_value);

    Objective objective_;
    SpsaConfig config_;
    std::vector<double> theta_;
    OptTrace trace_;
    Rng rng_;
    int iteration_ = 0;
    std::uint64_t evaluations_ = 0;
    PostStep post_step_;
};

struct SpsaResult {
    std::vector<double> theta_final;
    OptTrace trace;
};

/// One-shot run over config.iterations; asserts the 3*iterations + 1
/// evaluation contract.
SpsaResult spsa_minimize(SpsaOptimizer::Objective objective,
                         std::vector<double> theta0, const SpsaConfig &config);

} // namespace tokq
