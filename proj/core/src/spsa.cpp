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
#include "tokq/spsa.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tokq {

SpsaConfig SpsaConfig::defaults(int iterations, std::uint64_t seed) {
    SpsaConfig cfg;
    cfg.iterations = iterations;
    cfg.A = 0.1 * iterations;
    cfg.a = 0.1 * std::pow(1.0 + cfg.A, cfg.alpha);
    cfg.seed = seed;
    return cfg;
}

void SpsaConfig::validate() const {
    if (iterations < 1)
        throw std::invalid_argument("iterations must be positive");
    if (!(a > 0.0) || !(c > 0.0))
        throw std::invalid_argument("gains a and c must be positive");
    if (A < 0.0)
        throw std::invalid_argument("stability constant A must be non-negative");
    if (!(alpha > 0.5) || alpha > 1.0)
        throw std::invalid_argument("alpha must lie in (0.5, 1]");
    if (!(gamma_exp > 0.0) || gamma_exp > 0.5)
        throw std::invalid_argument("gamma_exp must lie in (0, 0.5]");
}

std::size_t OptTrace::best_index() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < objective.size(); ++i)
        if (objective[i] < objective[best])
            best = i;
    return best;
}

SpsaOptimizer::SpsaOptimizer(Objective objective, std::vector<double> theta0,
                             SpsaConfig config)
    : objective_(std::move(objective)), config_(config),
      theta_(std::move(theta0)), rng_(config.seed) {
    config_.validate();
    if (theta_.empty())
        throw std::invalid_argument("theta0 must not be empty");
    record(evaluate(theta_));
}

double SpsaOptimizer::evaluate(const std::vector<double> &theta) {
    ++evaluations_;
    const double value = objective_(theta);
    if (!std::isfinite(value)) {
        std::ostringstream ss;
        ss << "objective returned non-finite value at iterate (";
        for (std::size_t i = 0; i < theta.size(); ++i)
            ss << (i ? ", " : "") << theta[i];
        ss << ") on iteration " << iteration_;
        throw std::runtime_error(ss.str());
    }
    return value;
}

void SpsaOptimizer::record(double objective_value) {
    trace_.parameters.push_back(theta_);
    trace_.objective.push_back(objective_value);
    const double best = trace_.best_so_far.empty()
                            ? objective_value
                            : std::min(trace_.best_so_far.back(), objective_value);
    trace_.best_so_far.push_back(best);
}

void SpsaOptimizer::run(int n_iterations) {
    const std::size_t dim = theta_.size();
    std::vector<double> delta(dim), probe(dim);
    for (int step = 0; step < n_iterations; ++step) {
        const int k = iteration_;
        const double a_k = config_.a / std::pow(k + 1.0 + config_.A, config_.alpha);
        const double c_k = config_.c / std::pow(k + 1.0, config_.gamma_exp);

        for (auto &d : delta)
            d = rng_.rademacher();
        for (std::size_t i = 0; i < dim; ++i)
            probe[i] = theta_[i] + c_k * delta[i];
        const double y_plus = evaluate(probe);
        for (std::size_t i = 0; i < dim; ++i)
            probe[i] = theta_[i] - c_k * delta[i];
        const double y_minus = evaluate(probe);

        const double diff = (y_plus - y_minus) / (2.0 * c_k);
        for (std::size_t i = 0; i < dim; ++i)
            theta_[i] -= a_k * diff / delta[i];
        if (post_step_)
            post_step_(theta_);

        ++iteration_;
        record(evaluate(theta_));
    }
}

SpsaOptimizer SpsaOptimizer::forked_with(std::vector<double> params) const {
    if (params.size() != theta_.size())
        throw std::invalid_argument("fork parameter dimension mismatch");
    SpsaOptimizer fork(*this);
    fork.theta_ = std::move(params);
    fork.record(fork.evaluate(fork.theta_));
    return fork;
}

void SpsaOptimizer::replace_theta(std::vector<double> params) {
    if (params.size() != theta_.size())
        throw std::invalid_argument("replacement parameter dimension mismatch");
    theta_ = std::move(params);
}

SpsaResult spsa_minimize(SpsaOptimizer::Objective objective,
                         std::vector<double> theta0, const SpsaConfig &config) {
    SpsaOptimizer opt(std::move(objective), std::move(theta0), config);
    opt.run(config.iterations);
    const auto expected =
        static_cast<std::uint64_t>(3 * config.iterations + 1);
    if (opt.evaluations() != expected)
        throw std::logic_error("SPSA evaluation-count contract violated");
    return {opt.theta(), opt.trace()};
}

} // namespace tokq
