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
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tokq/spsa.hpp"
#include "tokq/stats.hpp"

using namespace tokq;

TEST_CASE("constant objective never moves") {
    auto constant = [](const std::vector<double> &) { return 3.0; };
    const auto result = spsa_minimize(constant, {0.5, -0.5},
                                      SpsaConfig::defaults(40, 1));
    CHECK(result.theta_final[0] == 0.5);
    CHECK(result.theta_final[1] == -0.5);
    for (double obj : result.trace.objective)
        CHECK(obj == 3.0);
}

TEST_CASE("quadratic convergence with default gains") {
    // f(t) = (t-1)^2, theta0 = 0, 100 iterations; median |t-1| over 50 seeds.
    auto quadratic = [](const std::vector<double> &t) {
        return (t[0] - 1.0) * (t[0] - 1.0);
    };
    std::vector<double> errors;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto result =
            spsa_minimize(quadratic, {0.0}, SpsaConfig::defaults(100, seed));
        errors.push_back(std::abs(result.theta_final[0] - 1.0));
    }
    CHECK(summarize(errors).median < 0.05);
}

TEST_CASE("evaluation count contract: 3 per iteration plus the initial point") {
    int evals = 0;
    auto counting = [&evals](const std::vector<double> &t) {
        ++evals;
        return t[0] * t[0];
    };
    SpsaOptimizer opt(counting, {2.0}, SpsaConfig::defaults(25, 3));
    CHECK(evals == 1);
    opt.run(25);
    CHECK(evals == 3 * 25 + 1);
    CHECK(opt.evaluations() == static_cast<std::uint64_t>(evals));
    CHECK(opt.trace().size() == 26);
    CHECK(opt.trace().parameters.size() == 26);
}

TEST_CASE("best_so_far is non-increasing on a 2-parameter sphere") {
    auto sphere = [](const std::vector<double> &t) {
        return t[0] * t[0] + t[1] * t[1];
    };
    for (std::uint64_t seed = 10; seed < 20; ++seed) {
        const auto result =
            spsa_minimize(sphere, {1.0, -2.0}, SpsaConfig::defaults(60, seed));
        for (std::size_t i = 1; i < result.trace.best_so_far.size(); ++i)
            CHECK(result.trace.best_so_far[i] <= result.trace.best_so_far[i - 1]);
        CHECK(result.trace.best_so_far.back() <=
              result.trace.objective[result.trace.best_index()] + 1e-15);
    }
}

TEST_CASE("identical inputs give bit-identical traces") {
    auto rosen = [](const std::vector<double> &t) {
        const double a = 1.0 - t[0];
        const double b = t[1] - t[0] * t[0];
        return a * a + 100.0 * b * b;
    };
    const auto cfg = SpsaConfig::defaults(30, 777);
    const auto r1 = spsa_minimize(rosen, {0.2, 0.3}, cfg);
    const auto r2 = spsa_minimize(rosen, {0.2, 0.3}, cfg);
    CHECK(r1.trace.objective == r2.trace.objective);
    CHECK(r1.trace.parameters == r2.trace.parameters);
}

TEST_CASE("non-finite objective aborts with the iterate in the message") {
    auto exploding = [](const std::vector<double> &t) {
        return t[0] > 0.05 ? std::numeric_limits<double>::quiet_NaN()
                           : t[0] * t[0];
    };
    try {
        spsa_minimize(exploding, {0.049}, SpsaConfig::defaults(50, 5));
        FAIL("expected abort");
    } catch (const std::runtime_error &e) {
        CHECK(std::string(e.what()).find("non-finite") != std::string::npos);
        CHECK(std::string(e.what()).find("(") != std::string::npos);
    }
}

TEST_CASE("config invariants are validated") {
    SpsaConfig bad = SpsaConfig::defaults(10, 1);
    bad.alpha = 0.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = SpsaConfig::defaults(10, 1);
    bad.gamma_exp = 0.6;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = SpsaConfig::defaults(10, 1);
    bad.c = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("fork shares history and perturbation stream") {
    auto sphere = [](const std::vector<double> &t) {
        return t[0] * t[0] + t[1] * t[1];
    };
    SpsaOptimizer opt(sphere, {1.0, 1.0}, SpsaConfig::defaults(40, 12));
    opt.run(10);
    auto fork = opt.forked_with({0.5, 0.5});
    CHECK(fork.iteration() == opt.iteration());
    CHECK(fork.theta()[0] == 0.5);
    // both continue deterministically
    fork.run(5);
    opt.run(5);
    CHECK(opt.iteration() == 15);
    CHECK(fork.iteration() == 15);
}

TEST_CASE("post-step projection hook is applied") {
    auto sphere = [](const std::vector<double> &t) { return t[0] * t[0]; };
    SpsaOptimizer opt(sphere, {0.4}, SpsaConfig::defaults(20, 9));
    opt.set_post_step([](std::vector<double> &t) {
        t[0] = std::clamp(t[0], -0.1, 0.1);
    });
    opt.run(20);
    CHECK(std::abs(opt.theta()[0]) <= 0.1);
}
