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

#include <cstdlib>
#include <thread>
#include <vector>

namespace tokq {

/// Worker cap: TOKQ_THREADS when set, hardware concurrency otherwise,
/// never more than `n_jobs`.
inline unsigned worker_count(std::size_t n_jobs) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0)
        workers = 1;
    if (const char *env = std::getenv("TOKQ_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1)
            workers = static_cast<unsigned>(parsed);
    }
    if (n_jobs < workers)
        workers = static_cast<unsigned>(n_jobs);
    return workers > 0 ? workers : 1;
}

/// Runs fn(i) for i in [0, n). Each job must write only its own output slot;
/// results are then identical for any worker count.
template <typename Fn> void parallel_for(std::size_t n, Fn &&fn) {
    const unsigned workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([=, &fn] {
            for (std::size_t i = w; i < n; i += workers)
                fn(i);
        });
    }
    for (auto &t : pool)
        t.join();
}

} // namespace tokq
