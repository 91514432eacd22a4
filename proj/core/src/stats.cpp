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
#include "tokq/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tokq {

double quantile_sorted(const std::vector<double> &sorted, double q) {
    if (sorted.empty())
        throw std::invalid_argument("quantile of empty data");
    if (q <= 0.0)
        return sorted.front();
    if (q >= 1.0)
        return sorted.back();
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted.size())
        return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

SummaryStats summarize(std::vector<double> values) {
    if (values.empty())
        throw std::invalid_argument("summarize needs at least one value");
    std::sort(values.begin(), values.end());
    SummaryStats stats;
    stats.n = static_cast<int>(values.size());
    stats.median = quantile_sorted(values, 0.5);
    stats.iqr = quantile_sorted(values, 0.75) - quantile_sorted(values, 0.25);
    double sum = 0.0;
    for (double v : values)
        sum += v;
    stats.mean = sum / stats.n;
    double sq = 0.0;
    for (double v : values)
        sq += (v - stats.mean) * (v - stats.mean);
    const double variance = stats.n > 1 ? sq / (stats.n - 1) : 0.0;
    stats.mean_stderr = std::sqrt(variance / stats.n);
    return stats;
}

} // namespace tokq
