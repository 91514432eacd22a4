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

#include <vector>

namespace tokq {

struct SummaryStats {
    double median;
    double iqr;
    double mean;
    double mean_stderr; // standard error of the mean
    int n;
};

/// Quantile of an ascending-sorted array at 0-based position q * (n - 1)
/// with linear interpolation.
double quantile_sorted(const std::vector<double> &sorted, double q);

/// Median/IQR under the interpolated-quantile rule plus mean and its
/// standard error. Throws on empty input.
SummaryStats summarize(std::vector<double> values);

} // namespace tokq
