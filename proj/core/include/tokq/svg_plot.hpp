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

#include <filesystem>
#include <string>
#include <vector>

namespace tokq {

struct BoxGroup {
    std::string name;
    std::vector<double> values; // non-empty
};

/// Static SVG boxplot, one box per group in the given order. Boxes use the
/// interpolated quartiles of stats.hpp, whiskers extend to the furthest
/// points within 1.5 IQR of the box, and everything beyond is drawn as an
/// outlier dot.
void emit_boxplot(const std::vector<BoxGroup> &groups,
                  const std::filesystem::path &out);

} // namespace tokq
