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

#include <stdexcept>
#include <string>

namespace tokq {

/// Input file could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                            std::move(message)
                                      : std::move(message)),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Problem size exceeds a hard resource bound (dense state, enumeration).
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Experiment configuration rejected before any run starts.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string field, const std::string &message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string &field() const { return field_; }

  private:
    std::string field_;
};

} // namespace tokq
