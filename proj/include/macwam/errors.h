// Copyright 2026 The macwam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MACWAM_ERRORS_H
#define MACWAM_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace macwam {

/// Default cap on the number of tuples any enumeration may visit.
constexpr uint64_t DEFAULT_BUDGET = uint64_t{1} << 24;

/// Operands disagree on length, group, or shape.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operands live over different primes, or a value is outside its domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computed identity produced a value that cannot be a codeword count.
/// Always indicates a bug rather than bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A realization failed the normality checks.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(std::vector<std::string> violations);
    std::vector<std::string> violations;
};

}  // namespace macwam

#endif
