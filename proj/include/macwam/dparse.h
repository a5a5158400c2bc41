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

#ifndef MACWAM_DPARSE_H
#define MACWAM_DPARSE_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "macwam/algebra.h"

namespace macwam {

/// Polynomial in D over Z_p. coeffs[j] is the coefficient of D^j; trailing
/// zeros are never stored, so the zero polynomial has no coefficients.
struct PolyD {
    uint32_t p = 2;
    std::vector<uint32_t> coeffs;

    /// -1 for the zero polynomial.
    int degree() const {
        return int(coeffs.size()) - 1;
    }
    uint32_t coeff(size_t j) const {
        return j < coeffs.size() ? coeffs[j] : 0;
    }
    bool operator==(const PolyD &) const = default;
};

/// k x n matrix of PolyD, one row per encoder input.
struct PolyMatrix {
    uint32_t p = 2;
    std::vector<std::vector<PolyD>> rows;

    size_t inputs() const {
        return rows.size();
    }
    size_t outputs() const {
        return rows.empty() ? 0 : rows[0].size();
    }
    /// Largest entry degree in the row; 0 for an all-zero row.
    int row_degree(size_t row) const;
    /// The j-th output n-tuple of the impulse response of input `row`.
    GroupVector impulse_response(size_t row, size_t j) const;
    bool operator==(const PolyMatrix &) const = default;
};

/// Syntax error in D-transform text. `offset` is a byte offset into the text
/// originally handed to the parser.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t offset, std::optional<size_t> row = {}, std::optional<size_t> col = {});
    size_t offset;
    std::optional<size_t> row;
    std::optional<size_t> col;
};

/// A literal coefficient that is not a residue below p.
class CoefficientError : public ParseError {
   public:
    using ParseError::ParseError;
};

/// Grammar (whitespace ignored):
///     poly  := '0' | term ('+' term)*
///     term  := coeff | coeff? 'D' ('^' nat)?
/// Coefficients are decimal literals that must be < p. A degree may appear once.
PolyD parse_poly(std::string_view text, Prime p);

/// Rows separated by ';', entries by ','.
PolyMatrix parse_matrix(std::string_view text, Prime p);

std::string render(const PolyD &poly);
std::string render(const PolyMatrix &matrix);

}  // namespace macwam

#endif
