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

#include "macwam/dparse.h"

#include <cctype>

namespace macwam {

namespace {

std::string describe(const std::string &message, size_t offset, std::optional<size_t> row, std::optional<size_t> col) {
    std::string out = message + " at offset " + std::to_string(offset);
    if (row) {
        out += " (row " + std::to_string(*row) + ", column " + std::to_string(*col) + ")";
    }
    return out;
}

constexpr uint64_t MAX_DEGREE = 4096;

class PolyParser {
   public:
    PolyParser(std::string_view text, size_t base, uint32_t p) : text_(text), base_(base), p_(p) {
    }

    PolyD parse() {
        skip_ws();
        if (at_end()) {
            fail("empty polynomial");
        }
        PolyD poly;
        poly.p = p_;
        std::vector<bool> seen;
        while (true) {
            skip_ws();
            size_t term_start = pos_;
            auto [coeff, degree] = term();
            if (degree >= seen.size()) {
                seen.resize(degree + 1, false);
            }
            if (seen[degree]) {
                throw ParseError("duplicate term of degree " + std::to_string(degree), base_ + term_start);
            }
            seen[degree] = true;
            if (coeff) {
                if (poly.coeffs.size() <= degree) {
                    poly.coeffs.resize(degree + 1, 0);
                }
                poly.coeffs[degree] = coeff;
            }
            skip_ws();
            if (at_end()) {
                break;
            }
            if (text_[pos_] != '+') {
                fail(std::string("expected '+' but found '") + text_[pos_] + "'");
            }
            pos_++;
        }
        while (!poly.coeffs.empty() && poly.coeffs.back() == 0) {
            poly.coeffs.pop_back();
        }
        return poly;
    }

   private:
    bool at_end() const {
        return pos_ >= text_.size();
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(message, base_ + pos_);
    }

    std::optional<uint64_t> number() {
        size_t start = pos_;
        uint64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + uint64_t(text_[pos_] - '0');
            if (value > UINT32_MAX) {
                throw ParseError("number too large", base_ + start);
            }
            pos_++;
        }
        if (pos_ == start) {
            return std::nullopt;
        }
        return value;
    }

    std::pair<uint32_t, size_t> term() {
        size_t start = pos_;
        auto coeff = number();
        if (coeff && *coeff >= p_) {
            throw CoefficientError(
                "coefficient " + std::to_string(*coeff) + " is not below p=" + std::to_string(p_), base_ + start);
        }
        skip_ws();
        if (!at_end() && text_[pos_] == 'D') {
            pos_++;
            size_t degree = 1;
            skip_ws();
            if (!at_end() && text_[pos_] == '^') {
                pos_++;
                skip_ws();
                auto e = number();
                if (!e) {
                    fail("expected exponent after '^'");
                }
                if (*e > MAX_DEGREE) {
                    fail("exponent above " + std::to_string(MAX_DEGREE));
                }
                degree = size_t(*e);
            } else if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                fail("exponent must be written with '^'");
            }
            return {uint32_t(coeff.value_or(1)), degree};
        }
        if (!coeff) {
            if (at_end()) {
                fail("expected a term");
            }
            fail(std::string("unexpected character '") + text_[pos_] + "'");
        }
        return {uint32_t(*coeff), 0};
    }

    std::string_view text_;
    size_t base_;
    uint32_t p_;
    size_t pos_ = 0;
};

std::string strip_offset(const std::string &what) {
    return what.substr(0, what.rfind(" at offset"));
}

}  // namespace

ParseError::ParseError(const std::string &message, size_t offset, std::optional<size_t> row, std::optional<size_t> col)
    : std::invalid_argument(describe(message, offset, row, col)), offset(offset), row(row), col(col) {
}

int PolyMatrix::row_degree(size_t row) const {
    int d = 0;
    for (const auto &e : rows.at(row)) {
        d = std::max(d, e.degree());
    }
    return d;
}

GroupVector PolyMatrix::impulse_response(size_t row, size_t j) const {
    GroupVector v = GroupVector::zero(p, outputs());
    for (size_t c = 0; c < outputs(); c++) {
        v.coords[c] = rows.at(row)[c].coeff(j);
    }
    return v;
}

PolyD parse_poly(std::string_view text, Prime p) {
    return PolyParser(text, 0, p).parse();
}

PolyMatrix parse_matrix(std::string_view text, Prime p) {
    PolyMatrix m;
    m.p = p;
    size_t row_start = 0;
    size_t row_index = 0;
    while (true) {
        size_t row_end = text.find(';', row_start);
        if (row_end == std::string_view::npos) {
            row_end = text.size();
        }
        std::vector<PolyD> row;
        size_t entry_start = row_start;
        size_t col_index = 0;
        while (true) {
            size_t entry_end = text.find(',', entry_start);
            if (entry_end == std::string_view::npos || entry_end > row_end) {
                entry_end = row_end;
            }
            try {
                row.push_back(PolyParser(text.substr(entry_start, entry_end - entry_start), entry_start, p).parse());
            } catch (const CoefficientError &e) {
                throw CoefficientError(strip_offset(e.what()), e.offset, row_index, col_index);
            } catch (const ParseError &e) {
                throw ParseError(strip_offset(e.what()), e.offset, row_index, col_index);
            }
            if (entry_end == row_end) {
                break;
            }
            entry_start = entry_end + 1;
            col_index++;
        }
        if (!m.rows.empty() && row.size() != m.rows[0].size()) {
            throw ParseError(
                "ragged rows: row " + std::to_string(row_index) + " has " + std::to_string(row.size()) +
                    " entries, expected " + std::to_string(m.rows[0].size()),
                row_start, row_index, 0);
        }
        m.rows.push_back(std::move(row));
        if (row_end == text.size()) {
            break;
        }
        row_start = row_end + 1;
        row_index++;
    }
    return m;
}

std::string render(const PolyD &poly) {
    if (poly.coeffs.empty()) {
        return "0";
    }
    std::string out;
    for (size_t j = 0; j < poly.coeffs.size(); j++) {
        uint32_t c = poly.coeffs[j];
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (j == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c);
        }
        out += "D";
        if (j > 1) {
            out += "^" + std::to_string(j);
        }
    }
    return out;
}

std::string render(const PolyMatrix &matrix) {
    std::string out;
    for (size_t i = 0; i < matrix.rows.size(); i++) {
        if (i) {
            out += "; ";
        }
        for (size_t j = 0; j < matrix.rows[i].size(); j++) {
            if (j) {
                out += ", ";
            }
            out += render(matrix.rows[i][j]);
        }
    }
    return out;
}

}  // namespace macwam
