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

// The MacWilliams transform of a CWAM in two independent implementations: a
// dense OpenMP kernel and a sparse single-threaded reference.

#include <set>

#include <omp.h>

#include "macwam/wam.h"

namespace macwam {

namespace {

using Dense = std::vector<CycloRat>;

/// All exponent vectors of length p and total degree n, lexicographic.
std::vector<Exponents> monomials(uint32_t p, uint32_t n) {
    std::vector<Exponents> out;
    Exponents e(p, 0);
    auto rec = [&](auto &&self, uint32_t slot, uint32_t remaining) -> void {
        if (slot + 1 == p) {
            e[slot] = remaining;
            out.push_back(e);
            return;
        }
        for (uint32_t x = 0; x <= remaining; x++) {
            e[slot] = x;
            self(self, slot + 1, remaining - x);
        }
    };
    rec(rec, 0, n);
    return out;
}

/// Inverse-transform linear form of w(a), without the 1/p: sum_f z^{-af} W(f).
std::vector<std::vector<CycloRat>> inverse_forms(uint32_t p) {
    std::vector<std::vector<CycloRat>> forms(p);
    for (uint32_t a = 0; a < p; a++) {
        for (uint32_t f = 0; f < p; f++) {
            forms[a].push_back(CycloRat::root(p, (p - uint64_t(a) * f % p) % p));
        }
    }
    return forms;
}

WeightPoly expand(const Exponents &e, const std::vector<std::vector<CycloRat>> &forms, const CycloRat &coeff) {
    uint32_t p = uint32_t(e.size());
    WeightPoly poly = WeightPoly::constant(p, coeff);
    for (uint32_t a = 0; a < p; a++) {
        for (uint32_t i = 0; i < e[a]; i++) {
            poly = poly.times_linear(forms[a]);
        }
    }
    return poly;
}

mpq_class scale_factor(const WAMatrix &wam, const mpz_class &dual_size, uint64_t rows, uint64_t cols) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), wam.p, wam.symbol_length);
    den *= mpz_class(rows);
    den *= mpz_class(cols);
    mpq_class f(dual_size, den);
    f.canonicalize();
    return f;
}

WAMatrix shell_of(const WAMatrix &wam) {
    WAMatrix out;
    out.p = wam.p;
    out.left_dim = wam.left_dim;
    out.right_dim = wam.right_dim;
    out.symbol_length = wam.symbol_length;
    out.domain = wam.domain == WamDomain::primal ? WamDomain::dual : WamDomain::primal;
    return out;
}

[[noreturn]] void fail_integrality(uint64_t row, uint64_t col, const CycloRat &c) {
    throw ConsistencyError(
        "MacWilliams transform produced coefficient " + c.str() + " at (" + std::to_string(row) + ", " +
        std::to_string(col) + "); a codeword count must be a nonnegative integer");
}

bool is_count(const CycloRat &c) {
    return c.is_integer() && sgn(c.rational()) >= 0;
}

void check_homogeneous(const WAMatrix &wam) {
    for (const auto &e : wam.entries) {
        auto d = e.homogeneous_degree();
        if (!e.is_zero() && (!d || *d != wam.symbol_length)) {
            throw DimensionError("WAM entries must be homogeneous of degree " + std::to_string(wam.symbol_length));
        }
    }
}

/// In-place p-point transform along one base-p digit (of weight stride) of the
/// row index (along_rows) or the column index. conjugate selects z^{-st}.
void transform_digit(
    std::vector<Dense> &grid,
    uint32_t p,
    size_t width,
    uint64_t rows,
    uint64_t cols,
    bool along_rows,
    uint64_t stride,
    bool conjugate) {
    const uint64_t axis = along_rows ? rows : cols;
    const uint64_t other = along_rows ? cols : rows;
    const uint64_t lines = axis / p * other;
    auto cell_of = [&](uint64_t a, uint64_t o) { return along_rows ? a * cols + o : o * cols + a; };
#pragma omp parallel for schedule(dynamic)
    for (uint64_t line = 0; line < lines; line++) {
        uint64_t low = line % (axis / p);
        uint64_t o = line / (axis / p);
        uint64_t base = low / stride * stride * p + low % stride;
        std::vector<Dense> out(p, Dense(width, CycloRat(p)));
        for (uint32_t t = 0; t < p; t++) {
            const Dense &src = grid[cell_of(base + t * stride, o)];
            for (size_t m = 0; m < width; m++) {
                if (src[m].is_zero()) {
                    continue;
                }
                for (uint32_t f = 0; f < p; f++) {
                    uint32_t k = uint32_t(uint64_t(f) * t % p);
                    out[f][m].add_times_root(src[m], conjugate ? (p - k) % p : k);
                }
            }
        }
        for (uint32_t f = 0; f < p; f++) {
            grid[cell_of(base + f * stride, o)] = std::move(out[f]);
        }
    }
}

}  // namespace

WAMatrix macwilliams_transform(const WAMatrix &wam, const mpz_class &dual_size) {
    check_homogeneous(wam);
    const uint32_t p = wam.p;
    const uint32_t n = wam.symbol_length;
    const uint64_t rows = checked_power(p, wam.left_dim);
    const uint64_t cols = checked_power(p, wam.right_dim);
    const uint64_t cells = rows * cols;

    auto basis = monomials(p, n);
    const size_t width = basis.size();
    std::map<Exponents, size_t> basis_index;
    for (size_t i = 0; i < width; i++) {
        basis_index[basis[i]] = i;
    }

    // Distinct source monomials are expanded once each.
    std::set<Exponents> distinct;
    for (const auto &entry : wam.entries) {
        for (const auto &[e, c] : entry.terms()) {
            distinct.insert(e);
        }
    }
    std::vector<Exponents> sources(distinct.begin(), distinct.end());
    std::map<Exponents, size_t> source_index;
    for (size_t i = 0; i < sources.size(); i++) {
        source_index[sources[i]] = i;
    }
    auto forms = inverse_forms(p);
    std::vector<Dense> expanded(sources.size(), Dense(width, CycloRat(p)));
    CycloRat one(p, mpq_class(1));
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < sources.size(); i++) {
        WeightPoly poly = expand(sources[i], forms, one);
        for (const auto &[e, c] : poly.terms()) {
            expanded[i][basis_index.at(e)] = c;
        }
    }

    // Substitution into every entry.
    std::vector<Dense> grid(cells, Dense(width, CycloRat(p)));
#pragma omp parallel for schedule(dynamic)
    for (uint64_t cell = 0; cell < cells; cell++) {
        Dense &dst = grid[cell];
        for (const auto &[e, c] : wam.entries[cell].terms()) {
            const Dense &src = expanded[source_index.at(e)];
            bool rational = c.is_rational();
            for (size_t m = 0; m < width; m++) {
                if (src[m].is_zero()) {
                    continue;
                }
                if (rational) {
                    dst[m].add_scaled(src[m], c.rational());
                } else {
                    dst[m] += src[m] * c;
                }
            }
        }
    }

    // conj(H_y) on the left and H_z on the right, one index digit at a time:
    // the character table of (Z_p)^n is the n-fold tensor power of the p-point one.
    for (uint32_t j = 0; j < wam.left_dim; j++) {
        transform_digit(grid, p, width, rows, cols, true, checked_power(p, j), true);
    }
    for (uint32_t j = 0; j < wam.right_dim; j++) {
        transform_digit(grid, p, width, rows, cols, false, checked_power(p, j), false);
    }

    // Scale (1/|S_y|, 1/|S_z| and 1/p^n folded in) and check integrality.
    const mpq_class factor = scale_factor(wam, dual_size, rows, cols);
    std::vector<char> bad(cells, 0);
#pragma omp parallel for schedule(static)
    for (uint64_t cell = 0; cell < cells; cell++) {
        for (auto &c : grid[cell]) {
            c.scale(factor);
            if (!is_count(c)) {
                bad[cell] = 1;
            }
        }
    }
    const std::vector<Dense> &result = grid;

    WAMatrix out = shell_of(wam);
    out.entries.assign(cells, WeightPoly(p));
    for (uint64_t cell = 0; cell < cells; cell++) {
        for (size_t m = 0; m < width; m++) {
            if (bad[cell] && !is_count(result[cell][m])) {
                fail_integrality(cell / cols, cell % cols, result[cell][m]);
            }
            out.entries[cell].add_term(basis[m], result[cell][m]);
        }
    }
    return out;
}

WAMatrix macwilliams_transform_serial(const WAMatrix &wam, const mpz_class &dual_size) {
    check_homogeneous(wam);
    const uint32_t p = wam.p;
    TransformMatrix hy(Prime(p), wam.left_dim);
    TransformMatrix hz(Prime(p), wam.right_dim);
    const uint64_t rows = hy.size();
    const uint64_t cols = hz.size();
    auto forms = inverse_forms(p);

    // Step 1: w(a) -> sum_f z^{-af} W(f) in every entry, term by term.
    std::vector<WeightPoly> substituted;
    for (const auto &entry : wam.entries) {
        WeightPoly acc(p);
        for (const auto &[e, c] : entry.terms()) {
            acc += expand(e, forms, c);
        }
        substituted.push_back(std::move(acc));
    }

    // Step 2: conj(H_y) * L * H_z, one row and one column at a time.
    std::vector<WeightPoly> left(rows * cols, WeightPoly(p));
    for (uint64_t s = 0; s < rows; s++) {
        for (uint64_t z = 0; z < cols; z++) {
            for (uint64_t y = 0; y < rows; y++) {
                left[s * cols + z].add_rotated(substituted[y * cols + z], (p - hy.exponent(s, y)) % p);
            }
        }
    }
    WAMatrix out = shell_of(wam);
    const mpq_class factor = scale_factor(wam, dual_size, rows, cols);
    for (uint64_t s = 0; s < rows; s++) {
        for (uint64_t v = 0; v < cols; v++) {
            WeightPoly acc(p);
            for (uint64_t z = 0; z < cols; z++) {
                acc.add_rotated(left[s * cols + z], hz.exponent(z, v));
            }
            // Step 3: scale.
            acc.scale(factor);
            for (const auto &[e, c] : acc.terms()) {
                if (!is_count(c)) {
                    fail_integrality(s, v, c);
                }
            }
            out.entries.push_back(std::move(acc));
        }
    }
    return out;
}

}  // namespace macwam
