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

#ifndef MACWAM_WAM_H
#define MACWAM_WAM_H

#include <optional>
#include <string>
#include <vector>

#include "macwam/realization.h"
#include "macwam/weight_poly.h"

namespace macwam {

/// Primal matrices are in the indeterminates w(a), dual ones in W(f).
enum class WamDomain { primal, dual };

/// Complete weight adjacency matrix. Entry (s, s') is a polynomial in the p
/// alphabet indeterminates; rows and columns follow the canonical state order.
struct WAMatrix {
    uint32_t p = 2;
    uint32_t left_dim = 0;
    uint32_t right_dim = 0;
    /// Number of symbol coordinates n; every nonzero entry is homogeneous of
    /// this degree.
    uint32_t symbol_length = 0;
    WamDomain domain = WamDomain::primal;
    /// Row-major.
    std::vector<WeightPoly> entries;

    uint64_t rows() const;
    uint64_t cols() const;
    WeightPoly &at(uint64_t row, uint64_t col) {
        return entries[row * cols() + col];
    }
    const WeightPoly &at(uint64_t row, uint64_t col) const {
        return entries[row * cols() + col];
    }
    bool operator==(const WAMatrix &other) const;
};

/// Hamming weight adjacency matrix: entry (s, s') holds integer coefficients
/// indexed by degree, without trailing zeros.
struct HWAMatrix {
    uint32_t p = 2;
    uint32_t left_dim = 0;
    uint32_t right_dim = 0;
    uint32_t symbol_length = 0;
    WamDomain domain = WamDomain::primal;
    std::vector<std::vector<mpz_class>> entries;

    uint64_t rows() const;
    uint64_t cols() const;
    const std::vector<mpz_class> &at(uint64_t row, uint64_t col) const {
        return entries[row * cols() + col];
    }
    bool operator==(const HWAMatrix &other) const = default;
};

/// Sum over codewords (s, a, s') of prod_i w(a_i), accumulated at (s, s').
WAMatrix cwam(const Section &section, uint64_t budget = DEFAULT_BUDGET);

/// Brute-force CWAM of the orthogonal code: each (s^, a^, u^) in C-perp adds
/// prod_i W(a^_i) at (s^, -u^), the right index carrying the sign inverter of
/// the dual realization.
WAMatrix dual_cwam_direct(const Section &section, uint64_t budget = DEFAULT_BUDGET);

/// dual_size * H_y^{-1} L(H_w^{-1} W) conj(H_z)^{-1}, computed exactly. The
/// state transforms run one index digit at a time, in parallel over lines. The right factor is the conjugate transform, so the
/// result is indexed like dual_cwam_direct. Accepts either domain and returns
/// the other one. Throws ConsistencyError if any result coefficient is not a
/// nonnegative integer.
WAMatrix macwilliams_transform(const WAMatrix &wam, const mpz_class &dual_size);

/// Single-threaded reference for macwilliams_transform: sparse polynomial
/// arithmetic and literal matrix products, no shared code with the kernel.
WAMatrix macwilliams_transform_serial(const WAMatrix &wam, const mpz_class &dual_size);

/// Substitutes 1 for x(0) and w for every x(a), a != 0.
HWAMatrix hwam(const WAMatrix &wam);

/// Classical substitution step of the Hamming identity for one entry:
/// (1 + (q-1)w)^n P((1-w) / (1 + (q-1)w)), denominators cleared.
struct ClearedEntry {
    uint32_t scale_exponent = 0;
    std::vector<mpz_class> poly;
    bool operator==(const ClearedEntry &) const = default;
};

/// Row-major matrix of cleared substitutions, one per HWAM entry, with
/// n = hwam.symbol_length.
std::vector<ClearedEntry> hwam_dual_substitution(const HWAMatrix &hwam, uint32_t q);

/// The HWAM of the dual: (dual_size / q^n) H_y^{-1} [cleared] conj(H_z)^{-1}.
HWAMatrix hwam_macwilliams(const HWAMatrix &hwam, const mpz_class &dual_size);

struct EntryMismatch {
    uint64_t row = 0;
    uint64_t col = 0;
    std::string expected;
    std::string actual;
};

struct MacWilliamsReport {
    bool pass = false;
    bool hamming_pass = false;
    mpz_class code_size;
    mpz_class dual_size;
    WAMatrix transformed;
    WAMatrix direct;
    HWAMatrix dual_hwam;
    /// First differing CWAM entry in row-major order, transformed vs direct.
    std::optional<EntryMismatch> mismatch;
};

/// Compares macwilliams_transform(cwam) with dual_cwam_direct entry by entry,
/// and the Hamming route hwam_macwilliams(hwam(cwam)) with hwam(direct).
MacWilliamsReport verify_macwilliams(const Section &section, uint64_t budget = DEFAULT_BUDGET);

/// Digit string of a state index, as used in row/column labels.
std::string state_label(uint32_t p, uint32_t dim, uint64_t index);

std::string render_hamming(const std::vector<mpz_class> &poly, const std::string &var = "w");

}  // namespace macwam

#endif
