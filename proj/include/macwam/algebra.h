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

#ifndef MACWAM_ALGEBRA_H
#define MACWAM_ALGEBRA_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "macwam/errors.h"

namespace macwam {

/// A prime modulus. Construction rejects composites and values below 2.
struct Prime {
    explicit Prime(uint32_t value);
    operator uint32_t() const {
        return value;
    }
    uint32_t value;
};

bool is_prime(uint32_t value);

/// p^n, throwing BudgetError when the result exceeds `limit`.
uint64_t checked_power(uint32_t p, uint64_t n, uint64_t limit = UINT64_MAX / 2);

/// An element of (Z_p)^n.
///
/// Group elements are indexed in the canonical state order: index i maps to
/// the vector whose j-th coordinate is floor(i / p^j) mod p, so the leftmost
/// coordinate is the least significant digit. For p = 2, n = 2 this yields the
/// order 00, 10, 01, 11.
struct GroupVector {
    uint32_t p = 2;
    std::vector<uint32_t> coords;

    GroupVector() = default;
    GroupVector(uint32_t p, std::vector<uint32_t> coords);
    static GroupVector zero(uint32_t p, size_t n);
    static GroupVector from_index(uint32_t p, size_t n, uint64_t index);
    /// Parses a digit string such as "0120".
    static GroupVector from_digits(uint32_t p, std::string_view digits);

    size_t size() const {
        return coords.size();
    }
    uint64_t index() const;
    bool is_zero() const;
    std::string digits() const;
    GroupVector operator+(const GroupVector &other) const;
    GroupVector operator-() const;
    GroupVector slice(size_t begin, size_t end) const;
    bool operator==(const GroupVector &other) const = default;
    auto operator<=>(const GroupVector &other) const = default;
};

/// Sum of u_i v_i mod p.
uint32_t dot(const GroupVector &u, const GroupVector &v);

/// Exact element of Q(z) with z = exp(2 pi i / p).
///
/// Stored densely as sum_{i < p-1} c_i z^i, i.e. reduced modulo the cyclotomic
/// polynomial 1 + z + ... + z^{p-1}. Coefficients are GMP rationals, so equality
/// is structural.
class CycloRat {
   public:
    explicit CycloRat(uint32_t p = 2);
    CycloRat(uint32_t p, const mpq_class &rational);
    CycloRat(uint32_t p, std::vector<mpq_class> coeffs);

    /// z^k.
    static CycloRat root(uint32_t p, uint64_t k);

    uint32_t p() const {
        return p_;
    }
    const std::vector<mpq_class> &coeffs() const {
        return c_;
    }

    bool is_zero() const;
    bool is_rational() const;
    bool is_integer() const;
    /// The value when is_rational(); throws DomainError otherwise.
    const mpq_class &rational() const;

    CycloRat conj() const;
    CycloRat times_root(uint64_t k) const;
    /// this += x * z^k; a rotation, no multiplications.
    void add_times_root(const CycloRat &x, uint64_t k);
    void scale(const mpq_class &factor);
    /// this += x * factor, without a temporary.
    void add_scaled(const CycloRat &x, const mpq_class &factor);

    CycloRat &operator+=(const CycloRat &other);
    CycloRat &operator-=(const CycloRat &other);
    CycloRat &operator*=(const CycloRat &other);
    CycloRat operator+(const CycloRat &other) const;
    CycloRat operator-(const CycloRat &other) const;
    CycloRat operator*(const CycloRat &other) const;
    CycloRat operator-() const;
    bool operator==(const CycloRat &other) const;

    std::complex<double> to_complex() const;
    /// e.g. "1/2 - z^2", with z the primitive root.
    std::string str() const;

   private:
    void check_same_field(const CycloRat &other) const;

    uint32_t p_;
    std::vector<mpq_class> c_;
};

CycloRat cyclo_mul(const CycloRat &a, const CycloRat &b);
CycloRat cyclo_conj(const CycloRat &a);

/// z^{f.t} as a field element.
CycloRat character(const GroupVector &f, const GroupVector &t);

/// Character table of (Z_p)^n, entry (f, t) = z^{f.t}, rows and columns in
/// canonical state order. Entries are kept as exponents of w.
class TransformMatrix {
   public:
    TransformMatrix(Prime p, uint32_t n);

    uint32_t p() const {
        return p_;
    }
    uint32_t n() const {
        return n_;
    }
    uint64_t size() const {
        return size_;
    }
    /// f.t mod p for group indices f, t.
    uint32_t exponent(uint64_t f, uint64_t t) const {
        return exponents_[f * size_ + t];
    }
    CycloRat entry(uint64_t f, uint64_t t) const;
    CycloRat conj_entry(uint64_t f, uint64_t t) const;

    /// H v.
    std::vector<CycloRat> apply(std::span<const CycloRat> v) const;
    /// H* v.
    std::vector<CycloRat> apply_conj(std::span<const CycloRat> v) const;

   private:
    uint32_t p_;
    uint32_t n_;
    uint64_t size_;
    std::vector<uint32_t> exponents_;
};

TransformMatrix transform_matrix(Prime p, uint32_t n);

/// |F|^{-1} H* v, the inverse of apply().
std::vector<CycloRat> inverse_transform_apply(const TransformMatrix &h, std::span<const CycloRat> v);

/// Parses "a", "-a" or "a/b" into a canonical rational.
mpq_class parse_rational(std::string_view text);

}  // namespace macwam

#endif
