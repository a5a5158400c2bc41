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

#ifndef MACWAM_WEIGHT_POLY_H
#define MACWAM_WEIGHT_POLY_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macwam/algebra.h"

namespace macwam {

/// Exponent of each alphabet indeterminate, indexed by the symbol value in Z_p.
using Exponents = std::vector<uint32_t>;

/// Sparse polynomial in the p indeterminates {x(a) : a in Z_p} with
/// coefficients in Q(w_p). Zero coefficients are never stored; terms iterate in
/// lexicographic order of their exponent vectors.
class WeightPoly {
   public:
    explicit WeightPoly(uint32_t p = 2);

    static WeightPoly constant(uint32_t p, const CycloRat &c);
    /// Product of x(a_i) over the symbol values a_i.
    static WeightPoly monomial_of(uint32_t p, std::span<const uint32_t> symbols);

    uint32_t p() const {
        return p_;
    }
    const std::map<Exponents, CycloRat> &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }

    void add_term(const Exponents &exps, const CycloRat &coeff);
    /// this += other * w^k.
    void add_rotated(const WeightPoly &other, uint64_t k);
    void scale(const mpq_class &factor);
    /// Product with the linear form sum_f form[f] x(f).
    WeightPoly times_linear(std::span<const CycloRat> form) const;

    WeightPoly &operator+=(const WeightPoly &other);
    WeightPoly operator*(const CycloRat &c) const;
    bool operator==(const WeightPoly &other) const;

    /// Common total degree of all terms, or nullopt if mixed. Zero poly: nullopt.
    std::optional<uint32_t> homogeneous_degree() const;
    /// Value with every indeterminate set to 1.
    CycloRat sum_of_coefficients() const;

    /// Human-readable form such as "w0^2 + 2*w0*w1".
    std::string str(const std::string &var = "w") const;

   private:
    uint32_t p_;
    std::map<Exponents, CycloRat> terms_;
};

}  // namespace macwam

#endif
