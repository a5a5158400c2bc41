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

#ifndef MACWAM_CODE_H
#define MACWAM_CODE_H

#include <cstdint>
#include <span>
#include <vector>

#include "macwam/algebra.h"

namespace macwam {

/// A linear code over Z_p presented by a (not necessarily reduced) generator
/// matrix. The empty generator list is the zero code {0^n}.
class LinearCode {
   public:
    LinearCode(Prime p, size_t length, std::vector<GroupVector> generators = {});

    uint32_t p() const {
        return p_;
    }
    size_t length() const {
        return length_;
    }
    const std::vector<GroupVector> &generators() const {
        return generators_;
    }

   private:
    uint32_t p_;
    size_t length_;
    std::vector<GroupVector> generators_;
};

/// Reduced row echelon basis of the row space. Unique per code.
LinearCode canonicalize(const LinearCode &code);

/// Rank of the generator matrix.
size_t dimension(const LinearCode &code);

/// p^dimension, throwing BudgetError when it exceeds `budget`.
uint64_t code_size(const LinearCode &code, uint64_t budget = DEFAULT_BUDGET);

/// The orthogonal code under the symbolwise inner product, in canonical form.
LinearCode dual(const LinearCode &code);

/// All codewords: u G for u in canonical order over the canonical basis G.
std::vector<GroupVector> enumerate(const LinearCode &code, uint64_t budget = DEFAULT_BUDGET);

bool contains(const LinearCode &code, const GroupVector &v);

bool code_equal(const LinearCode &a, const LinearCode &b);

/// Canonical code spanned by `rows`; incremental, so suited to long row lists.
LinearCode span_of(Prime p, size_t length, const std::vector<GroupVector> &rows);

/// Keeps only the listed coordinates (in the given order).
LinearCode puncture(const LinearCode &code, std::span<const size_t> keep);

/// Codewords that vanish on `zero_coords`, with those coordinates deleted.
LinearCode shorten(const LinearCode &code, std::span<const size_t> zero_coords);

/// Negates coordinates [begin, end) of every generator.
LinearCode negate_coordinates(const LinearCode &code, size_t begin, size_t end);

/// Inverse of a nonzero residue modulo prime p.
uint32_t inverse_mod(uint32_t a, uint32_t p);

}  // namespace macwam

#endif
