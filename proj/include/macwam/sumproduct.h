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

#ifndef MACWAM_SUMPRODUCT_H
#define MACWAM_SUMPRODUCT_H

#include <span>
#include <vector>

#include "macwam/realization.h"

namespace macwam {

enum class MessageDomain { primal, transformed };

/// A function on (Z_p)^dim, one exact value per group element in canonical
/// order. Doubles as a weight function on a symbol variable.
struct Message {
    uint32_t p = 2;
    uint32_t dim = 0;
    std::vector<CycloRat> values;
    MessageDomain domain = MessageDomain::primal;

    static Message zeros(uint32_t p, uint32_t dim, MessageDomain domain = MessageDomain::primal);
    static Message from_rationals(uint32_t p, uint32_t dim, const std::vector<mpq_class> &values);
    bool operator==(const Message &other) const;
};

/// Counts the multiplications performed inside the per-codeword products.
struct SpaCounter {
    uint64_t multiplications = 0;
};

/// m'(s') = sum over codewords (s, a_1..a_r, s') of m(s) f_1(a_1) ... f_r(a_r).
Message spa_update(
    const Section &section,
    const Message &incoming,
    std::span<const Message> weights,
    SpaCounter *counter = nullptr,
    uint64_t budget = DEFAULT_BUDGET);

/// H m.
Message transform_message(const Message &m);

/// spa_update over the plain orthogonal code on transformed messages; the
/// output is grouped by the un-negated right coordinate.
Message dual_spa_update(
    const Section &dual_section,
    const Message &incoming,
    std::span<const Message> weights,
    SpaCounter *counter = nullptr,
    uint64_t budget = DEFAULT_BUDGET);

/// The dual route: transform, update over C-perp, then |C-perp|^{-1} H M'.
/// Equal to spa_update exactly. `counter` sees only the dual update.
Message spa_via_dual(
    const Section &section,
    const Message &incoming,
    std::span<const Message> weights,
    SpaCounter *counter = nullptr,
    uint64_t budget = DEFAULT_BUDGET);

/// The orthogonal code of the section with the same port layout.
Section dual_section(const Section &section);

}  // namespace macwam

#endif
