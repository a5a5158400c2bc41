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

#ifndef MACWAM_REALIZATION_H
#define MACWAM_REALIZATION_H

#include <string>
#include <string_view>
#include <vector>

#include "macwam/code.h"
#include "macwam/dparse.h"

namespace macwam {

enum class VarKind { symbol, state };

struct VarDecl {
    std::string id;
    VarKind kind = VarKind::symbol;
    uint32_t dim = 1;
    bool operator==(const VarDecl &) const = default;
};

/// Binds one variable to a run of code coordinates. A sign of -1 records that
/// the coordinates were negated when the block was dualized; the negation is
/// already folded into the stored code, so the stored codewords constrain the
/// variable values directly.
struct PortBinding {
    std::string var;
    int sign = 1;
    bool operator==(const PortBinding &) const = default;
};

/// A constraint code whose coordinates are assigned to ports left to right.
struct ConstraintBlock {
    std::string id;
    LinearCode code;
    std::vector<PortBinding> ports;
};

struct NormalRealization {
    uint32_t p = 2;
    std::vector<VarDecl> vars;
    std::vector<ConstraintBlock> constraints;

    /// nullptr when absent.
    const VarDecl *find_var(std::string_view id) const;
    /// Throws DimensionError when absent.
    const ConstraintBlock &constraint(std::string_view id) const;
};

/// Every normality violation found, one message per problem. Empty iff valid.
/// With allow_open_states, a state bound by a single port is accepted as an
/// open edge of a fragment.
std::vector<std::string> validate(const NormalRealization &r, bool allow_open_states = false);

enum class Closure { zero_boundary, tail_biting, single_section };

/// The (state, symbol, next-state) code spanned by the impulse-response
/// transitions of a feedforward encoder in controller form, of length 2v + n
/// where v is the sum of the row degrees.
LinearCode trellis_section_code(const PolyMatrix &g);

/// Conventional trellis of `sections` identical sections.
///
/// zero_boundary drops the two end states and shortens the end sections on
/// them. tail_biting wraps the last right state onto the first left state.
/// single_section (sections == 1) emits one block with distinct left and right
/// state variables of degree 1; this fragment is not normal and exists for the
/// per-constraint WAM and sum-product routines.
NormalRealization build_trellis(const PolyMatrix &g, size_t sections, Closure closure);

/// Replaces every constraint by its orthogonal code and inserts one sign
/// inverter per state edge, at the port that comes first in (constraint
/// declaration order, port index) order. Open states of a fragment get none.
NormalRealization dualize(const NormalRealization &r);

struct Behavior {
    std::vector<VarDecl> vars;
    /// One value per variable, in declaration order.
    std::vector<std::vector<GroupVector>> configs;
};

/// All configurations satisfying every constraint, by a depth-first join over
/// the constraints in declaration order. `budget` caps the number of partial
/// configurations visited.
Behavior full_behavior(const NormalRealization &r, uint64_t budget = DEFAULT_BUDGET);

/// Canonical generator matrix of the projection of the behavior onto the
/// symbol variables (declaration order).
LinearCode code_of(const NormalRealization &r, uint64_t budget = DEFAULT_BUDGET);

/// One constraint viewed as a trellis section: left-state | symbols | right-state.
/// Absent states have dimension 0.
struct Section {
    LinearCode code;
    uint32_t left_dim = 0;
    std::vector<uint32_t> symbol_dims;
    uint32_t right_dim = 0;

    uint32_t p() const {
        return code.p();
    }
    uint32_t symbol_length() const;
};

/// Validates that the dimensions add up to the code length.
Section make_section(LinearCode code, uint32_t left_dim, std::vector<uint32_t> symbol_dims, uint32_t right_dim);

/// Interprets a block as a section: a leading state port is the left state,
/// a trailing state port the right state, everything between must be symbols.
Section section_of(const NormalRealization &r, std::string_view constraint_id);

}  // namespace macwam

#endif
