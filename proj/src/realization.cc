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

#include "macwam/realization.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace macwam {

namespace {

std::string state_id(size_t k) {
    return "S" + std::to_string(k);
}

std::string symbol_id(size_t k) {
    return "A" + std::to_string(k);
}

std::string constraint_id(size_t k) {
    return "C" + std::to_string(k);
}

/// Resolved port: variable index plus its coordinate range inside the code.
struct PortSlot {
    size_t var;
    size_t offset;
    size_t dim;
};

std::vector<PortSlot> resolve_ports(const NormalRealization &r, const ConstraintBlock &c) {
    std::vector<PortSlot> slots;
    size_t offset = 0;
    for (const auto &port : c.ports) {
        auto it = std::find_if(r.vars.begin(), r.vars.end(), [&](const VarDecl &v) { return v.id == port.var; });
        if (it == r.vars.end()) {
            throw ValidationError({"constraint " + c.id + ": unknown variable " + port.var});
        }
        slots.push_back({size_t(it - r.vars.begin()), offset, it->dim});
        offset += it->dim;
    }
    if (offset != c.code.length()) {
        throw ValidationError(
            {"constraint " + c.id + ": length mismatch (code length " + std::to_string(c.code.length()) +
             ", ports total " + std::to_string(offset) + ")"});
    }
    if (c.code.p() != r.p) {
        throw ValidationError({"constraint " + c.id + ": p mismatch"});
    }
    return slots;
}

}  // namespace

const VarDecl *NormalRealization::find_var(std::string_view id) const {
    for (const auto &v : vars) {
        if (v.id == id) {
            return &v;
        }
    }
    return nullptr;
}

const ConstraintBlock &NormalRealization::constraint(std::string_view id) const {
    for (const auto &c : constraints) {
        if (c.id == id) {
            return c;
        }
    }
    throw DimensionError("no constraint with id " + std::string(id));
}

namespace {

std::vector<std::string> violations(const NormalRealization &r, bool open_states) {
    std::vector<std::string> out;
    if (!is_prime(r.p)) {
        out.push_back("p=" + std::to_string(r.p) + " is not prime");
    }
    std::map<std::string, size_t> degree;
    for (const auto &v : r.vars) {
        if (degree.count(v.id)) {
            out.push_back("variable " + v.id + ": duplicate id");
        }
        degree[v.id] = 0;
        if (v.dim < 1) {
            out.push_back("variable " + v.id + ": dim 0");
        }
    }
    std::set<std::string> constraint_ids;
    for (const auto &c : r.constraints) {
        if (!constraint_ids.insert(c.id).second) {
            out.push_back("constraint " + c.id + ": duplicate id");
        }
        if (c.code.p() != r.p) {
            out.push_back(
                "constraint " + c.id + ": p mismatch (code over " + std::to_string(c.code.p()) + ", realization over " +
                std::to_string(r.p) + ")");
        }
        size_t total = 0;
        bool all_known = true;
        for (const auto &port : c.ports) {
            const VarDecl *v = r.find_var(port.var);
            if (v == nullptr) {
                out.push_back("constraint " + c.id + ": unknown variable " + port.var);
                all_known = false;
                continue;
            }
            degree[port.var]++;
            total += v->dim;
            if (port.sign != 1 && port.sign != -1) {
                out.push_back("constraint " + c.id + ": port " + port.var + " has sign " + std::to_string(port.sign));
            } else if (port.sign == -1 && v->kind == VarKind::symbol) {
                out.push_back("constraint " + c.id + ": sign inverter on symbol port " + port.var);
            }
        }
        if (all_known && total != c.code.length()) {
            out.push_back(
                "constraint " + c.id + ": length mismatch (code length " + std::to_string(c.code.length()) +
                ", ports total " + std::to_string(total) + ")");
        }
    }
    for (const auto &v : r.vars) {
        size_t d = degree[v.id];
        if (v.kind == VarKind::symbol && d != 1) {
            out.push_back("variable " + v.id + ": symbol degree " + std::to_string(d));
        }
        if (v.kind == VarKind::state && d != 2 && !(open_states && d == 1)) {
            out.push_back("variable " + v.id + ": state degree " + std::to_string(d));
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> validate(const NormalRealization &r, bool allow_open_states) {
    return violations(r, allow_open_states);
}

LinearCode trellis_section_code(const PolyMatrix &g) {
    size_t k = g.inputs();
    size_t n = g.outputs();
    std::vector<size_t> cell_offset(k + 1, 0);
    for (size_t i = 0; i < k; i++) {
        cell_offset[i + 1] = cell_offset[i] + size_t(g.row_degree(i));
    }
    size_t nu = cell_offset[k];
    std::vector<GroupVector> transitions;
    for (size_t i = 0; i < k; i++) {
        size_t deg = size_t(g.row_degree(i));
        // marker(i, j) is the unit vector of memory cell j of input i for
        // 1 <= j <= deg, and zero at both ends.
        auto marker = [&](size_t j, GroupVector &v, size_t at) {
            if (j >= 1 && j <= deg) {
                v.coords[at + cell_offset[i] + j - 1] = 1;
            }
        };
        for (size_t j = 0; j <= deg; j++) {
            GroupVector v = GroupVector::zero(g.p, 2 * nu + n);
            marker(j, v, 0);
            auto a = g.impulse_response(i, j);
            std::copy(a.coords.begin(), a.coords.end(), v.coords.begin() + nu);
            marker(j + 1, v, nu + n);
            if (!v.is_zero()) {
                transitions.push_back(std::move(v));
            }
        }
    }
    return LinearCode(Prime(g.p), 2 * nu + n, std::move(transitions));
}

NormalRealization build_trellis(const PolyMatrix &g, size_t sections, Closure closure) {
    if (sections < 1) {
        throw DimensionError("a trellis needs at least one section");
    }
    if (g.outputs() == 0 || g.inputs() == 0) {
        throw DimensionError("generator matrix must be at least 1x1");
    }
    if (closure == Closure::single_section && sections != 1) {
        throw DimensionError("single-section closure requires exactly one section");
    }
    LinearCode section = trellis_section_code(g);
    uint32_t n = uint32_t(g.outputs());
    uint32_t nu = uint32_t((section.length() - n) / 2);

    NormalRealization r;
    r.p = g.p;
    auto add_state = [&](size_t k) { r.vars.push_back({state_id(k), VarKind::state, nu}); };
    auto add_block = [&](size_t k, LinearCode code, std::vector<std::string> port_vars) {
        ConstraintBlock b{constraint_id(k), std::move(code), {}};
        for (auto &v : port_vars) {
            b.ports.push_back({std::move(v), 1});
        }
        r.constraints.push_back(std::move(b));
    };

    if (closure == Closure::single_section) {
        if (nu) {
            add_state(0);
        }
        r.vars.push_back({symbol_id(0), VarKind::symbol, n});
        if (nu) {
            add_state(1);
            add_block(0, section, {state_id(0), symbol_id(0), state_id(1)});
        } else {
            add_block(0, section, {symbol_id(0)});
        }
        return r;
    }

    for (size_t k = 0; k < sections; k++) {
        r.vars.push_back({symbol_id(k), VarKind::symbol, n});
    }
    if (nu == 0) {
        for (size_t k = 0; k < sections; k++) {
            add_block(k, section, {symbol_id(k)});
        }
        return r;
    }

    if (closure == Closure::tail_biting) {
        for (size_t k = 0; k < sections; k++) {
            add_state(k);
        }
        for (size_t k = 0; k < sections; k++) {
            add_block(k, section, {state_id(k), symbol_id(k), state_id((k + 1) % sections)});
        }
        return r;
    }

    // Zero boundary: states S1 .. S_{L-1}; the end sections are shortened on
    // the missing boundary states.
    for (size_t k = 1; k < sections; k++) {
        add_state(k);
    }
    std::vector<size_t> left_coords;
    std::vector<size_t> right_coords;
    for (size_t j = 0; j < nu; j++) {
        left_coords.push_back(j);
        right_coords.push_back(nu + n + j);
    }
    for (size_t k = 0; k < sections; k++) {
        bool first = k == 0;
        bool last = k + 1 == sections;
        std::vector<size_t> zero;
        if (first) {
            zero.insert(zero.end(), left_coords.begin(), left_coords.end());
        }
        if (last) {
            zero.insert(zero.end(), right_coords.begin(), right_coords.end());
        }
        LinearCode code = zero.empty() ? section : shorten(section, zero);
        std::vector<std::string> ports;
        if (!first) {
            ports.push_back(state_id(k));
        }
        ports.push_back(symbol_id(k));
        if (!last) {
            ports.push_back(state_id(k + 1));
        }
        add_block(k, std::move(code), std::move(ports));
    }
    return r;
}

NormalRealization dualize(const NormalRealization &r) {
    auto problems = violations(r, true);
    if (!problems.empty()) {
        throw ValidationError(std::move(problems));
    }
    // Open states (bound once) carry no inverter. Otherwise the first binding of
    // each state variable in (constraint, port) order is flipped.
    std::map<std::string, size_t> bindings;
    for (const auto &c : r.constraints) {
        for (const auto &port : c.ports) {
            bindings[port.var]++;
        }
    }
    std::set<std::string> seen;
    NormalRealization out;
    out.p = r.p;
    out.vars = r.vars;
    for (const auto &c : r.constraints) {
        ConstraintBlock d{c.id, dual(c.code), c.ports};
        size_t offset = 0;
        for (auto &port : d.ports) {
            const VarDecl *v = r.find_var(port.var);
            if (v->kind == VarKind::state && bindings[port.var] == 2 && seen.insert(port.var).second) {
                port.sign = -port.sign;
                d.code = negate_coordinates(d.code, offset, offset + v->dim);
            }
            offset += v->dim;
        }
        d.code = canonicalize(d.code);
        out.constraints.push_back(std::move(d));
    }
    return out;
}

Behavior full_behavior(const NormalRealization &r, uint64_t budget) {
    Behavior out;
    out.vars = r.vars;

    struct Plan {
        std::vector<GroupVector> words;
        std::vector<PortSlot> slots;
        // Slots whose variable was assigned by an earlier constraint.
        std::vector<size_t> bound;
        // Slots this constraint assigns.
        std::vector<size_t> fresh;
        std::map<std::vector<uint32_t>, std::vector<size_t>> buckets;
    };

    std::vector<bool> assigned(r.vars.size(), false);
    std::vector<Plan> plans;
    for (const auto &c : r.constraints) {
        Plan plan;
        plan.slots = resolve_ports(r, c);
        std::map<size_t, size_t> first_slot;
        std::vector<std::pair<size_t, size_t>> repeats;
        for (size_t s = 0; s < plan.slots.size(); s++) {
            size_t var = plan.slots[s].var;
            if (assigned[var]) {
                plan.bound.push_back(s);
            } else if (first_slot.count(var)) {
                repeats.emplace_back(first_slot[var], s);
            } else {
                first_slot[var] = s;
                plan.fresh.push_back(s);
            }
        }
        for (auto &[var, s] : first_slot) {
            assigned[var] = true;
        }
        for (auto &w : enumerate(c.code, budget)) {
            bool self_consistent = true;
            for (auto [a, b] : repeats) {
                const auto &sa = plan.slots[a];
                const auto &sb = plan.slots[b];
                if (!std::equal(
                        w.coords.begin() + sa.offset, w.coords.begin() + sa.offset + sa.dim,
                        w.coords.begin() + sb.offset)) {
                    self_consistent = false;
                    break;
                }
            }
            if (!self_consistent) {
                continue;
            }
            std::vector<uint32_t> key;
            for (auto s : plan.bound) {
                const auto &slot = plan.slots[s];
                key.insert(key.end(), w.coords.begin() + slot.offset, w.coords.begin() + slot.offset + slot.dim);
            }
            plan.buckets[key].push_back(plan.words.size());
            plan.words.push_back(std::move(w));
        }
        plans.push_back(std::move(plan));
    }
    for (size_t v = 0; v < r.vars.size(); v++) {
        if (!assigned[v]) {
            throw ValidationError({"variable " + r.vars[v].id + " is not bound to any constraint"});
        }
    }

    std::vector<GroupVector> values(r.vars.size());
    for (size_t v = 0; v < r.vars.size(); v++) {
        values[v] = GroupVector::zero(r.p, r.vars[v].dim);
    }
    uint64_t visited = 0;
    std::function<void(size_t)> join = [&](size_t depth) {
        if (depth == plans.size()) {
            out.configs.push_back(values);
            return;
        }
        const Plan &plan = plans[depth];
        std::vector<uint32_t> key;
        for (auto s : plan.bound) {
            const auto &coords = values[plan.slots[s].var].coords;
            key.insert(key.end(), coords.begin(), coords.end());
        }
        auto it = plan.buckets.find(key);
        if (it == plan.buckets.end()) {
            return;
        }
        for (size_t w : it->second) {
            if (++visited > budget) {
                throw BudgetError("behavior enumeration exceeded the budget of " + std::to_string(budget) + " tuples");
            }
            const auto &word = plan.words[w];
            for (auto s : plan.fresh) {
                const auto &slot = plan.slots[s];
                auto &dst = values[slot.var].coords;
                std::copy(word.coords.begin() + slot.offset, word.coords.begin() + slot.offset + slot.dim, dst.begin());
            }
            join(depth + 1);
        }
    };
    join(0);
    return out;
}

LinearCode code_of(const NormalRealization &r, uint64_t budget) {
    auto behavior = full_behavior(r, budget);
    std::vector<size_t> symbols;
    size_t length = 0;
    for (size_t v = 0; v < r.vars.size(); v++) {
        if (r.vars[v].kind == VarKind::symbol) {
            symbols.push_back(v);
            length += r.vars[v].dim;
        }
    }
    std::vector<GroupVector> rows;
    rows.reserve(behavior.configs.size());
    for (const auto &config : behavior.configs) {
        GroupVector row = GroupVector::zero(r.p, 0);
        for (auto v : symbols) {
            row.coords.insert(row.coords.end(), config[v].coords.begin(), config[v].coords.end());
        }
        rows.push_back(std::move(row));
    }
    return span_of(Prime(r.p), length, rows);
}

uint32_t Section::symbol_length() const {
    uint32_t total = 0;
    for (auto d : symbol_dims) {
        total += d;
    }
    return total;
}

Section make_section(LinearCode code, uint32_t left_dim, std::vector<uint32_t> symbol_dims, uint32_t right_dim) {
    Section s{std::move(code), left_dim, std::move(symbol_dims), right_dim};
    if (size_t(s.left_dim) + s.symbol_length() + s.right_dim != s.code.length()) {
        throw DimensionError(
            "section layout " + std::to_string(s.left_dim) + "|" + std::to_string(s.symbol_length()) + "|" +
            std::to_string(s.right_dim) + " does not match code length " + std::to_string(s.code.length()));
    }
    return s;
}

Section section_of(const NormalRealization &r, std::string_view constraint_id) {
    const ConstraintBlock &c = r.constraint(constraint_id);
    auto slots = resolve_ports(r, c);
    uint32_t left = 0;
    uint32_t right = 0;
    std::vector<uint32_t> symbols;
    for (size_t s = 0; s < slots.size(); s++) {
        const VarDecl &v = r.vars[slots[s].var];
        if (v.kind == VarKind::symbol) {
            symbols.push_back(v.dim);
        } else if (s == 0) {
            left = v.dim;
        } else if (s + 1 == slots.size()) {
            right = v.dim;
        } else {
            throw DimensionError(
                "constraint " + c.id + ": state port " + v.id +
                " is not at either end; sections need the layout left-state | symbols | right-state");
        }
    }
    return make_section(c.code, left, std::move(symbols), right);
}

}  // namespace macwam
