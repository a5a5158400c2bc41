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

#include "macwam/sumproduct.h"

namespace macwam {

namespace {

void check_inputs(
    const Section &section, const Message &incoming, std::span<const Message> weights, MessageDomain domain) {
    auto fail = [](const std::string &what) { throw DimensionError("sum-product: " + what); };
    if (incoming.domain != domain) {
        fail("incoming message has the wrong domain tag");
    }
    if (incoming.p != section.p() || incoming.dim != section.left_dim) {
        fail(
            "incoming message is over (Z_" + std::to_string(incoming.p) + ")^" + std::to_string(incoming.dim) +
            ", left state is (Z_" + std::to_string(section.p()) + ")^" + std::to_string(section.left_dim));
    }
    if (weights.size() != section.symbol_dims.size()) {
        fail(
            "expected " + std::to_string(section.symbol_dims.size()) + " weight functions, got " +
            std::to_string(weights.size()));
    }
    for (size_t i = 0; i < weights.size(); i++) {
        if (weights[i].domain != domain) {
            fail("weight function " + std::to_string(i) + " has the wrong domain tag");
        }
        if (weights[i].p != section.p() || weights[i].dim != section.symbol_dims[i]) {
            fail("weight function " + std::to_string(i) + " does not match its symbol variable");
        }
    }
}

Message update(
    const Section &section,
    const Message &incoming,
    std::span<const Message> weights,
    SpaCounter *counter,
    uint64_t budget,
    MessageDomain domain) {
    check_inputs(section, incoming, weights, domain);
    Message out = Message::zeros(section.p(), section.right_dim, domain);
    for (const auto &w : enumerate(section.code, budget)) {
        CycloRat product = incoming.values[w.slice(0, section.left_dim).index()];
        size_t offset = section.left_dim;
        for (size_t i = 0; i < weights.size(); i++) {
            uint32_t d = section.symbol_dims[i];
            product *= weights[i].values[w.slice(offset, offset + d).index()];
            offset += d;
        }
        if (counter) {
            counter->multiplications += weights.size();
        }
        out.values[w.slice(offset, w.size()).index()] += product;
    }
    return out;
}

Message transform_with(const TransformMatrix &h, const Message &m, MessageDomain domain) {
    Message out;
    out.p = m.p;
    out.dim = m.dim;
    out.domain = domain;
    out.values = h.apply(m.values);
    return out;
}

}  // namespace

Message Message::zeros(uint32_t p, uint32_t dim, MessageDomain domain) {
    Message m;
    m.p = p;
    m.dim = dim;
    m.domain = domain;
    m.values.assign(checked_power(p, dim), CycloRat(p));
    return m;
}

Message Message::from_rationals(uint32_t p, uint32_t dim, const std::vector<mpq_class> &values) {
    Message m = zeros(p, dim);
    if (values.size() != m.values.size()) {
        throw DimensionError(
            "message over (Z_" + std::to_string(p) + ")^" + std::to_string(dim) + " needs " +
            std::to_string(m.values.size()) + " values, got " + std::to_string(values.size()));
    }
    for (size_t i = 0; i < values.size(); i++) {
        m.values[i] = CycloRat(p, values[i]);
    }
    return m;
}

bool Message::operator==(const Message &other) const {
    return p == other.p && dim == other.dim && domain == other.domain && values == other.values;
}

Message spa_update(
    const Section &section,
    const Message &incoming,
    std::span<const Message> weights,
    SpaCounter *counter,
    uint64_t budget) {
    return update(section, incoming, weights, counter, budget, MessageDomain::primal);
}

Message transform_message(const Message &m) {
    if (m.domain != MessageDomain::primal) {
        throw DimensionError("transform_message expects a primal message");
    }
    return transform_with(TransformMatrix(Prime(m.p), m.dim), m, MessageDomain::transformed);
}

Message dual_spa_update(
    const Section &dual,
    const Message &incoming,
    std::span<const Message> weights,
    SpaCounter *counter,
    uint64_t budget) {
    return update(dual, incoming, weights, counter, budget, MessageDomain::transformed);
}

Section dual_section(const Section &section) {
    return make_section(dual(section.code), section.left_dim, section.symbol_dims, section.right_dim);
}

Message spa_via_dual(
    const Section &section,
    const Message &incoming,
    std::span<const Message> weights,
    SpaCounter *counter,
    uint64_t budget) {
    check_inputs(section, incoming, weights, MessageDomain::primal);
    Section dual = dual_section(section);
    Message transformed_in = transform_message(incoming);
    std::vector<Message> transformed_weights;
    for (const auto &f : weights) {
        transformed_weights.push_back(transform_message(f));
    }
    Message dual_out = dual_spa_update(dual, transformed_in, transformed_weights, counter, budget);

    // m'(s') = |C-perp|^{-1} sum_u z^{+s'.u} M'(u): the output of the dual update
    // is indexed by the un-negated coordinate, so the forward matrix applies.
    TransformMatrix h(Prime(section.p()), section.right_dim);
    Message out = transform_with(h, dual_out, MessageDomain::primal);
    mpz_class dual_size;
    mpz_ui_pow_ui(dual_size.get_mpz_t(), section.p(), dimension(dual.code));
    mpq_class inv(1, dual_size);
    inv.canonicalize();
    for (auto &v : out.values) {
        v.scale(inv);
    }
    return out;
}

}  // namespace macwam
