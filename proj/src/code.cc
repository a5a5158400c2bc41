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

#include "macwam/code.h"

#include <algorithm>

namespace macwam {

namespace {

using Row = std::vector<uint32_t>;

struct Echelon {
    std::vector<Row> rows;
    std::vector<size_t> pivots;
};

Echelon row_reduce(uint32_t p, size_t n, const std::vector<GroupVector> &generators) {
    std::vector<Row> m;
    m.reserve(generators.size());
    for (const auto &g : generators) {
        m.push_back(g.coords);
    }
    Echelon e;
    size_t r = 0;
    for (size_t col = 0; col < n && r < m.size(); col++) {
        size_t pivot = r;
        while (pivot < m.size() && m[pivot][col] == 0) {
            pivot++;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[r], m[pivot]);
        uint32_t inv = inverse_mod(m[r][col], p);
        for (auto &x : m[r]) {
            x = uint32_t(uint64_t(x) * inv % p);
        }
        for (size_t i = 0; i < m.size(); i++) {
            if (i == r || m[i][col] == 0) {
                continue;
            }
            uint64_t factor = m[i][col];
            for (size_t j = 0; j < n; j++) {
                m[i][j] = uint32_t((m[i][j] + (p - factor) * m[r][j]) % p);
            }
        }
        e.pivots.push_back(col);
        r++;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

void check_compatible(const LinearCode &a, uint32_t p, size_t n) {
    if (a.p() != p) {
        throw DimensionError("codes over different primes");
    }
    if (a.length() != n) {
        throw DimensionError(
            "length mismatch: " + std::to_string(a.length()) + " vs " + std::to_string(n));
    }
}

}  // namespace

uint32_t inverse_mod(uint32_t a, uint32_t p) {
    a %= p;
    if (a == 0) {
        throw DomainError("zero has no inverse mod " + std::to_string(p));
    }
    // Fermat: a^{p-2}.
    uint64_t result = 1;
    uint64_t base = a;
    uint64_t e = p - 2;
    while (e) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return uint32_t(result);
}

LinearCode::LinearCode(Prime p, size_t length, std::vector<GroupVector> generators)
    : p_(p), length_(length), generators_(std::move(generators)) {
    for (const auto &g : generators_) {
        if (g.p != p_) {
            throw DimensionError("generator over p=" + std::to_string(g.p) + " in a code over p=" + std::to_string(p_));
        }
        if (g.size() != length_) {
            throw DimensionError(
                "generator " + g.digits() + " has length " + std::to_string(g.size()) + ", code length is " +
                std::to_string(length_));
        }
    }
}

LinearCode canonicalize(const LinearCode &code) {
    auto e = row_reduce(code.p(), code.length(), code.generators());
    std::vector<GroupVector> gens;
    gens.reserve(e.rows.size());
    for (auto &r : e.rows) {
        GroupVector g;
        g.p = code.p();
        g.coords = std::move(r);
        gens.push_back(std::move(g));
    }
    return LinearCode(Prime(code.p()), code.length(), std::move(gens));
}

size_t dimension(const LinearCode &code) {
    return row_reduce(code.p(), code.length(), code.generators()).rows.size();
}

uint64_t code_size(const LinearCode &code, uint64_t budget) {
    return checked_power(code.p(), dimension(code), budget);
}

LinearCode dual(const LinearCode &code) {
    uint32_t p = code.p();
    size_t n = code.length();
    auto e = row_reduce(p, n, code.generators());
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) {
        is_pivot[c] = true;
    }
    // For each free column f: x_f = 1, x_{pivot_i} = -row_i[f].
    std::vector<GroupVector> gens;
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        GroupVector v = GroupVector::zero(p, n);
        v.coords[f] = 1;
        for (size_t i = 0; i < e.rows.size(); i++) {
            v.coords[e.pivots[i]] = (p - e.rows[i][f]) % p;
        }
        gens.push_back(std::move(v));
    }
    return canonicalize(LinearCode(Prime(p), n, std::move(gens)));
}

std::vector<GroupVector> enumerate(const LinearCode &code, uint64_t budget) {
    auto basis = canonicalize(code);
    const auto &g = basis.generators();
    uint32_t p = code.p();
    uint64_t count = checked_power(p, g.size(), budget);
    std::vector<GroupVector> out;
    out.reserve(count);
    // Odometer over messages, least significant coefficient first; the running
    // codeword is updated incrementally.
    std::vector<uint32_t> msg(g.size(), 0);
    GroupVector word = GroupVector::zero(p, code.length());
    for (uint64_t i = 0; i < count; i++) {
        out.push_back(word);
        for (size_t j = 0; j < g.size(); j++) {
            word = word + g[j];
            msg[j]++;
            if (msg[j] < p) {
                break;
            }
            msg[j] = 0;
        }
    }
    return out;
}

bool contains(const LinearCode &code, const GroupVector &v) {
    check_compatible(code, v.p, v.size());
    uint32_t p = code.p();
    auto e = row_reduce(p, code.length(), code.generators());
    Row r = v.coords;
    for (size_t i = 0; i < e.rows.size(); i++) {
        uint64_t factor = r[e.pivots[i]];
        if (factor == 0) {
            continue;
        }
        for (size_t j = 0; j < r.size(); j++) {
            r[j] = uint32_t((r[j] + (p - factor) * e.rows[i][j]) % p);
        }
    }
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool code_equal(const LinearCode &a, const LinearCode &b) {
    check_compatible(a, b.p(), b.length());
    return canonicalize(a).generators() == canonicalize(b).generators();
}

LinearCode span_of(Prime p, size_t length, const std::vector<GroupVector> &rows) {
    std::vector<Row> basis;
    std::vector<size_t> pivots;
    for (const auto &v : rows) {
        if (v.p != p || v.size() != length) {
            throw DimensionError("span_of: row " + v.digits() + " does not match the code parameters");
        }
        Row r = v.coords;
        for (size_t i = 0; i < basis.size(); i++) {
            uint64_t factor = r[pivots[i]];
            if (factor == 0) {
                continue;
            }
            for (size_t j = 0; j < length; j++) {
                r[j] = uint32_t((r[j] + (p - factor) * basis[i][j]) % p);
            }
        }
        size_t lead = 0;
        while (lead < length && r[lead] == 0) {
            lead++;
        }
        if (lead == length) {
            continue;
        }
        uint32_t inv = inverse_mod(r[lead], p);
        for (auto &x : r) {
            x = uint32_t(uint64_t(x) * inv % p);
        }
        basis.push_back(std::move(r));
        pivots.push_back(lead);
        if (basis.size() == length) {
            break;
        }
    }
    std::vector<GroupVector> gens;
    for (auto &b : basis) {
        gens.emplace_back(uint32_t(p), std::move(b));
    }
    return canonicalize(LinearCode(p, length, std::move(gens)));
}

LinearCode puncture(const LinearCode &code, std::span<const size_t> keep) {
    std::vector<GroupVector> gens;
    for (const auto &g : code.generators()) {
        GroupVector v = GroupVector::zero(code.p(), keep.size());
        for (size_t j = 0; j < keep.size(); j++) {
            if (keep[j] >= code.length()) {
                throw DimensionError("puncture coordinate out of range");
            }
            v.coords[j] = g.coords[keep[j]];
        }
        gens.push_back(std::move(v));
    }
    return canonicalize(LinearCode(Prime(code.p()), keep.size(), std::move(gens)));
}

LinearCode shorten(const LinearCode &code, std::span<const size_t> zero_coords) {
    // Shortening C on X is the dual of puncturing C-perp on X.
    std::vector<bool> drop(code.length(), false);
    for (auto c : zero_coords) {
        if (c >= code.length()) {
            throw DimensionError("shorten coordinate out of range");
        }
        drop[c] = true;
    }
    std::vector<size_t> keep;
    for (size_t j = 0; j < code.length(); j++) {
        if (!drop[j]) {
            keep.push_back(j);
        }
    }
    return dual(puncture(dual(code), keep));
}

LinearCode negate_coordinates(const LinearCode &code, size_t begin, size_t end) {
    if (begin > end || end > code.length()) {
        throw DimensionError("negation range out of bounds");
    }
    auto gens = code.generators();
    for (auto &g : gens) {
        for (size_t j = begin; j < end; j++) {
            g.coords[j] = (code.p() - g.coords[j]) % code.p();
        }
    }
    return LinearCode(Prime(code.p()), code.length(), std::move(gens));
}

}  // namespace macwam
