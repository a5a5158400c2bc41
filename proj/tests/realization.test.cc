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

#include <gtest/gtest.h>

#include "oracles.h"

using namespace macwam;

namespace {

const char *RATE_HALF = "1+D^2, 1+D+D^2";
const char *RATE_TWO_THIRDS = "1+D^2, 2+D, 0; 1, 0, 2";

LinearCode code_from(uint32_t p, std::vector<std::string> rows) {
    std::vector<GroupVector> gens;
    for (const auto &r : rows) {
        gens.push_back(GroupVector::from_digits(p, r));
    }
    return LinearCode(Prime(p), rows[0].size(), std::move(gens));
}

NormalRealization trellis(const char *g, uint32_t p, size_t sections, Closure closure) {
    return build_trellis(parse_matrix(g, Prime(p)), sections, closure);
}

bool has_violation(const NormalRealization &r, const std::string &needle) {
    for (const auto &v : validate(r)) {
        if (v.find(needle) != std::string::npos) {
            return true;
        }
    }
    return false;
}

// Symbol sequences of a zero-started, zero-terminated encoder over L sections,
// computed by running the shift-register encoder on every input sequence whose
// memory drains inside the window.
std::set<std::vector<uint32_t>> encoder_outputs(const PolyMatrix &g, size_t sections) {
    uint32_t p = g.p;
    size_t k = g.inputs();
    size_t n = g.outputs();
    std::set<std::vector<uint32_t>> out;
    for (const auto &u : oracle::all_vectors(p, k * sections)) {
        std::vector<uint32_t> y(n * sections, 0);
        bool drains = true;
        for (size_t i = 0; i < k; i++) {
            int deg = g.row_degree(i);
            for (size_t t = 0; t < sections; t++) {
                uint32_t x = u[t * k + i];
                if (x && t + size_t(deg) >= sections) {
                    drains = false;
                }
                for (int j = 0; j <= deg && t + j < sections; j++) {
                    auto h = g.impulse_response(i, j);
                    for (size_t c = 0; c < n; c++) {
                        y[(t + j) * n + c] = (y[(t + j) * n + c] + x * h.coords[c]) % p;
                    }
                }
            }
        }
        if (drains) {
            out.insert(y);
        }
    }
    return out;
}

std::set<std::vector<uint32_t>> words_of(const LinearCode &c) {
    std::set<std::vector<uint32_t>> out;
    for (const auto &w : enumerate(c)) {
        out.insert(w.coords);
    }
    return out;
}

}  // namespace

TEST(TrellisSection, RateHalf) {
    auto c = trellis_section_code(parse_matrix(RATE_HALF, Prime(2)));
    EXPECT_EQ(c.length(), 6u);
    EXPECT_EQ(dimension(c), 3u);
    EXPECT_TRUE(code_equal(c, code_from(2, {"001110", "100101", "011100"})));
}

TEST(TrellisSection, RateTwoThirds) {
    auto c = trellis_section_code(parse_matrix(RATE_TWO_THIRDS, Prime(3)));
    EXPECT_EQ(c.length(), 7u);
    EXPECT_EQ(dimension(c), 4u);
    EXPECT_TRUE(code_equal(c, code_from(3, {"0012010", "1001001", "0110000", "0010200"})));
}

TEST(TrellisSection, MemorylessRow) {
    auto c = trellis_section_code(parse_matrix("1, 1", Prime(2)));
    EXPECT_EQ(c.length(), 2u);
    EXPECT_TRUE(code_equal(c, code_from(2, {"11"})));
}

TEST(BuildTrellis, SingleSectionLayout) {
    auto r = trellis(RATE_HALF, 2, 1, Closure::single_section);
    ASSERT_EQ(r.constraints.size(), 1u);
    ASSERT_EQ(r.vars.size(), 3u);
    EXPECT_EQ(r.vars[0].kind, VarKind::state);
    EXPECT_EQ(r.vars[0].dim, 2u);
    EXPECT_EQ(r.vars[1].kind, VarKind::symbol);
    EXPECT_TRUE(has_violation(r, "state degree 1"));
    EXPECT_TRUE(validate(r, true).empty());
    auto s = section_of(r, "C0");
    EXPECT_EQ(s.left_dim, 2u);
    EXPECT_EQ(s.right_dim, 2u);
    EXPECT_EQ(s.symbol_dims, std::vector<uint32_t>{2});
    EXPECT_THROW(trellis(RATE_HALF, 2, 2, Closure::single_section), DimensionError);
    EXPECT_THROW(trellis(RATE_HALF, 2, 0, Closure::zero_boundary), DimensionError);
}

TEST(BuildTrellis, ChainsAndCyclesAreNormal) {
    for (size_t L = 1; L <= 4; L++) {
        for (auto closure : {Closure::zero_boundary, Closure::tail_biting}) {
            auto r = trellis(RATE_TWO_THIRDS, 3, L, closure);
            EXPECT_TRUE(validate(r).empty()) << L;
            EXPECT_EQ(r.constraints.size(), L);
        }
    }
}

TEST(BuildTrellis, ZeroBoundaryIsTruncatedEncoder) {
    for (auto [g, p] : {std::pair{RATE_HALF, 2u}, std::pair{RATE_TWO_THIRDS, 3u}}) {
        auto m = parse_matrix(g, Prime(p));
        for (size_t L = 1; L <= 4; L++) {
            auto r = build_trellis(m, L, Closure::zero_boundary);
            EXPECT_EQ(words_of(code_of(r)), encoder_outputs(m, L)) << g << " L=" << L;
        }
    }
}

TEST(BuildTrellis, ImpulseResponseWindow) {
    auto r = trellis(RATE_HALF, 2, 3, Closure::zero_boundary);
    auto c = code_of(r);
    EXPECT_TRUE(contains(c, GroupVector::from_digits(2, "110111")));
    EXPECT_EQ(dimension(c), 1u);
    auto r4 = trellis(RATE_HALF, 2, 4, Closure::zero_boundary);
    EXPECT_TRUE(code_equal(code_of(r4), code_from(2, {"11011100", "00110111"})));
}

TEST(BuildTrellis, ZeroGenerator) {
    auto r = trellis("0", 2, 3, Closure::zero_boundary);
    auto c = code_of(r);
    EXPECT_EQ(c.length(), 3u);
    EXPECT_EQ(dimension(c), 0u);
}

TEST(BuildTrellis, TailBitingContainsWrappedImpulse) {
    auto r = trellis(RATE_HALF, 2, 4, Closure::tail_biting);
    auto c = code_of(r);
    EXPECT_TRUE(contains(c, GroupVector::from_digits(2, "11011100")));
    EXPECT_TRUE(contains(c, GroupVector::from_digits(2, "01110011")));
    EXPECT_EQ(dimension(c), 4u);
}

TEST(BuildTrellis, SingleSectionTailBite) {
    auto r = trellis(RATE_HALF, 2, 1, Closure::tail_biting);
    EXPECT_TRUE(validate(r).empty());
    // States must agree: s = s', so only transitions that return to their state.
    for (const auto &config : full_behavior(r).configs) {
        EXPECT_EQ(config.size(), 2u);
    }
}

TEST(Validate, ReportsEveryViolation) {
    NormalRealization r;
    r.p = 2;
    r.vars = {{"A", VarKind::symbol, 1}, {"S", VarKind::state, 1}, {"Z", VarKind::symbol, 0}};
    LinearCode c3(Prime(2), 3);
    r.constraints = {
        {"C0", c3, {{"A", 1}, {"S", 1}, {"S", 1}}},
        {"C1", c3, {{"A", 1}, {"S", 1}}},
        {"C2", LinearCode(Prime(3), 1), {{"Q", 1}}},
    };
    EXPECT_TRUE(has_violation(r, "variable A: symbol degree 2"));
    EXPECT_TRUE(has_violation(r, "variable S: state degree 3"));
    EXPECT_TRUE(has_violation(r, "constraint C1: length mismatch (code length 3, ports total 2)"));
    EXPECT_TRUE(has_violation(r, "constraint C2: p mismatch"));
    EXPECT_TRUE(has_violation(r, "unknown variable Q"));
    EXPECT_TRUE(has_violation(r, "variable Z: dim 0"));
}

TEST(Validate, SignOnSymbolPort) {
    NormalRealization r;
    r.p = 2;
    r.vars = {{"A", VarKind::symbol, 1}};
    r.constraints = {{"C0", LinearCode(Prime(2), 1), {{"A", -1}}}};
    EXPECT_TRUE(has_violation(r, "sign inverter on symbol port"));
}

TEST(Dualize, ConstraintCodesAreOrthogonal) {
    auto r = trellis(RATE_TWO_THIRDS, 3, 3, Closure::tail_biting);
    auto d = dualize(r);
    size_t inverters = 0;
    for (size_t c = 0; c < r.constraints.size(); c++) {
        LinearCode stored = d.constraints[c].code;
        size_t offset = 0;
        for (size_t i = 0; i < d.constraints[c].ports.size(); i++) {
            const auto &port = d.constraints[c].ports[i];
            uint32_t dim = d.find_var(port.var)->dim;
            if (port.sign == -1) {
                stored = negate_coordinates(stored, offset, offset + dim);
                inverters++;
            }
            offset += dim;
        }
        EXPECT_TRUE(code_equal(stored, dual(r.constraints[c].code)));
    }
    EXPECT_EQ(inverters, 3u);
}

TEST(Dualize, Involution) {
    for (size_t L = 1; L <= 3; L++) {
        auto r = trellis(RATE_TWO_THIRDS, 3, L, Closure::tail_biting);
        auto dd = dualize(dualize(r));
        EXPECT_EQ(dd.vars, r.vars);
        for (size_t c = 0; c < r.constraints.size(); c++) {
            EXPECT_EQ(dd.constraints[c].ports, r.constraints[c].ports);
            EXPECT_TRUE(code_equal(dd.constraints[c].code, r.constraints[c].code));
        }
    }
}

TEST(Dualize, FragmentHasNoInverters) {
    auto r = trellis(RATE_TWO_THIRDS, 3, 1, Closure::single_section);
    auto d = dualize(r);
    for (const auto &port : d.constraints[0].ports) {
        EXPECT_EQ(port.sign, 1);
    }
    EXPECT_TRUE(code_equal(d.constraints[0].code, code_from(3, {"0001012", "2120211", "2211100"})));
}

TEST(Dualize, RejectsInvalid) {
    NormalRealization r;
    r.p = 2;
    r.vars = {{"A", VarKind::symbol, 1}};
    r.constraints = {{"C0", LinearCode(Prime(2), 1), {{"A", 1}}}, {"C1", LinearCode(Prime(2), 1), {{"A", 1}}}};
    EXPECT_THROW(dualize(r), ValidationError);
}

TEST(RealizationDuality, DeskScale) {
    for (auto [g, p] : {std::pair{RATE_HALF, 2u}, std::pair{RATE_TWO_THIRDS, 3u}}) {
        for (size_t L = 1; L <= 4; L++) {
            for (auto closure : {Closure::zero_boundary, Closure::tail_biting}) {
                auto r = trellis(g, p, L, closure);
                EXPECT_TRUE(code_equal(code_of(dualize(r)), dual(code_of(r)))) << g << " L=" << L;
            }
        }
    }
}

TEST(FullBehavior, MatchesBruteForceJoin) {
    auto r = trellis(RATE_HALF, 2, 3, Closure::tail_biting);
    auto b = full_behavior(r);
    // Brute force: every assignment of every variable, kept if all constraints hold.
    size_t total = 0;
    for (const auto &v : r.vars) {
        total += v.dim;
    }
    std::set<std::vector<uint32_t>> expected;
    for (const auto &x : oracle::all_vectors(2, total)) {
        std::map<std::string, std::vector<uint32_t>> value;
        size_t off = 0;
        for (const auto &v : r.vars) {
            value[v.id] = std::vector<uint32_t>(x.begin() + off, x.begin() + off + v.dim);
            off += v.dim;
        }
        bool ok = true;
        for (const auto &c : r.constraints) {
            std::vector<uint32_t> w;
            for (const auto &port : c.ports) {
                w.insert(w.end(), value[port.var].begin(), value[port.var].end());
            }
            ok = ok && contains(c.code, GroupVector(2, w));
        }
        if (ok) {
            expected.insert(x);
        }
    }
    std::set<std::vector<uint32_t>> got;
    for (const auto &config : b.configs) {
        std::vector<uint32_t> x;
        for (const auto &v : config) {
            x.insert(x.end(), v.coords.begin(), v.coords.end());
        }
        got.insert(x);
    }
    EXPECT_EQ(got, expected);
    EXPECT_EQ(b.configs.size(), expected.size());
}

TEST(FullBehavior, Budget) {
    auto r = trellis(RATE_TWO_THIRDS, 3, 4, Closure::tail_biting);
    EXPECT_THROW(full_behavior(r, 100), BudgetError);
    EXPECT_NO_THROW(full_behavior(r));
}

TEST(CodeOf, SingleConstraint) {
    NormalRealization r;
    r.p = 3;
    r.vars = {{"A", VarKind::symbol, 3}};
    auto c = code_from(3, {"120", "011"});
    r.constraints = {{"C0", c, {{"A", 1}}}};
    EXPECT_TRUE(code_equal(code_of(r), c));
}

TEST(Section, MiddleStateIsRejected) {
    NormalRealization r;
    r.p = 2;
    r.vars = {{"A", VarKind::symbol, 1}, {"S", VarKind::state, 1}, {"B", VarKind::symbol, 1}};
    r.constraints = {{"C0", LinearCode(Prime(2), 3), {{"A", 1}, {"S", 1}, {"B", 1}}}};
    EXPECT_THROW(section_of(r, "C0"), DimensionError);
    EXPECT_THROW(section_of(r, "nope"), DimensionError);
    EXPECT_THROW(make_section(LinearCode(Prime(2), 3), 1, {1}, 0), DimensionError);
}
