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

#include "macwam/wam.h"

#include <gtest/gtest.h>

#include "oracles.h"

using namespace macwam;

namespace {

using Terms = std::vector<std::pair<Exponents, int>>;

LinearCode code_from(uint32_t p, std::vector<std::string> rows) {
    std::vector<GroupVector> gens;
    for (const auto &r : rows) {
        gens.push_back(GroupVector::from_digits(p, r));
    }
    return LinearCode(Prime(p), rows[0].size(), std::move(gens));
}

WeightPoly poly(uint32_t p, const Terms &terms) {
    WeightPoly out(p);
    for (const auto &[e, c] : terms) {
        out.add_term(e, CycloRat(p, mpq_class(c)));
    }
    return out;
}

WAMatrix matrix(uint32_t p, uint32_t dim, WamDomain domain, uint32_t n, const std::vector<std::vector<Terms>> &rows) {
    WAMatrix m;
    m.p = p;
    m.left_dim = dim;
    m.right_dim = dim;
    m.symbol_length = n;
    m.domain = domain;
    for (const auto &row : rows) {
        for (const auto &cell : row) {
            m.entries.push_back(poly(p, cell));
        }
    }
    return m;
}

mpz_class dual_size_of(const Section &s) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), s.p(), s.code.length() - dimension(s.code));
    return out;
}

Section rate_half_section() {
    return make_section(code_from(2, {"001110", "100101", "011100"}), 2, {2}, 2);
}

Section rate_two_thirds_section() {
    return make_section(code_from(3, {"0012010", "1001001", "0110000", "0010200"}), 2, {3}, 2);
}

const Exponents X00{2, 0};
const Exponents X11{0, 2};
const Exponents X01{1, 1};

// Random section: left, symbol and right dimensions drawn within the given caps.
Section random_section(uint32_t p, std::mt19937 &rng) {
    std::uniform_int_distribution<uint32_t> state(0, 2);
    std::uniform_int_distribution<uint32_t> symbol(1, 3);
    uint32_t left = state(rng);
    uint32_t right = state(rng);
    uint32_t n = symbol(rng);
    std::vector<uint32_t> dims;
    uint32_t remaining = n;
    while (remaining) {
        uint32_t d = std::uniform_int_distribution<uint32_t>(1, remaining)(rng);
        dims.push_back(d);
        remaining -= d;
    }
    return make_section(oracle::random_code(p, left + n + right, rng), left, dims, right);
}

std::vector<mpz_class> ints(std::initializer_list<int> v) {
    return std::vector<mpz_class>(v.begin(), v.end());
}

}  // namespace

TEST(Cwam, RateHalfKnownMatrix) {
    auto expected = matrix(
        2, 2, WamDomain::primal, 2,
        {
            {{{X00, 1}}, {{X11, 1}}, {}, {}},
            {{}, {}, {{X01, 1}}, {{X01, 1}}},
            {{{X11, 1}}, {{X00, 1}}, {}, {}},
            {{}, {}, {{X01, 1}}, {{X01, 1}}},
        });
    EXPECT_EQ(cwam(rate_half_section()), expected);
}

TEST(Cwam, MatchesCountOracle) {
    std::mt19937 rng(101);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 10; trial++) {
            auto s = random_section(p, rng);
            oracle::CountMatrix got;
            ASSERT_TRUE(oracle::as_counts(cwam(s), got));
            EXPECT_EQ(got, oracle::count_matrix(oracle::codewords(s.code), p, s.left_dim, s.right_dim, false));
        }
    }
}

TEST(Cwam, Homogeneous) {
    auto m = cwam(rate_two_thirds_section());
    CycloRat total(3);
    for (const auto &e : m.entries) {
        if (!e.is_zero()) {
            EXPECT_EQ(e.homogeneous_degree(), 3u);
        }
        total += e.sum_of_coefficients();
    }
    EXPECT_EQ(total, CycloRat(3, mpq_class(81)));
}

TEST(DualCwamDirect, MatchesCountOracle) {
    std::mt19937 rng(103);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 10; trial++) {
            auto s = random_section(p, rng);
            oracle::CountMatrix got;
            auto m = dual_cwam_direct(s);
            EXPECT_EQ(m.domain, WamDomain::dual);
            ASSERT_TRUE(oracle::as_counts(m, got));
            EXPECT_EQ(got, oracle::count_matrix(oracle::dual_codewords(s.code), p, s.left_dim, s.right_dim, true));
        }
    }
}

TEST(MacWilliams, RateHalfDualMatrix) {
    auto s = rate_half_section();
    auto expected = matrix(
        2, 2, WamDomain::dual, 2,
        {
            {{{X00, 1}}, {}, {{X11, 1}}, {}},
            {{{X11, 1}}, {}, {{X00, 1}}, {}},
            {{}, {{X01, 1}}, {}, {{X01, 1}}},
            {{}, {{X01, 1}}, {}, {{X01, 1}}},
        });
    auto transformed = macwilliams_transform(cwam(s), 8);
    EXPECT_EQ(transformed, expected);
    EXPECT_EQ(dual_cwam_direct(s), expected);
    EXPECT_EQ(macwilliams_transform_serial(cwam(s), 8), expected);
}

TEST(MacWilliams, RandomBlocksMatchEnumeratedDual) {
    std::mt19937 rng(2024);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 12; trial++) {
            auto s = random_section(p, rng);
            auto t = macwilliams_transform(cwam(s), dual_size_of(s));
            oracle::CountMatrix got;
            ASSERT_TRUE(oracle::as_counts(t, got));
            EXPECT_EQ(got, oracle::count_matrix(oracle::dual_codewords(s.code), p, s.left_dim, s.right_dim, true))
                << "p=" << p << " trial " << trial;
        }
    }
}

TEST(MacWilliams, KernelMatchesSerialReference) {
    std::mt19937 rng(77);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 8; trial++) {
            auto s = random_section(p, rng);
            auto primal = cwam(s);
            EXPECT_EQ(macwilliams_transform(primal, dual_size_of(s)), macwilliams_transform_serial(primal, dual_size_of(s)));
        }
    }
}

TEST(MacWilliams, AppliedTwiceIsIdentity) {
    std::mt19937 rng(31);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 6; trial++) {
            auto s = random_section(p, rng);
            auto primal = cwam(s);
            mpz_class code_size;
            mpz_ui_pow_ui(code_size.get_mpz_t(), p, dimension(s.code));
            auto back = macwilliams_transform(macwilliams_transform(primal, dual_size_of(s)), code_size);
            EXPECT_EQ(back, primal);
        }
    }
}

TEST(MacWilliams, RejectsNonCounts) {
    auto m = matrix(2, 0, WamDomain::primal, 1, {{{{{1, 0}, 1}}}});
    EXPECT_THROW(macwilliams_transform(m, 1), ConsistencyError);
    EXPECT_THROW(macwilliams_transform_serial(m, 1), ConsistencyError);
    auto ragged = matrix(2, 0, WamDomain::primal, 2, {{{{{1, 0}, 1}}}});
    EXPECT_THROW(macwilliams_transform(ragged, 2), DimensionError);
}

TEST(Hwam, RateHalfDual) {
    auto h = hwam(dual_cwam_direct(rate_half_section()));
    std::vector<std::vector<mpz_class>> expected{
        ints({1}), {}, ints({0, 0, 1}), {},
        ints({0, 0, 1}), {}, ints({1}), {},
        {}, ints({0, 1}), {}, ints({0, 1}),
        {}, ints({0, 1}), {}, ints({0, 1}),
    };
    EXPECT_EQ(h.entries, expected);
}

TEST(Hwam, ParityCheckAndRepetition) {
    auto s = make_section(code_from(2, {"110", "011"}), 0, {3}, 0);
    auto h = hwam(cwam(s));
    EXPECT_EQ(h.entries[0], ints({1, 0, 3}));
    auto dual_h = hwam_macwilliams(h, 2);
    EXPECT_EQ(dual_h.entries[0], ints({1, 0, 0, 1}));
    EXPECT_EQ(dual_h.domain, WamDomain::dual);
    EXPECT_EQ(hwam(dual_cwam_direct(s)), dual_h);
}

TEST(Hwam, ClassicalHammingCode) {
    auto hamming = code_from(2, {"1000110", "0100101", "0010011", "0001111"});
    auto s = make_section(hamming, 0, {7}, 0);
    auto h = hwam(cwam(s));
    EXPECT_EQ(h.entries[0], ints({1, 0, 0, 7, 7, 0, 0, 1}));
    auto dual_h = hwam_macwilliams(h, 8);
    EXPECT_EQ(dual_h.entries[0], ints({1, 0, 0, 0, 7}));
    // Oracle: weights of the exhaustively enumerated orthogonal code.
    std::vector<mpz_class> weights(8);
    for (const auto &w : oracle::dual_codewords(hamming)) {
        weights[std::count_if(w.begin(), w.end(), [](uint32_t x) { return x != 0; })]++;
    }
    weights.resize(5);
    EXPECT_EQ(dual_h.entries[0], weights);
    auto report = verify_macwilliams(s);
    EXPECT_TRUE(report.pass);
    EXPECT_TRUE(report.hamming_pass);
    EXPECT_EQ(report.dual_hwam.entries[0], weights);
}

TEST(Hwam, ClearedSubstitution) {
    HWAMatrix zero;
    zero.p = 2;
    zero.symbol_length = 3;
    zero.entries = {ints({1})};
    auto cleared = hwam_dual_substitution(zero, 2);
    EXPECT_EQ(cleared[0].poly, ints({1, 3, 3, 1}));
    EXPECT_EQ(cleared[0].scale_exponent, 3u);
    HWAMatrix spc = zero;
    spc.entries = {ints({1, 0, 3})};
    // (1+w)^3 + 3 (1-w)^2 (1+w) = 4 + 4w^3
    EXPECT_EQ(hwam_dual_substitution(spc, 2)[0].poly, ints({4, 0, 0, 4}));
}

TEST(Hwam, RejectsFractions) {
    auto m = matrix(2, 0, WamDomain::primal, 1, {{{{{1, 0}, 1}}}});
    m.entries[0].scale(mpq_class(1, 2));
    EXPECT_THROW(hwam(m), DomainError);
}

TEST(VerifyMacWilliams, TernarySection) {
    auto s = rate_two_thirds_section();
    auto report = verify_macwilliams(s);
    EXPECT_TRUE(report.pass);
    EXPECT_TRUE(report.hamming_pass);
    EXPECT_EQ(report.code_size, 81);
    EXPECT_EQ(report.dual_size, 27);
    EXPECT_FALSE(report.mismatch.has_value());
}

TEST(VerifyMacWilliams, TrivialStates) {
    auto s = make_section(code_from(5, {"1234"}), 0, {4}, 0);
    EXPECT_TRUE(verify_macwilliams(s).pass);
}

TEST(Render, HammingPolynomial) {
    EXPECT_EQ(render_hamming(ints({1, 0, 0, 0, 7})), "1 + 7*w^4");
    EXPECT_EQ(render_hamming(ints({0, -1, 2}), "W"), "-W + 2*W^2");
    EXPECT_EQ(render_hamming({}), "0");
    EXPECT_EQ(state_label(3, 2, 5), "21");
}
