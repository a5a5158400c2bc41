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

#include "macwam/dparse.h"

#include <gtest/gtest.h>

using namespace macwam;

namespace {

std::vector<uint32_t> coeffs(std::string_view text, uint32_t p) {
    return parse_poly(text, Prime(p)).coeffs;
}

size_t error_offset(std::string_view text, uint32_t p) {
    try {
        parse_matrix(text, Prime(p));
    } catch (const ParseError &e) {
        return e.offset;
    }
    ADD_FAILURE() << "no error for \"" << text << "\"";
    return SIZE_MAX;
}

}  // namespace

TEST(ParsePoly, Grammar) {
    EXPECT_EQ(coeffs("1+D^2", 2), (std::vector<uint32_t>{1, 0, 1}));
    EXPECT_EQ(coeffs("1+D+D^2", 2), (std::vector<uint32_t>{1, 1, 1}));
    EXPECT_EQ(coeffs("2+D", 3), (std::vector<uint32_t>{2, 1}));
    EXPECT_EQ(coeffs(" 2 D ^ 3 + 1 ", 3), (std::vector<uint32_t>{1, 0, 0, 2}));
    EXPECT_EQ(coeffs("0", 3), (std::vector<uint32_t>{}));
    EXPECT_EQ(coeffs("D^0", 5), (std::vector<uint32_t>{1}));
    EXPECT_EQ(parse_poly("1+D^2", Prime(2)).degree(), 2);
    EXPECT_EQ(parse_poly("0", Prime(2)).degree(), -1);
}

TEST(ParsePoly, Errors) {
    EXPECT_THROW(parse_poly("3", Prime(3)), CoefficientError);
    EXPECT_THROW(parse_poly("1+D+D", Prime(2)), ParseError);
    EXPECT_THROW(parse_poly("D2", Prime(2)), ParseError);
    EXPECT_THROW(parse_poly("", Prime(2)), ParseError);
    EXPECT_THROW(parse_poly("1+", Prime(2)), ParseError);
    EXPECT_THROW(parse_poly("D^", Prime(2)), ParseError);
    EXPECT_THROW(parse_poly("D^99999", Prime(2)), ParseError);
    try {
        parse_poly("1 + x", Prime(2));
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.offset, 4u);
    }
}

TEST(ParseMatrix, RateHalf) {
    auto g = parse_matrix("1+D^2, 1+D+D^2", Prime(2));
    ASSERT_EQ(g.inputs(), 1u);
    ASSERT_EQ(g.outputs(), 2u);
    EXPECT_EQ(g.row_degree(0), 2);
    EXPECT_EQ(g.impulse_response(0, 0).digits(), "11");
    EXPECT_EQ(g.impulse_response(0, 1).digits(), "01");
    EXPECT_EQ(g.impulse_response(0, 2).digits(), "11");
    EXPECT_EQ(g.impulse_response(0, 3).digits(), "00");
}

TEST(ParseMatrix, RateTwoThirds) {
    auto g = parse_matrix("1+D^2, 2+D, 0; 1, 0, 2", Prime(3));
    ASSERT_EQ(g.inputs(), 2u);
    ASSERT_EQ(g.outputs(), 3u);
    EXPECT_EQ(g.row_degree(0), 2);
    EXPECT_EQ(g.row_degree(1), 0);
    EXPECT_EQ(g.impulse_response(0, 0).digits(), "120");
    EXPECT_EQ(g.impulse_response(0, 1).digits(), "010");
    EXPECT_EQ(g.impulse_response(0, 2).digits(), "100");
    EXPECT_EQ(g.impulse_response(1, 0).digits(), "102");
}

TEST(ParseMatrix, ErrorOffsetsAreAbsolute) {
    EXPECT_EQ(error_offset("garbage", 2), 0u);
    EXPECT_EQ(error_offset("1, 1+q", 2), 5u);
    EXPECT_EQ(error_offset("1, 1; 1+D, 3", 3), 11u);
    EXPECT_THROW(parse_matrix("1, 1; 1", Prime(2)), ParseError);
    EXPECT_THROW(parse_matrix("1, ", Prime(2)), ParseError);
}

TEST(ParseMatrix, ErrorReportsRowAndColumn) {
    try {
        parse_matrix("1, 1; 1+D, 3", Prime(3));
        FAIL();
    } catch (const CoefficientError &e) {
        EXPECT_EQ(e.row, 1u);
        EXPECT_EQ(e.col, 1u);
        EXPECT_NE(std::string(e.what()).find("offset 11"), std::string::npos) << e.what();
    }
}

TEST(Render, RoundTrip) {
    for (std::string text : {"1+D^2, 1+D+D^2", "1+D^2, 2+D, 0; 1, 0, 2", "2D^3, D; 0, 1"}) {
        auto g = parse_matrix(text, Prime(3));
        EXPECT_EQ(parse_matrix(render(g), Prime(3)), g) << render(g);
    }
    EXPECT_EQ(render(parse_poly("1+D^2", Prime(2))), "1+D^2");
}
