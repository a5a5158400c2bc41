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

// Parallel MacWilliams kernel against the serial reference.

#include <benchmark/benchmark.h>

#include <random>

#include "macwam/wam.h"

using namespace macwam;

namespace {

struct Case {
    WAMatrix primal;
    mpz_class dual_size;
};

Case trellis_case(const char *g, uint32_t p) {
    auto s = section_of(build_trellis(parse_matrix(g, Prime(p)), 1, Closure::single_section), "C0");
    mpz_class dual_size;
    mpz_ui_pow_ui(dual_size.get_mpz_t(), p, s.code.length() - dimension(s.code));
    return {cwam(s), dual_size};
}

// A p=5 block with two-coordinate states and three symbol coordinates.
Case quinary_case() {
    std::mt19937 rng(5);
    std::vector<GroupVector> gens;
    for (int r = 0; r < 4; r++) {
        std::vector<uint32_t> c(7);
        for (auto &x : c) {
            x = rng() % 5;
        }
        gens.emplace_back(5, std::move(c));
    }
    auto s = make_section(LinearCode(Prime(5), 7, gens), 2, {3}, 2);
    mpz_class dual_size;
    mpz_ui_pow_ui(dual_size.get_mpz_t(), 5, 7 - dimension(s.code));
    return {cwam(s), dual_size};
}

const Case &get(int which) {
    static const Case cases[] = {
        trellis_case("1+D^2, 1+D+D^2", 2),
        trellis_case("1+D^2, 2+D, 0; 1, 0, 2", 3),
        quinary_case(),
    };
    return cases[which];
}

const char *NAMES[] = {"rate_half", "rate_two_thirds", "quinary"};

void BM_Parallel(benchmark::State &state) {
    const Case &c = get(int(state.range(0)));
    state.SetLabel(NAMES[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(macwilliams_transform(c.primal, c.dual_size));
    }
}

void BM_Serial(benchmark::State &state) {
    const Case &c = get(int(state.range(0)));
    state.SetLabel(NAMES[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(macwilliams_transform_serial(c.primal, c.dual_size));
    }
}

BENCHMARK(BM_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
