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

namespace macwam {

namespace {

struct SplitWord {
    uint64_t left;
    std::span<const uint32_t> symbols;
    GroupVector right;
};

SplitWord split(const GroupVector &w, uint32_t left_dim, uint32_t symbol_length) {
    SplitWord s;
    s.left = w.slice(0, left_dim).index();
    s.symbols = std::span<const uint32_t>(w.coords).subspan(left_dim, symbol_length);
    s.right = w.slice(left_dim + symbol_length, w.size());
    return s;
}

WAMatrix empty_like(const Section &section, WamDomain domain, uint64_t budget) {
    WAMatrix m;
    m.p = section.p();
    m.left_dim = section.left_dim;
    m.right_dim = section.right_dim;
    m.symbol_length = section.symbol_length();
    m.domain = domain;
    uint64_t cells = checked_power(m.p, uint64_t(m.left_dim) + m.right_dim, budget);
    m.entries.assign(cells, WeightPoly(m.p));
    return m;
}

mpz_class pow_mpz(uint32_t base, uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

using CycloPoly = std::vector<CycloRat>;

void trim(std::vector<mpz_class> &poly) {
    while (!poly.empty() && poly.back() == 0) {
        poly.pop_back();
    }
}

std::vector<mpz_class> mul(const std::vector<mpz_class> &a, const std::vector<mpz_class> &b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<mpz_class> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<mpz_class> power(const std::vector<mpz_class> &a, uint32_t e) {
    std::vector<mpz_class> out{1};
    for (uint32_t i = 0; i < e; i++) {
        out = mul(out, a);
    }
    return out;
}

}  // namespace

uint64_t WAMatrix::rows() const {
    return checked_power(p, left_dim);
}

uint64_t WAMatrix::cols() const {
    return checked_power(p, right_dim);
}

bool WAMatrix::operator==(const WAMatrix &other) const {
    return p == other.p && left_dim == other.left_dim && right_dim == other.right_dim &&
           symbol_length == other.symbol_length && domain == other.domain && entries == other.entries;
}

uint64_t HWAMatrix::rows() const {
    return checked_power(p, left_dim);
}

uint64_t HWAMatrix::cols() const {
    return checked_power(p, right_dim);
}

std::string state_label(uint32_t p, uint32_t dim, uint64_t index) {
    return GroupVector::from_index(p, dim, index).digits();
}

WAMatrix cwam(const Section &section, uint64_t budget) {
    WAMatrix m = empty_like(section, WamDomain::primal, budget);
    CycloRat one(m.p, mpq_class(1));
    Exponents e(m.p);
    for (const auto &w : enumerate(section.code, budget)) {
        auto s = split(w, m.left_dim, m.symbol_length);
        std::fill(e.begin(), e.end(), 0);
        for (auto a : s.symbols) {
            e[a]++;
        }
        m.at(s.left, s.right.index()).add_term(e, one);
    }
    return m;
}

WAMatrix dual_cwam_direct(const Section &section, uint64_t budget) {
    WAMatrix m = empty_like(section, WamDomain::dual, budget);
    CycloRat one(m.p, mpq_class(1));
    Exponents e(m.p);
    for (const auto &w : enumerate(dual(section.code), budget)) {
        auto s = split(w, m.left_dim, m.symbol_length);
        std::fill(e.begin(), e.end(), 0);
        for (auto a : s.symbols) {
            e[a]++;
        }
        m.at(s.left, (-s.right).index()).add_term(e, one);
    }
    return m;
}

HWAMatrix hwam(const WAMatrix &wam) {
    HWAMatrix h;
    h.p = wam.p;
    h.left_dim = wam.left_dim;
    h.right_dim = wam.right_dim;
    h.symbol_length = wam.symbol_length;
    h.domain = wam.domain;
    h.entries.reserve(wam.entries.size());
    for (const auto &entry : wam.entries) {
        std::vector<mpz_class> poly;
        for (const auto &[e, c] : entry.terms()) {
            if (!c.is_integer()) {
                throw DomainError("HWAM needs integer coefficients, got " + c.str());
            }
            uint32_t degree = 0;
            for (uint32_t a = 1; a < wam.p; a++) {
                degree += e[a];
            }
            if (poly.size() <= degree) {
                poly.resize(degree + 1);
            }
            poly[degree] += c.rational().get_num();
        }
        trim(poly);
        h.entries.push_back(std::move(poly));
    }
    return h;
}

std::vector<ClearedEntry> hwam_dual_substitution(const HWAMatrix &h, uint32_t q) {
    uint32_t n = h.symbol_length;
    std::vector<mpz_class> one_minus_w{1, -1};
    std::vector<mpz_class> one_plus{1, mpz_class(q - 1)};
    std::vector<std::vector<mpz_class>> num_powers;
    std::vector<std::vector<mpz_class>> den_powers;
    for (uint32_t j = 0; j <= n; j++) {
        num_powers.push_back(power(one_minus_w, j));
        den_powers.push_back(power(one_plus, j));
    }
    std::vector<ClearedEntry> out;
    out.reserve(h.entries.size());
    for (const auto &poly : h.entries) {
        if (poly.size() > n + 1) {
            throw DimensionError("HWAM entry of degree above the symbol length");
        }
        ClearedEntry c;
        c.scale_exponent = n;
        c.poly.assign(n + 1, 0);
        for (uint32_t j = 0; j < poly.size(); j++) {
            if (poly[j] == 0) {
                continue;
            }
            auto term = mul(num_powers[j], den_powers[n - j]);
            for (size_t i = 0; i < term.size(); i++) {
                c.poly[i] += poly[j] * term[i];
            }
        }
        trim(c.poly);
        out.push_back(std::move(c));
    }
    return out;
}

HWAMatrix hwam_macwilliams(const HWAMatrix &h, const mpz_class &dual_size) {
    uint32_t p = h.p;
    uint32_t n = h.symbol_length;
    auto cleared = hwam_dual_substitution(h, p);
    TransformMatrix hy(Prime(p), h.left_dim);
    TransformMatrix hz(Prime(p), h.right_dim);
    uint64_t rows = hy.size();
    uint64_t cols = hz.size();

    std::vector<CycloPoly> lifted(rows * cols, CycloPoly(n + 1, CycloRat(p)));
    for (uint64_t i = 0; i < rows * cols; i++) {
        for (size_t j = 0; j < cleared[i].poly.size(); j++) {
            lifted[i][j] = CycloRat(p, mpq_class(cleared[i].poly[j]));
        }
    }
    std::vector<CycloPoly> left(rows * cols, CycloPoly(n + 1, CycloRat(p)));
    for (uint64_t s = 0; s < rows; s++) {
        for (uint64_t z = 0; z < cols; z++) {
            for (uint64_t y = 0; y < rows; y++) {
                uint32_t k = (p - hy.exponent(s, y)) % p;
                for (uint32_t j = 0; j <= n; j++) {
                    left[s * cols + z][j].add_times_root(lifted[y * cols + z][j], k);
                }
            }
        }
    }
    mpq_class factor(dual_size, pow_mpz(p, n) * mpz_class(rows) * mpz_class(cols));
    factor.canonicalize();

    HWAMatrix out;
    out.p = p;
    out.left_dim = h.left_dim;
    out.right_dim = h.right_dim;
    out.symbol_length = n;
    out.domain = h.domain == WamDomain::primal ? WamDomain::dual : WamDomain::primal;
    for (uint64_t s = 0; s < rows; s++) {
        for (uint64_t v = 0; v < cols; v++) {
            CycloPoly acc(n + 1, CycloRat(p));
            for (uint64_t z = 0; z < cols; z++) {
                uint32_t k = hz.exponent(z, v);
                for (uint32_t j = 0; j <= n; j++) {
                    acc[j].add_times_root(left[s * cols + z][j], k);
                }
            }
            std::vector<mpz_class> poly(n + 1);
            for (uint32_t j = 0; j <= n; j++) {
                acc[j].scale(factor);
                if (!acc[j].is_integer() || sgn(acc[j].rational()) < 0) {
                    throw ConsistencyError(
                        "Hamming MacWilliams transform produced coefficient " + acc[j].str() + " at (" +
                        std::to_string(s) + ", " + std::to_string(v) + ")");
                }
                poly[j] = acc[j].rational().get_num();
            }
            trim(poly);
            out.entries.push_back(std::move(poly));
        }
    }
    return out;
}

MacWilliamsReport verify_macwilliams(const Section &section, uint64_t budget) {
    MacWilliamsReport report;
    size_t k = dimension(section.code);
    report.code_size = pow_mpz(section.p(), k);
    report.dual_size = pow_mpz(section.p(), section.code.length() - k);
    auto primal = cwam(section, budget);
    report.direct = dual_cwam_direct(section, budget);
    report.transformed = macwilliams_transform(primal, report.dual_size);
    report.pass = true;
    for (uint64_t r = 0; r < report.direct.rows() && report.pass; r++) {
        for (uint64_t c = 0; c < report.direct.cols(); c++) {
            if (!(report.direct.at(r, c) == report.transformed.at(r, c))) {
                report.pass = false;
                report.mismatch = EntryMismatch{r, c, report.direct.at(r, c).str("W"), report.transformed.at(r, c).str("W")};
                break;
            }
        }
    }
    report.dual_hwam = hwam(report.direct);
    report.hamming_pass = hwam_macwilliams(hwam(primal), report.dual_size) == report.dual_hwam;
    return report;
}

std::string render_hamming(const std::vector<mpz_class> &poly, const std::string &var) {
    std::string out;
    for (size_t j = 0; j < poly.size(); j++) {
        if (poly[j] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += poly[j] > 0 ? " + " : " - ";
        } else if (poly[j] < 0) {
            out += "-";
        }
        mpz_class mag = abs(poly[j]);
        if (j == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) {
            out += mag.get_str() + "*";
        }
        out += var;
        if (j > 1) {
            out += "^" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace macwam
