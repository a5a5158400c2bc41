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

#include "macwam/weight_poly.h"

namespace macwam {

WeightPoly::WeightPoly(uint32_t p) : p_(p) {
}

WeightPoly WeightPoly::constant(uint32_t p, const CycloRat &c) {
    WeightPoly w(p);
    w.add_term(Exponents(p, 0), c);
    return w;
}

WeightPoly WeightPoly::monomial_of(uint32_t p, std::span<const uint32_t> symbols) {
    Exponents e(p, 0);
    for (auto a : symbols) {
        e.at(a)++;
    }
    WeightPoly w(p);
    w.add_term(e, CycloRat(p, mpq_class(1)));
    return w;
}

void WeightPoly::add_term(const Exponents &exps, const CycloRat &coeff) {
    if (exps.size() != p_ || coeff.p() != p_) {
        throw DimensionError("weight polynomial term does not match the alphabet");
    }
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void WeightPoly::add_rotated(const WeightPoly &other, uint64_t k) {
    if (other.p_ != p_) {
        throw DimensionError("weight polynomials over different alphabets");
    }
    for (const auto &[e, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, p_);
        it->second.add_times_root(c, k);
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void WeightPoly::scale(const mpq_class &factor) {
    if (sgn(factor) == 0) {
        terms_.clear();
        return;
    }
    for (auto &[e, c] : terms_) {
        c.scale(factor);
    }
}

WeightPoly WeightPoly::times_linear(std::span<const CycloRat> form) const {
    if (form.size() != p_) {
        throw DimensionError("linear form length differs from the alphabet size");
    }
    WeightPoly out(p_);
    for (const auto &[e, c] : terms_) {
        for (uint32_t f = 0; f < p_; f++) {
            if (form[f].is_zero()) {
                continue;
            }
            Exponents e2 = e;
            e2[f]++;
            out.add_term(e2, c * form[f]);
        }
    }
    return out;
}

WeightPoly &WeightPoly::operator+=(const WeightPoly &other) {
    add_rotated(other, 0);
    return *this;
}

WeightPoly WeightPoly::operator*(const CycloRat &c) const {
    WeightPoly out(p_);
    for (const auto &[e, coeff] : terms_) {
        out.add_term(e, coeff * c);
    }
    return out;
}

bool WeightPoly::operator==(const WeightPoly &other) const {
    return p_ == other.p_ && terms_ == other.terms_;
}

std::optional<uint32_t> WeightPoly::homogeneous_degree() const {
    std::optional<uint32_t> degree;
    for (const auto &[e, c] : terms_) {
        uint32_t d = 0;
        for (auto x : e) {
            d += x;
        }
        if (degree && *degree != d) {
            return std::nullopt;
        }
        degree = d;
    }
    return degree;
}

CycloRat WeightPoly::sum_of_coefficients() const {
    CycloRat acc(p_);
    for (const auto &[e, c] : terms_) {
        acc += c;
    }
    return acc;
}

std::string WeightPoly::str(const std::string &var) const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    // Highest exponent vectors first reads naturally (w0^2 before w0*w1).
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        std::string mono;
        for (uint32_t a = 0; a < p_; a++) {
            if (e[a] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += var + std::to_string(a);
            if (e[a] > 1) {
                mono += "^" + std::to_string(e[a]);
            }
        }
        std::string coeff = c.str();
        if (!out.empty()) {
            out += " + ";
        }
        bool is_one = c.is_rational() && c.rational() == 1;
        if (mono.empty()) {
            out += coeff;
        } else if (is_one) {
            out += mono;
        } else if (c.is_rational()) {
            out += coeff + "*" + mono;
        } else {
            out += "(" + coeff + ")*" + mono;
        }
    }
    return out;
}

}  // namespace macwam
