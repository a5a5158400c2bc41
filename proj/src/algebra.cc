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

#include "macwam/algebra.h"

#include <cmath>
#include <numbers>
#include <sstream>

namespace macwam {

ValidationError::ValidationError(std::vector<std::string> v)
    : std::invalid_argument([&] {
          std::string msg = "invalid realization:";
          for (const auto &s : v) {
              msg += "\n  " + s;
          }
          return msg;
      }()),
      violations(std::move(v)) {
}

bool is_prime(uint32_t value) {
    if (value < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= value; d++) {
        if (value % d == 0) {
            return false;
        }
    }
    return true;
}

Prime::Prime(uint32_t v) : value(v) {
    if (!is_prime(v)) {
        throw DomainError("not a prime: " + std::to_string(v));
    }
}

uint64_t checked_power(uint32_t p, uint64_t n, uint64_t limit) {
    uint64_t result = 1;
    for (uint64_t i = 0; i < n; i++) {
        if (result > limit / p) {
            throw BudgetError(
                std::to_string(p) + "^" + std::to_string(n) + " exceeds the limit of " + std::to_string(limit));
        }
        result *= p;
    }
    return result;
}

GroupVector::GroupVector(uint32_t p, std::vector<uint32_t> c) : p(p), coords(std::move(c)) {
    for (auto x : coords) {
        if (x >= p) {
            throw DomainError("coordinate " + std::to_string(x) + " not in [0, " + std::to_string(p) + ")");
        }
    }
}

GroupVector GroupVector::zero(uint32_t p, size_t n) {
    GroupVector v;
    v.p = p;
    v.coords.assign(n, 0);
    return v;
}

GroupVector GroupVector::from_index(uint32_t p, size_t n, uint64_t index) {
    GroupVector v = zero(p, n);
    for (size_t j = 0; j < n; j++) {
        v.coords[j] = index % p;
        index /= p;
    }
    return v;
}

GroupVector GroupVector::from_digits(uint32_t p, std::string_view digits) {
    if (p > 10) {
        throw DomainError("digit strings require p <= 10, got p=" + std::to_string(p));
    }
    GroupVector v = zero(p, digits.size());
    for (size_t j = 0; j < digits.size(); j++) {
        char c = digits[j];
        if (c < '0' || c > '9' || uint32_t(c - '0') >= p) {
            throw DomainError(
                "bad digit '" + std::string(1, c) + "' at position " + std::to_string(j) + " of \"" +
                std::string(digits) + "\" for p=" + std::to_string(p));
        }
        v.coords[j] = uint32_t(c - '0');
    }
    return v;
}

uint64_t GroupVector::index() const {
    uint64_t result = 0;
    for (size_t j = coords.size(); j-- > 0;) {
        result = result * p + coords[j];
    }
    return result;
}

bool GroupVector::is_zero() const {
    for (auto x : coords) {
        if (x) {
            return false;
        }
    }
    return true;
}

std::string GroupVector::digits() const {
    std::string out;
    out.reserve(coords.size());
    for (auto x : coords) {
        if (x < 10) {
            out.push_back(char('0' + x));
        } else {
            out += "(" + std::to_string(x) + ")";
        }
    }
    return out;
}

GroupVector GroupVector::operator+(const GroupVector &other) const {
    if (other.p != p || other.size() != size()) {
        throw DimensionError("group vector addition across different groups");
    }
    GroupVector r = *this;
    for (size_t j = 0; j < coords.size(); j++) {
        r.coords[j] = (coords[j] + other.coords[j]) % p;
    }
    return r;
}

GroupVector GroupVector::operator-() const {
    GroupVector r = *this;
    for (auto &x : r.coords) {
        x = (p - x) % p;
    }
    return r;
}

GroupVector GroupVector::slice(size_t begin, size_t end) const {
    GroupVector r;
    r.p = p;
    r.coords.assign(coords.begin() + begin, coords.begin() + end);
    return r;
}

uint32_t dot(const GroupVector &u, const GroupVector &v) {
    if (u.p != v.p) {
        throw DimensionError("dot product across different primes");
    }
    if (u.size() != v.size()) {
        throw DimensionError(
            "dot product of lengths " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
    }
    uint64_t acc = 0;
    for (size_t j = 0; j < u.size(); j++) {
        acc = (acc + uint64_t(u.coords[j]) * v.coords[j]) % u.p;
    }
    return uint32_t(acc);
}

CycloRat::CycloRat(uint32_t p) : p_(p), c_(p - 1) {
    if (p < 2) {
        throw DomainError("cyclotomic field needs p >= 2");
    }
}

CycloRat::CycloRat(uint32_t p, const mpq_class &rational) : CycloRat(p) {
    c_[0] = rational;
}

CycloRat::CycloRat(uint32_t p, std::vector<mpq_class> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (c_.size() != p - 1) {
        throw DimensionError(
            "CycloRat over p=" + std::to_string(p) + " needs " + std::to_string(p - 1) + " coefficients");
    }
    for (auto &x : c_) {
        x.canonicalize();
    }
}

CycloRat CycloRat::root(uint32_t p, uint64_t k) {
    CycloRat r(p);
    r.add_times_root(CycloRat(p, mpq_class(1)), k);
    return r;
}

bool CycloRat::is_zero() const {
    for (const auto &x : c_) {
        if (sgn(x) != 0) {
            return false;
        }
    }
    return true;
}

bool CycloRat::is_rational() const {
    for (size_t i = 1; i < c_.size(); i++) {
        if (sgn(c_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool CycloRat::is_integer() const {
    return is_rational() && c_[0].get_den() == 1;
}

const mpq_class &CycloRat::rational() const {
    if (!is_rational()) {
        throw DomainError("not a rational number: " + str());
    }
    return c_[0];
}

void CycloRat::check_same_field(const CycloRat &other) const {
    if (other.p_ != p_) {
        throw DomainError(
            "cyclotomic arithmetic across p=" + std::to_string(p_) + " and p=" + std::to_string(other.p_));
    }
}

void CycloRat::add_times_root(const CycloRat &x, uint64_t k) {
    check_same_field(x);
    k %= p_;
    // z^{p-1} = -(1 + z + ... + z^{p-2}); exactly one source index lands there.
    mpq_class spill;
    bool has_spill = false;
    for (uint32_t i = 0; i + 1 < p_; i++) {
        uint32_t target = uint32_t((i + k) % p_);
        if (target + 1 == p_) {
            spill = x.c_[i];
            has_spill = sgn(spill) != 0;
        } else {
            c_[target] += x.c_[i];
        }
    }
    if (has_spill) {
        for (auto &c : c_) {
            c -= spill;
        }
    }
}

CycloRat CycloRat::times_root(uint64_t k) const {
    CycloRat r(p_);
    r.add_times_root(*this, k);
    return r;
}

CycloRat CycloRat::conj() const {
    CycloRat r(p_);
    for (uint32_t i = 0; i + 1 < p_; i++) {
        if (sgn(c_[i]) == 0) {
            continue;
        }
        CycloRat term(p_);
        term.c_[0] = c_[i];
        r.add_times_root(term, (p_ - i) % p_);
    }
    return r;
}

void CycloRat::scale(const mpq_class &factor) {
    for (auto &c : c_) {
        c *= factor;
    }
}

void CycloRat::add_scaled(const CycloRat &x, const mpq_class &factor) {
    check_same_field(x);
    mpq_class t;
    for (size_t i = 0; i < c_.size(); i++) {
        if (sgn(x.c_[i]) != 0) {
            t = x.c_[i] * factor;
            c_[i] += t;
        }
    }
}

CycloRat &CycloRat::operator+=(const CycloRat &other) {
    check_same_field(other);
    for (size_t i = 0; i < c_.size(); i++) {
        c_[i] += other.c_[i];
    }
    return *this;
}

CycloRat &CycloRat::operator-=(const CycloRat &other) {
    check_same_field(other);
    for (size_t i = 0; i < c_.size(); i++) {
        c_[i] -= other.c_[i];
    }
    return *this;
}

CycloRat &CycloRat::operator*=(const CycloRat &other) {
    *this = *this * other;
    return *this;
}

CycloRat CycloRat::operator+(const CycloRat &other) const {
    CycloRat r = *this;
    r += other;
    return r;
}

CycloRat CycloRat::operator-(const CycloRat &other) const {
    CycloRat r = *this;
    r -= other;
    return r;
}

CycloRat CycloRat::operator*(const CycloRat &other) const {
    check_same_field(other);
    // Multiply in Q[z]/(z^p - 1), then fold the z^{p-1} coefficient.
    std::vector<mpq_class> full(p_);
    for (uint32_t i = 0; i + 1 < p_; i++) {
        if (sgn(c_[i]) == 0) {
            continue;
        }
        for (uint32_t j = 0; j + 1 < p_; j++) {
            if (sgn(other.c_[j]) == 0) {
                continue;
            }
            full[(i + j) % p_] += c_[i] * other.c_[j];
        }
    }
    CycloRat r(p_);
    for (uint32_t i = 0; i + 1 < p_; i++) {
        r.c_[i] = full[i] - full[p_ - 1];
    }
    return r;
}

CycloRat CycloRat::operator-() const {
    CycloRat r = *this;
    for (auto &c : r.c_) {
        c = -c;
    }
    return r;
}

bool CycloRat::operator==(const CycloRat &other) const {
    return p_ == other.p_ && c_ == other.c_;
}

std::complex<double> CycloRat::to_complex() const {
    std::complex<double> acc = 0;
    for (uint32_t i = 0; i + 1 < p_; i++) {
        double angle = 2 * std::numbers::pi * i / p_;
        acc += c_[i].get_d() * std::polar(1.0, angle);
    }
    return acc;
}

std::string CycloRat::str() const {
    if (is_rational()) {
        return c_[0].get_str();
    }
    std::ostringstream out;
    bool first = true;
    for (uint32_t i = 0; i + 1 < p_; i++) {
        if (sgn(c_[i]) == 0) {
            continue;
        }
        if (!first) {
            out << (sgn(c_[i]) > 0 ? " + " : " - ");
        } else if (sgn(c_[i]) < 0) {
            out << "-";
        }
        first = false;
        mpq_class mag = abs(c_[i]);
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) {
                out << mag.get_str() << "*";
            }
            out << "z";
            if (i > 1) {
                out << "^" << i;
            }
        }
    }
    return out.str();
}

CycloRat cyclo_mul(const CycloRat &a, const CycloRat &b) {
    return a * b;
}

CycloRat cyclo_conj(const CycloRat &a) {
    return a.conj();
}

CycloRat character(const GroupVector &f, const GroupVector &t) {
    return CycloRat::root(f.p, dot(f, t));
}

TransformMatrix::TransformMatrix(Prime p, uint32_t n) : p_(p), n_(n), size_(checked_power(p, n, uint64_t{1} << 14)) {
    exponents_.resize(size_ * size_);
    std::vector<GroupVector> elems;
    elems.reserve(size_);
    for (uint64_t i = 0; i < size_; i++) {
        elems.push_back(GroupVector::from_index(p_, n_, i));
    }
    for (uint64_t f = 0; f < size_; f++) {
        for (uint64_t t = 0; t < size_; t++) {
            exponents_[f * size_ + t] = dot(elems[f], elems[t]);
        }
    }
}

CycloRat TransformMatrix::entry(uint64_t f, uint64_t t) const {
    return CycloRat::root(p_, exponent(f, t));
}

CycloRat TransformMatrix::conj_entry(uint64_t f, uint64_t t) const {
    return CycloRat::root(p_, (p_ - exponent(f, t)) % p_);
}

std::vector<CycloRat> TransformMatrix::apply(std::span<const CycloRat> v) const {
    if (v.size() != size_) {
        throw DimensionError(
            "transform of length " + std::to_string(v.size()) + " vector by " + std::to_string(size_) + "-point matrix");
    }
    std::vector<CycloRat> out(size_, CycloRat(p_));
    for (uint64_t f = 0; f < size_; f++) {
        for (uint64_t t = 0; t < size_; t++) {
            out[f].add_times_root(v[t], exponent(f, t));
        }
    }
    return out;
}

std::vector<CycloRat> TransformMatrix::apply_conj(std::span<const CycloRat> v) const {
    if (v.size() != size_) {
        throw DimensionError(
            "transform of length " + std::to_string(v.size()) + " vector by " + std::to_string(size_) + "-point matrix");
    }
    std::vector<CycloRat> out(size_, CycloRat(p_));
    for (uint64_t f = 0; f < size_; f++) {
        for (uint64_t t = 0; t < size_; t++) {
            out[f].add_times_root(v[t], (p_ - exponent(f, t)) % p_);
        }
    }
    return out;
}

TransformMatrix transform_matrix(Prime p, uint32_t n) {
    return TransformMatrix(p, n);
}

std::vector<CycloRat> inverse_transform_apply(const TransformMatrix &h, std::span<const CycloRat> v) {
    auto out = h.apply_conj(v);
    mpq_class inv(1, h.size());
    inv.canonicalize();
    for (auto &x : out) {
        x.scale(inv);
    }
    return out;
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return DomainError("not a rational number: \"" + s + "\""); };
    if (s.empty()) {
        throw bad();
    }
    size_t slash = s.find('/');
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && t[0] == '-') {
            t.remove_prefix(1);
        }
        if (t.empty()) {
            return false;
        }
        for (char c : t) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw bad();
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw bad();
    }
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace macwam
