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

#include "macwam/serialize.h"

namespace macwam {

namespace {

const Json &require(const Json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(where + ": missing \"" + key + "\"");
    }
    return j.at(key);
}

uint64_t require_uint(const Json &j, const char *key, const std::string &where) {
    const Json &v = require(j, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<int64_t>() >= 0)) {
        throw FormatError(where + ": \"" + key + "\" must be a nonnegative integer");
    }
    return v.get<uint64_t>();
}

std::string require_string(const Json &j, const char *key, const std::string &where) {
    const Json &v = require(j, key, where);
    if (!v.is_string()) {
        throw FormatError(where + ": \"" + key + "\" must be a string");
    }
    return v.get<std::string>();
}

const Json &require_array(const Json &j, const char *key, const std::string &where) {
    const Json &v = require(j, key, where);
    if (!v.is_array()) {
        throw FormatError(where + ": \"" + key + "\" must be an array");
    }
    return v;
}

uint32_t require_prime(const Json &j, const std::string &where) {
    uint64_t p = require_uint(j, "p", where);
    if (p > UINT32_MAX || !is_prime(uint32_t(p))) {
        throw FormatError(where + ": p=" + std::to_string(p) + " is not prime");
    }
    return uint32_t(p);
}

Json state_labels(uint32_t p, uint32_t dim) {
    Json out = Json::array();
    uint64_t size = checked_power(p, dim);
    for (uint64_t i = 0; i < size; i++) {
        out.push_back(state_label(p, dim, i));
    }
    return out;
}

const char *domain_name(WamDomain d) {
    return d == WamDomain::primal ? "primal" : "dual";
}

mpz_class parse_integer(const Json &j, const std::string &where) {
    if (j.is_number_integer()) {
        return mpz_class(std::to_string(j.get<int64_t>()));
    }
    if (!j.is_string()) {
        throw FormatError(where + ": expected an integer string");
    }
    try {
        mpq_class q = parse_rational(j.get<std::string>());
        if (q.get_den() != 1) {
            throw DomainError("");
        }
        return q.get_num();
    } catch (const DomainError &) {
        throw FormatError(where + ": \"" + j.get<std::string>() + "\" is not an integer");
    }
}

}  // namespace

Json parse_json(const std::string &text, const std::string &what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw FormatError(what + ": " + e.what());
    }
}

Json cyclo_to_json(const CycloRat &c) {
    mpz_class den = 1;
    for (const auto &x : c.coeffs()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    Json num = Json::array();
    for (const auto &x : c.coeffs()) {
        mpz_class scaled = x.get_num() * (den / x.get_den());
        num.push_back(scaled.get_str());
    }
    Json out;
    out["den"] = den.get_str();
    out["num"] = std::move(num);
    return out;
}

CycloRat cyclo_from_json(uint32_t p, const Json &j) {
    const std::string where = "coefficient";
    mpz_class den = parse_integer(require(j, "den", where), where);
    if (den <= 0) {
        throw FormatError("coefficient: denominator must be positive");
    }
    const Json &num = require_array(j, "num", where);
    if (num.size() != p - 1) {
        throw FormatError("coefficient: expected " + std::to_string(p - 1) + " numerators");
    }
    std::vector<mpq_class> coeffs;
    for (const auto &x : num) {
        coeffs.emplace_back(parse_integer(x, where), den);
    }
    return CycloRat(p, std::move(coeffs));
}

Json code_to_json(const LinearCode &code) {
    auto canon = canonicalize(code);
    Json out;
    out["p"] = code.p();
    out["n"] = code.length();
    out["dimension"] = canon.generators().size();
    Json gens = Json::array();
    for (const auto &g : canon.generators()) {
        gens.push_back(g.digits());
    }
    out["generators"] = std::move(gens);
    return out;
}

Json realization_to_json(const NormalRealization &r) {
    Json out;
    out["p"] = r.p;
    Json vars = Json::array();
    for (const auto &v : r.vars) {
        Json jv;
        jv["id"] = v.id;
        jv["kind"] = v.kind == VarKind::state ? "state" : "symbol";
        jv["dim"] = v.dim;
        vars.push_back(std::move(jv));
    }
    out["vars"] = std::move(vars);
    Json constraints = Json::array();
    for (const auto &c : r.constraints) {
        Json jc;
        jc["id"] = c.id;
        Json gens = Json::array();
        for (const auto &g : c.code.generators()) {
            gens.push_back(g.digits());
        }
        jc["generators"] = std::move(gens);
        Json ports = Json::array();
        for (const auto &port : c.ports) {
            ports.push_back(Json{{"var", port.var}, {"sign", port.sign}});
        }
        jc["ports"] = std::move(ports);
        constraints.push_back(std::move(jc));
    }
    out["constraints"] = std::move(constraints);
    return out;
}

NormalRealization realization_from_json(const Json &j) {
    NormalRealization r;
    r.p = require_prime(j, "realization");
    if (r.p > 10) {
        throw FormatError("realization: digit-string generators need p < 10");
    }
    for (const auto &jv : require_array(j, "vars", "realization")) {
        VarDecl v;
        v.id = require_string(jv, "id", "variable");
        std::string kind = require_string(jv, "kind", "variable " + v.id);
        if (kind == "state") {
            v.kind = VarKind::state;
        } else if (kind == "symbol") {
            v.kind = VarKind::symbol;
        } else {
            throw FormatError("variable " + v.id + ": kind must be \"state\" or \"symbol\"");
        }
        v.dim = uint32_t(require_uint(jv, "dim", "variable " + v.id));
        r.vars.push_back(std::move(v));
    }
    for (const auto &jc : require_array(j, "constraints", "realization")) {
        std::string id = require_string(jc, "id", "constraint");
        std::string where = "constraint " + id;
        std::vector<PortBinding> ports;
        size_t port_total = 0;
        for (const auto &jp : require_array(jc, "ports", where)) {
            PortBinding port;
            port.var = require_string(jp, "var", where);
            if (jp.contains("sign")) {
                if (!jp["sign"].is_number_integer()) {
                    throw FormatError(where + ": sign must be 1 or -1");
                }
                port.sign = jp["sign"].get<int>();
            }
            if (const VarDecl *v = r.find_var(port.var)) {
                port_total += v->dim;
            }
            ports.push_back(std::move(port));
        }
        std::vector<GroupVector> gens;
        for (const auto &jg : require_array(jc, "generators", where)) {
            if (!jg.is_string()) {
                throw FormatError(where + ": generators must be digit strings");
            }
            try {
                gens.push_back(GroupVector::from_digits(r.p, jg.get<std::string>()));
            } catch (const DomainError &e) {
                throw FormatError(where + ": " + e.what());
            }
        }
        size_t n = gens.empty() ? port_total : gens[0].size();
        for (const auto &g : gens) {
            if (g.size() != n) {
                throw FormatError(where + ": generators of different lengths");
            }
        }
        r.constraints.push_back({id, LinearCode(Prime(r.p), n, std::move(gens)), std::move(ports)});
    }
    return r;
}

Json wam_to_json(const WAMatrix &m) {
    Json out;
    out["p"] = m.p;
    out["rows"] = state_labels(m.p, m.left_dim);
    out["cols"] = state_labels(m.p, m.right_dim);
    out["domain"] = domain_name(m.domain);
    out["symbol_length"] = m.symbol_length;
    Json rows = Json::array();
    for (uint64_t r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (uint64_t c = 0; c < m.cols(); c++) {
            Json terms = Json::array();
            for (const auto &[e, coeff] : m.at(r, c).terms()) {
                terms.push_back(Json{{"exps", e}, {"coeff", cyclo_to_json(coeff)}});
            }
            row.push_back(std::move(terms));
        }
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

WAMatrix wam_from_json(const Json &j) {
    WAMatrix m;
    m.p = require_prime(j, "WAM");
    const Json &rows = require_array(j, "rows", "WAM");
    const Json &cols = require_array(j, "cols", "WAM");
    auto dim_of = [&](const Json &labels) {
        if (labels.empty() || !labels[0].is_string()) {
            throw FormatError("WAM: state labels must be digit strings");
        }
        return uint32_t(labels[0].get<std::string>().size());
    };
    m.left_dim = dim_of(rows);
    m.right_dim = dim_of(cols);
    if (rows.size() != m.rows() || cols.size() != m.cols()) {
        throw FormatError("WAM: label count does not match the state dimension");
    }
    std::string domain = require_string(j, "domain", "WAM");
    if (domain == "primal") {
        m.domain = WamDomain::primal;
    } else if (domain == "dual") {
        m.domain = WamDomain::dual;
    } else {
        throw FormatError("WAM: domain must be \"primal\" or \"dual\"");
    }
    m.symbol_length = uint32_t(require_uint(j, "symbol_length", "WAM"));
    const Json &entries = require_array(j, "entries", "WAM");
    if (entries.size() != m.rows()) {
        throw FormatError("WAM: wrong number of rows");
    }
    for (const auto &row : entries) {
        if (!row.is_array() || row.size() != m.cols()) {
            throw FormatError("WAM: wrong number of columns");
        }
        for (const auto &cell : row) {
            WeightPoly poly(m.p);
            for (const auto &term : cell) {
                auto exps = require(term, "exps", "WAM term").get<Exponents>();
                if (exps.size() != m.p) {
                    throw FormatError("WAM term: exps must have one entry per alphabet symbol");
                }
                poly.add_term(exps, cyclo_from_json(m.p, require(term, "coeff", "WAM term")));
            }
            m.entries.push_back(std::move(poly));
        }
    }
    return m;
}

Json hwam_to_json(const HWAMatrix &m) {
    Json out;
    out["p"] = m.p;
    out["rows"] = state_labels(m.p, m.left_dim);
    out["cols"] = state_labels(m.p, m.right_dim);
    out["domain"] = domain_name(m.domain);
    out["symbol_length"] = m.symbol_length;
    Json rows = Json::array();
    for (uint64_t r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (uint64_t c = 0; c < m.cols(); c++) {
            Json coeffs = Json::array();
            for (const auto &x : m.at(r, c)) {
                coeffs.push_back(x.get_str());
            }
            row.push_back(std::move(coeffs));
        }
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

Json message_to_json(const Message &m) {
    Json out;
    out["group"] = Json{{"p", m.p}, {"dim", m.dim}};
    Json values = Json::array();
    for (const auto &v : m.values) {
        if (v.is_rational()) {
            values.push_back(v.rational().get_str());
        } else {
            values.push_back(cyclo_to_json(v));
        }
    }
    out["values"] = std::move(values);
    return out;
}

Message message_from_json(const Json &j) {
    const Json &group = require(j, "group", "message");
    uint32_t p = require_prime(group, "message group");
    uint32_t dim = uint32_t(require_uint(group, "dim", "message group"));
    Message m = Message::zeros(p, dim);
    const Json &values = require_array(j, "values", "message");
    if (values.size() != m.values.size()) {
        throw FormatError(
            "message: expected " + std::to_string(m.values.size()) + " values, got " + std::to_string(values.size()));
    }
    for (size_t i = 0; i < values.size(); i++) {
        if (values[i].is_object()) {
            m.values[i] = cyclo_from_json(p, values[i]);
        } else if (values[i].is_string()) {
            try {
                m.values[i] = CycloRat(p, parse_rational(values[i].get<std::string>()));
            } catch (const DomainError &e) {
                throw FormatError(std::string("message: ") + e.what());
            }
        } else if (values[i].is_number_integer()) {
            m.values[i] = CycloRat(p, mpq_class(mpz_class(std::to_string(values[i].get<int64_t>()))));
        } else {
            throw FormatError("message: values must be rational strings");
        }
    }
    return m;
}

}  // namespace macwam
