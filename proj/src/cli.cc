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

#include "macwam/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "macwam/serialize.h"

namespace macwam {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const Json &j, const std::string &path, std::ostream &out) {
    std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw FormatError("cannot write " + path);
    }
    file << text;
}

NormalRealization load_realization(const std::string &path, bool allow_open_states = true) {
    auto r = realization_from_json(parse_json(read_file(path), path));
    auto problems = validate(r, allow_open_states);
    if (!problems.empty()) {
        throw ValidationError(std::move(problems));
    }
    return r;
}

Message load_message(const std::string &path) {
    return message_from_json(parse_json(read_file(path), path));
}

std::string default_constraint(const NormalRealization &r, const std::string &requested) {
    if (!requested.empty()) {
        r.constraint(requested);
        return requested;
    }
    if (r.constraints.empty()) {
        throw DimensionError("realization has no constraints");
    }
    return r.constraints[0].id;
}

bool has_open_states(const NormalRealization &r) {
    return !validate(r).empty();
}

std::string entry_label(const WAMatrix &m, uint64_t row, uint64_t col) {
    return "(" + state_label(m.p, m.left_dim, row) + ", " + state_label(m.p, m.right_dim, col) + ")";
}

std::optional<EntryMismatch> first_difference(const WAMatrix &expected, const WAMatrix &actual) {
    if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
        return EntryMismatch{0, 0, std::to_string(expected.rows()) + "x" + std::to_string(expected.cols()) + " matrix",
                             std::to_string(actual.rows()) + "x" + std::to_string(actual.cols()) + " matrix"};
    }
    for (uint64_t r = 0; r < expected.rows(); r++) {
        for (uint64_t c = 0; c < expected.cols(); c++) {
            if (!(expected.at(r, c) == actual.at(r, c))) {
                return EntryMismatch{r, c, expected.at(r, c).str("W"), actual.at(r, c).str("W")};
            }
        }
    }
    return std::nullopt;
}

struct Options {
    uint64_t budget = DEFAULT_BUDGET;

    // build
    uint32_t p = 0;
    std::string generators;
    size_t sections = 1;
    std::string closure = "section";

    // shared
    std::string file;
    std::string out_path;
    std::string constraint;

    // wam
    std::string kind = "cwam";
    std::string domain = "primal";

    // verify
    bool all = false;
    std::string against;

    // spa
    std::string message;
    std::vector<std::string> weights;
    std::string path = "both";

    // behavior
    std::string emit_kind = "code";
};

int cmd_build(const Options &o, std::ostream &out) {
    static const std::map<std::string, Closure> closures = {
        {"zero", Closure::zero_boundary},
        {"tailbite", Closure::tail_biting},
        {"section", Closure::single_section},
    };
    auto g = parse_matrix(o.generators, Prime(o.p));
    emit(realization_to_json(build_trellis(g, o.sections, closures.at(o.closure))), o.out_path, out);
    return EXIT_OK;
}

int cmd_dual(const Options &o, std::ostream &out, std::ostream &err) {
    auto r = load_realization(o.file);
    auto d = dualize(r);
    emit(realization_to_json(d), o.out_path, out);
    std::ostream &summary = o.out_path.empty() ? err : out;
    size_t inverters = 0;
    for (size_t c = 0; c < r.constraints.size(); c++) {
        const auto &ports = r.constraints[c].ports;
        for (size_t i = 0; i < ports.size(); i++) {
            if (ports[i].sign != d.constraints[c].ports[i].sign) {
                summary << "sign inverter: state " << ports[i].var << " at constraint " << r.constraints[c].id
                        << " port " << i << "\n";
                inverters++;
            }
        }
    }
    summary << inverters << " sign inverter(s)\n";
    return EXIT_OK;
}

int cmd_wam(const Options &o, std::ostream &out) {
    auto r = load_realization(o.file);
    Section s = section_of(r, default_constraint(r, o.constraint));
    WAMatrix m;
    if (o.domain == "primal") {
        m = cwam(s, o.budget);
    } else if (o.domain == "dual-direct") {
        m = dual_cwam_direct(s, o.budget);
    } else {
        mpz_class dual_size;
        mpz_ui_pow_ui(dual_size.get_mpz_t(), s.p(), s.code.length() - dimension(s.code));
        m = macwilliams_transform(cwam(s, o.budget), dual_size);
    }
    emit(o.kind == "hwam" ? hwam_to_json(hwam(m)) : wam_to_json(m), o.out_path, out);
    return EXIT_OK;
}

// Undoes the sign inverters of a claimed dual constraint relative to the primal
// one. Returns an empty string on success, else a description of the problem.
std::string unsign_claimed(
    const NormalRealization &r, const ConstraintBlock &primal, const ConstraintBlock &claimed, LinearCode &code) {
    if (claimed.ports.size() != primal.ports.size()) {
        return "port count differs";
    }
    code = claimed.code;
    size_t offset = 0;
    for (size_t i = 0; i < primal.ports.size(); i++) {
        if (claimed.ports[i].var != primal.ports[i].var) {
            return "port " + std::to_string(i) + " binds " + claimed.ports[i].var + " instead of " + primal.ports[i].var;
        }
        uint32_t dim = r.find_var(primal.ports[i].var)->dim;
        if (claimed.ports[i].sign != primal.ports[i].sign) {
            code = negate_coordinates(code, offset, offset + dim);
        }
        offset += dim;
    }
    if (code.length() != primal.code.length() || code.p() != primal.code.p()) {
        return "code length differs";
    }
    return "";
}

// Each state edge of a normal realization carries exactly one inverter in its
// dual; open states carry none.
std::vector<std::string> inverter_problems(const NormalRealization &r, const NormalRealization &d) {
    std::map<std::string, size_t> bindings;
    std::map<std::string, size_t> flips;
    for (size_t c = 0; c < r.constraints.size(); c++) {
        const auto &ports = r.constraints[c].ports;
        for (size_t i = 0; i < ports.size(); i++) {
            bindings[ports[i].var]++;
            if (ports[i].sign != d.constraints[c].ports[i].sign) {
                flips[ports[i].var]++;
            }
        }
    }
    std::vector<std::string> out;
    for (const auto &v : r.vars) {
        if (v.kind != VarKind::state) {
            continue;
        }
        size_t want = bindings[v.id] == 2 ? 1 : 0;
        if (flips[v.id] != want) {
            out.push_back(
                "state " + v.id + " has " + std::to_string(flips[v.id]) + " sign inverter(s), expected " +
                std::to_string(want));
        }
    }
    return out;
}

int cmd_verify(const Options &o, std::ostream &out) {
    auto r = load_realization(o.file);
    std::vector<std::string> ids;
    if (!o.constraint.empty() && !o.all) {
        ids.push_back(default_constraint(r, o.constraint));
    } else {
        for (const auto &c : r.constraints) {
            ids.push_back(c.id);
        }
    }
    std::optional<NormalRealization> claimed;
    if (!o.against.empty()) {
        claimed = load_realization(o.against);
        if (claimed->p != r.p || claimed->vars != r.vars || claimed->constraints.size() != r.constraints.size()) {
            out << "claimed dual: FAIL (variables or constraints differ from " << o.file << ")\n";
            return EXIT_VERIFY_FAILED;
        }
    }

    bool pass = true;
    for (const auto &id : ids) {
        Section s = section_of(r, id);
        auto report = verify_macwilliams(s, o.budget);
        out << id << ": MacWilliams " << (report.pass ? "PASS" : "FAIL") << " (|C| = " << report.code_size.get_str()
            << ", |C^perp| = " << report.dual_size.get_str() << ")\n";
        if (report.mismatch) {
            const auto &m = *report.mismatch;
            out << "  first differing entry " << entry_label(report.direct, m.row, m.col) << ": direct " << m.expected
                << ", transformed " << m.actual << "\n";
        }
        out << id << ": Hamming MacWilliams " << (report.hamming_pass ? "PASS" : "FAIL") << "\n";
        pass = pass && report.pass && report.hamming_pass;

        if (!claimed) {
            continue;
        }
        size_t index = size_t(&r.constraint(id) - r.constraints.data());
        const ConstraintBlock &primal = r.constraints[index];
        const ConstraintBlock &theirs = claimed->constraints[index];
        LinearCode code(Prime(r.p), 0);
        std::string problem = theirs.id != id ? "constraint id " + theirs.id + " does not match"
                                              : unsign_claimed(r, primal, theirs, code);
        if (problem.empty()) {
            Section claimed_section = make_section(dual(code), s.left_dim, s.symbol_dims, s.right_dim);
            auto expected = report.transformed;
            auto actual = dual_cwam_direct(claimed_section, o.budget);
            if (auto m = first_difference(expected, actual)) {
                problem = "first differing entry " + entry_label(expected, m->row, m->col) + ": expected " +
                          m->expected + ", claimed " + m->actual;
            } else if (!code_equal(code, dual(primal.code))) {
                problem = "claimed code is not the orthogonal code (weight adjacency matrices agree)";
            }
        }
        out << id << ": claimed dual " << (problem.empty() ? "PASS" : "FAIL") << "\n";
        if (!problem.empty()) {
            out << "  " << problem << "\n";
            pass = false;
        }
    }

    if (claimed) {
        auto problems = inverter_problems(r, *claimed);
        out << "claimed dual sign inverters: " << (problems.empty() ? "PASS" : "FAIL") << "\n";
        for (const auto &p : problems) {
            out << "  " << p << "\n";
        }
        pass = pass && problems.empty();
    }

    if (has_open_states(r)) {
        out << "realization duality: SKIPPED (open state edges)\n";
    } else {
        try {
            LinearCode expected = dual(code_of(r, o.budget));
            bool ok = code_equal(code_of(dualize(r), o.budget), expected);
            out << "realization duality: " << (ok ? "PASS" : "FAIL") << "\n";
            pass = pass && ok;
            if (claimed) {
                bool claimed_ok = code_equal(code_of(*claimed, o.budget), expected);
                out << "claimed realization duality: " << (claimed_ok ? "PASS" : "FAIL") << "\n";
                pass = pass && claimed_ok;
            }
        } catch (const BudgetError &e) {
            out << "realization duality: SKIPPED (" << e.what() << ")\n";
        }
    }
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? EXIT_OK : EXIT_VERIFY_FAILED;
}

int cmd_spa(const Options &o, std::ostream &out) {
    auto r = load_realization(o.file);
    Section s = section_of(r, default_constraint(r, o.constraint));
    Message incoming;
    if (!o.message.empty()) {
        incoming = load_message(o.message);
    } else if (s.left_dim == 0) {
        incoming = Message::from_rationals(s.p(), 0, {mpq_class(1)});
    } else {
        throw DimensionError("--message is required when the left state is nontrivial");
    }
    std::vector<Message> weights;
    for (const auto &path : o.weights) {
        weights.push_back(load_message(path));
    }

    Json result;
    std::optional<Message> direct;
    std::optional<Message> via_dual;
    if (o.path != "dual") {
        SpaCounter counter;
        direct = spa_update(s, incoming, weights, &counter, o.budget);
        result["direct"] = message_to_json(*direct);
        result["direct_muls"] = counter.multiplications;
    }
    if (o.path != "direct") {
        SpaCounter counter;
        via_dual = spa_via_dual(s, incoming, weights, &counter, o.budget);
        result["dual"] = message_to_json(*via_dual);
        result["dual_muls"] = counter.multiplications;
    }
    bool equal = true;
    if (direct && via_dual) {
        equal = *direct == *via_dual;
        result["equal"] = equal;
    }
    emit(result, o.out_path, out);
    return equal ? EXIT_OK : EXIT_VERIFY_FAILED;
}

int cmd_behavior(const Options &o, std::ostream &out) {
    auto r = load_realization(o.file);
    if (o.emit_kind == "code") {
        emit(code_to_json(code_of(r, o.budget)), o.out_path, out);
        return EXIT_OK;
    }
    auto b = full_behavior(r, o.budget);
    Json result;
    Json vars = Json::array();
    for (const auto &v : b.vars) {
        vars.push_back(v.id);
    }
    result["vars"] = std::move(vars);
    Json configs = Json::array();
    for (const auto &config : b.configs) {
        Json row = Json::array();
        for (const auto &value : config) {
            row.push_back(value.digits());
        }
        configs.push_back(std::move(row));
    }
    result["configs"] = std::move(configs);
    emit(result, o.out_path, out);
    return EXIT_OK;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app("Weight adjacency matrices, MacWilliams identities and dual realizations of group codes.", "macwam");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--budget", o.budget, "Maximum number of enumerated tuples")->check(CLI::PositiveNumber);

    auto *build = app.add_subcommand("build", "Build a trellis realization from a D-transform generator matrix");
    build->add_option("--p", o.p, "Prime alphabet size")->required();
    build->add_option("--generators", o.generators, "Rows separated by ';', entries by ','")->required();
    build->add_option("--sections", o.sections, "Number of trellis sections")->check(CLI::PositiveNumber);
    build->add_option("--closure", o.closure, "zero, tailbite or section")
        ->check(CLI::IsMember({"zero", "tailbite", "section"}));
    build->add_option("--out", o.out_path, "Output file (default stdout)");

    auto *dual_cmd = app.add_subcommand("dual", "Dualize a realization");
    dual_cmd->add_option("file", o.file, "Realization file")->required();
    dual_cmd->add_option("--out", o.out_path, "Output file (default stdout)");

    auto *wam = app.add_subcommand("wam", "Compute a weight adjacency matrix of one constraint");
    wam->add_option("file", o.file, "Realization file")->required();
    wam->add_option("--constraint", o.constraint, "Constraint id (default: first)");
    wam->add_option("--kind", o.kind, "cwam or hwam")->check(CLI::IsMember({"cwam", "hwam"}));
    wam->add_option("--domain", o.domain, "primal, dual-direct or dual-transform")
        ->check(CLI::IsMember({"primal", "dual-direct", "dual-transform"}));
    wam->add_option("--out", o.out_path, "Output file (default stdout)");

    auto *verify = app.add_subcommand("verify", "Check MacWilliams identities and realization duality");
    verify->add_option("file", o.file, "Realization file")->required();
    auto *one = verify->add_option("--constraint", o.constraint, "Check one constraint");
    verify->add_flag("--all", o.all, "Check every constraint (default)")->excludes(one);
    verify->add_option("--against", o.against, "Claimed dual realization to check");

    auto *spa = app.add_subcommand("spa", "Run one sum-product update directly and through the dual");
    spa->add_option("file", o.file, "Realization file")->required();
    spa->add_option("--constraint", o.constraint, "Constraint id (default: first)");
    spa->add_option("--message", o.message, "Incoming left-state message file");
    spa->add_option("--weights", o.weights, "One weight-function file per symbol variable");
    spa->add_option("--path", o.path, "direct, dual or both")->check(CLI::IsMember({"direct", "dual", "both"}));
    spa->add_option("--out", o.out_path, "Output file (default stdout)");

    auto *behavior = app.add_subcommand("behavior", "Enumerate the behavior or the realized code");
    behavior->add_option("file", o.file, "Realization file")->required();
    behavior->add_option("--emit", o.emit_kind, "code or behavior")->check(CLI::IsMember({"code", "behavior"}));
    behavior->add_option("--out", o.out_path, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (build->parsed()) {
            return cmd_build(o, out);
        }
        if (dual_cmd->parsed()) {
            return cmd_dual(o, out, err);
        }
        if (wam->parsed()) {
            return cmd_wam(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        if (spa->parsed()) {
            return cmd_spa(o, out);
        }
        return cmd_behavior(o, out);
    } catch (const BudgetError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_BUDGET;
    } catch (const ConsistencyError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_VERIFY_FAILED;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
}

}  // namespace macwam
