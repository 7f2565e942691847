/*
   Copyright 2026 The ffdyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// ffdyn command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <ffdyn/ffdyn.hpp>

namespace {

using json = nlohmann::ordered_json;
using namespace ffdyn;

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kGuard = 3 };

struct Args {
    std::string format = "json";
    unsigned jobs = 1;
    std::string sweep;

    std::string kind = "plain";
    std::string family = "m";
    std::string method;
    std::string suite = "all";
    std::uint64_t q = 0, L = 0, budget = kDefaultVerifyBudget;
    unsigned n = 0, ell = 0, c = 0;
    bool paper_verbatim = false;
    bool have_q = false;
};

struct Outcome {
    json params = json::object();
    json result = json::object();
    int status = kOk;
};

std::string rat(const ExactRational& x) {
    if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
    return to_string(x);
}

std::string str(const ExactInt& x) { return x.str(); }

CountKind parse_kind(const std::string& s) {
    if (s == "plain") return CountKind::kPlain;
    if (s == "self-reciprocal") return CountKind::kSelfReciprocal;
    if (s == "self-conjugate") return CountKind::kSelfConjugate;
    throw InvalidArgument("unknown kind '" + s + "'");
}

Family parse_family(const std::string& s) {
    if (s == "m") return Family::kM;
    if (s == "gl") return Family::kGL;
    if (s == "sp") return Family::kSp;
    if (s == "u") return Family::kU;
    throw InvalidArgument("unknown family '" + s + "'");
}

void require(std::initializer_list<std::pair<const char*, std::uint64_t>> opts) {
    for (const auto& [name, v] : opts)
        if (v == 0) throw InvalidArgument(std::string("--") + name + " is required and must be positive");
}

Outcome cmd_count_irr(const Args& a) {
    require({{"q", a.q}, {"L", a.L}, {"n", a.n}});
    Outcome o;
    const std::string method = a.method.empty() ? "formula" : a.method;
    o.params = {{"kind", a.kind}, {"q", std::to_string(a.q)}, {"L", std::to_string(a.L)}, {"n", std::to_string(a.n)}, {"method", method}};
    const CountKind kind = parse_kind(a.kind);
    if (method != "formula" && method != "oracle" && method != "both") throw InvalidArgument("unknown method '" + method + "'");
    std::optional<ExactInt> f, g;
    if (method != "oracle") {
        f = count_formula(kind, a.q, a.L, a.n);
        o.result["formula"] = str(*f);
        o.result["paper_verbatim"] = rat(count_verbatim(kind, a.q, a.L, a.n));
    }
    if (method != "formula") {
        g = oracle_count(kind, a.q, a.L, a.n, kDefaultPolyGuard, ParallelContext{a.jobs});
        o.result["oracle"] = str(*g);
    }
    if (f && g) {
        o.result["agree"] = *f == *g;
        if (*f != *g) o.status = kMismatch;
    }
    return o;
}

ExactInt family_size(const GroupKind& k) {
    if (k.family == Family::kM) return ipow(ExactInt(k.q), std::uint64_t{k.n} * k.n);
    return group_order(k);
}

Outcome cmd_periodic(const Args& a) {
    require({{"n", a.n}, {"q", a.q}, {"L", a.L}});
    Outcome o;
    const Family fam = parse_family(a.family);
    const bool classical = fam == Family::kM || fam == Family::kGL;
    const std::string method = a.method.empty() ? (classical ? "class" : "brute") : a.method;
    o.params = {{"family", a.family}, {"n", std::to_string(a.n)}, {"q", std::to_string(a.q)}, {"L", std::to_string(a.L)}, {"method", method}};
    if (method != "class" && method != "closed" && method != "brute" && method != "all") throw InvalidArgument("unknown method '" + method + "'");
    const GroupKind k = GroupKind::make(fam, a.n, a.q);
    const bool closed_ok = fam == Family::kM && (a.n == 2 || a.n == 3);

    if (!classical && (method == "class" || method == "closed"))
        throw InvalidArgument("method '" + method + "' is not available for family " + a.family + " (use brute)");
    if (method == "closed" && !closed_ok) throw InvalidArgument("no closed form for family " + a.family + " with n = " + std::to_string(a.n));

    std::vector<std::pair<std::string, ExactInt>> values;
    if (method == "class" || (method == "all" && classical)) values.emplace_back("class", exact_periodic_count(fam, a.n, a.q, a.L));
    if (method == "closed" || (method == "all" && closed_ok))
        values.emplace_back("closed", a.n == 2 ? m2_closed(a.q, a.L) : m3_closed(a.q, a.L, a.paper_verbatim));
    if (method == "brute" || method == "all") {
        BruteOptions bo;
        bo.ctx.jobs = a.jobs;
        values.emplace_back("brute", brute_periodic_count(k, a.L, bo));
    }
    for (const auto& [name, v] : values) o.result[name] = str(v);
    const ExactInt size = family_size(k);
    o.result["order"] = str(size);
    o.result["ratio"] = rat(ExactRational(values.front().second, size));
    if (values.size() > 1) {
        bool agree = true;
        for (const auto& [name, v] : values) agree = agree && v == values.front().second;
        o.result["agree"] = agree;
        if (!agree) o.status = kMismatch;
    }
    return o;
}

Outcome cmd_limit(const Args& a) {
    require({{"ell", a.ell}, {"L", a.L}, {"c", a.c}});
    Outcome o;
    const Family fam = parse_family(a.family);
    if (fam == Family::kM) throw InvalidArgument("limit: family must be gl, sp or u");
    o.params = {{"family", a.family}, {"ell", std::to_string(a.ell)}, {"L", std::to_string(a.L)}, {"c", std::to_string(a.c)}};
    if (a.have_q) o.params["q"] = std::to_string(a.q);
    o.params["paper_verbatim"] = a.paper_verbatim;
    LimitOptions lo;
    lo.paper_verbatim = a.paper_verbatim;
    const ExactRational lim = fam == Family::kGL ? limit_gl(a.ell, a.L, a.c, lo) : limit_sp_u(a.ell, a.L, a.c, lo);
    o.result["limit"] = rat(lim);
    o.result["numerator"] = str(boost::multiprecision::numerator(lim));
    o.result["denominator"] = str(boost::multiprecision::denominator(lim));
    if (a.have_q) {
        if (v_adic(a.L, ExactInt(a.q) - 1) != a.c)
            throw HypothesisViolation("v_L(q - 1) = " + std::to_string(v_adic(a.L, ExactInt(a.q) - 1)) + " differs from c = " + std::to_string(a.c));
        ExactRational r;
        std::string group;
        if (fam == Family::kGL) {
            r = ExactRational(exact_periodic_count(Family::kGL, a.ell, a.q, a.L), gl_order(a.ell, a.q));
            group = "GL_" + std::to_string(a.ell) + "(" + std::to_string(a.q) + ")";
        } else {
            // The Sp and U limits at ell are compared against 2ell x 2ell matrices.
            const GroupKind k = GroupKind::make(fam, 2 * a.ell, a.q);
            BruteOptions bo;
            bo.ctx.jobs = a.jobs;
            r = ExactRational(brute_periodic_count(k, a.L, bo), group_order(k));
            group = k.name();
        }
        o.result["group"] = group;
        o.result["ratio"] = rat(r);
        o.result["gap"] = rat(abs(r - lim));
    }
    return o;
}

json check_json(const Check& c) {
    json p = json::object();
    for (const auto& [k, v] : c.params) p[k] = v;
    return {{"suite", c.suite}, {"name", c.name}, {"params", p}, {"expected", c.expected}, {"got", c.got},
            {"status", c.skipped ? "skipped" : c.passed ? "pass" : "fail"}};
}

int run_verify_cmd(const Args& a) {
    const auto report = run_verify(a.suite, a.budget, ParallelContext{a.jobs});
    const int status = report.ok() ? kOk : kMismatch;
    if (a.format == "json") {
        json out = {{"version", FFDYN_VERSION}, {"command", "verify"}, {"params", {{"suite", a.suite}, {"budget", std::to_string(a.budget)}}}};
        out["summary"] = {{"passed", report.passed()}, {"failed", report.failed()}, {"skipped", report.skipped()}, {"ok", report.ok()}};
        json checks = json::array();
        for (const auto& c : report.checks) checks.push_back(check_json(c));
        out["checks"] = checks;
        std::cout << out.dump(2) << "\n";
    } else if (a.format == "csv") {
        std::cout << "suite,name,params,expected,got,status\n";
        for (const auto& c : report.checks) {
            std::string p;
            for (const auto& [k, v] : c.params) p += (p.empty() ? "" : ";") + k + "=" + v;
            std::cout << c.suite << "," << c.name << ",\"" << p << "\",\"" << c.expected << "\",\"" << c.got << "\"," << check_json(c)["status"].get<std::string>() << "\n";
        }
    } else {
        for (const auto& c : report.checks) {
            std::string p;
            for (const auto& [k, v] : c.params) p += " " + k + "=" + v;
            std::cout << check_json(c)["status"].get<std::string>() << "  " << c.suite << "/" << c.name << p << "  expected " << c.expected << ", got " << c.got << "\n";
        }
        std::cout << report.passed() << " passed, " << report.failed() << " failed, " << report.skipped() << " skipped\n";
    }
    return status;
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return quoted + "\"";
    }
    return s;
}

void emit(const Args& a, const std::string& command, const std::vector<json>& rows, const std::optional<json>& sweep) {
    if (a.format == "json") {
        json out = {{"version", FFDYN_VERSION}, {"command", command}};
        if (sweep) {
            out["sweep"] = *sweep;
            out["rows"] = rows;
        } else {
            out["params"] = rows.front()["params"];
            out["result"] = rows.front()["result"];
        }
        std::cout << out.dump(2) << "\n";
        return;
    }
    // Flatten params and result into one record per row.
    std::vector<std::string> cols;
    std::vector<std::map<std::string, std::string>> flat;
    for (const auto& r : rows) {
        std::map<std::string, std::string> m;
        for (const char* part : {"params", "result"})
            for (const auto& [k, v] : r[part].items()) {
                if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
                m[k] = csv_cell(v);
            }
        if (r.contains("error")) m["error"] = csv_cell(r["error"]);
        flat.push_back(std::move(m));
    }
    if (std::any_of(rows.begin(), rows.end(), [](const json& r) { return r.contains("error"); })) cols.push_back("error");
    if (a.format == "csv") {
        for (std::size_t i = 0; i < cols.size(); ++i) std::cout << (i ? "," : "") << cols[i];
        std::cout << "\n";
        for (const auto& m : flat) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                auto it = m.find(cols[i]);
                std::cout << (i ? "," : "") << (it == m.end() ? "" : it->second);
            }
            std::cout << "\n";
        }
        return;
    }
    for (std::size_t r = 0; r < flat.size(); ++r) {
        if (r) std::cout << "\n";
        for (const auto& col : cols)
            if (auto it = flat[r].find(col); it != flat[r].end()) std::cout << col << ": " << it->second << "\n";
    }
}

int exit_for(const std::exception& e) {
    if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const std::invalid_argument*>(&e)) return kInvalid;
    if (dynamic_cast<const GuardExceeded*>(&e)) return kGuard;
    if (dynamic_cast<const VerificationFailure*>(&e)) return kMismatch;
    return kInvalid;
}

struct Sweep {
    std::string var;
    std::uint64_t from = 0, to = 0;
};

Sweep parse_sweep(const std::string& s) {
    const auto eq = s.find('=');
    const auto dots = s.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq) throw InvalidArgument("--sweep expects var=a..b, got '" + s + "'");
    Sweep sw;
    sw.var = s.substr(0, eq);
    try {
        sw.from = std::stoull(s.substr(eq + 1, dots - eq - 1));
        sw.to = std::stoull(s.substr(dots + 2));
    } catch (const std::exception&) {
        throw InvalidArgument("--sweep bounds must be integers, got '" + s + "'");
    }
    if (sw.from > sw.to) throw InvalidArgument("--sweep range is empty");
    if (sw.to - sw.from > 100000) throw InvalidArgument("--sweep range is too long");
    return sw;
}

void set_var(Args& a, const std::string& var, std::uint64_t v) {
    if (var == "q") {
        a.q = v;
        a.have_q = true;
    } else if (var == "L")
        a.L = v;
    else if (var == "n")
        a.n = static_cast<unsigned>(v);
    else if (var == "ell")
        a.ell = static_cast<unsigned>(v);
    else if (var == "c")
        a.c = static_cast<unsigned>(v);
    else
        throw InvalidArgument("cannot sweep over '" + var + "' (expected q, L, n, ell or c)");
}

int run_command(const Args& base, const std::string& command, const std::function<Outcome(const Args&)>& fn) {
    if (base.sweep.empty()) {
        try {
            const Outcome o = fn(base);
            emit(base, command, {json{{"params", o.params}, {"result", o.result}}}, std::nullopt);
            return o.status;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_for(e);
        }
    }
    Sweep sw;
    try {
        sw = parse_sweep(base.sweep);
        Args probe = base;
        set_var(probe, sw.var, sw.from);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    // Rows whose parameters violate a hypothesis carry an error field; the
    // exit status reflects the remaining rows.
    std::vector<json> rows;
    int status = kOk;
    std::size_t valid = 0;
    for (std::uint64_t v = sw.from; v <= sw.to; ++v) {
        if (sw.var == "q" && !prime_power(v)) continue;
        Args a = base;
        set_var(a, sw.var, v);
        try {
            const Outcome o = fn(a);
            rows.push_back({{"params", o.params}, {"result", o.result}});
            status = std::max(status, o.status);
            ++valid;
        } catch (const std::exception& e) {
            const int code = exit_for(e);
            if (code != kInvalid) status = std::max(status, code);
            rows.push_back({{"params", {{sw.var, std::to_string(v)}}}, {"result", json::object()}, {"error", e.what()}});
        }
    }
    emit(base, command, rows, json{{"var", sw.var}, {"from", std::to_string(sw.from)}, {"to", std::to_string(sw.to)}});
    if (valid == 0 && status == kOk) return kInvalid;
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic points of the power map on finite matrix algebras and classical groups", "ffdyn"};
    app.set_version_flag("--version", FFDYN_VERSION);
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_option("--format", a.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--jobs", a.jobs, "worker threads")->check(CLI::Range(1U, 1024U));
    app.add_option("--sweep", a.sweep, "sweep a parameter, e.g. q=3..31");

    auto* irr = app.add_subcommand("count-irr", "count monic irreducibles whose roots have L-free order");
    irr->add_option("--kind", a.kind)->check(CLI::IsMember({"plain", "self-reciprocal", "self-conjugate"}));
    irr->add_option("--q", a.q);
    irr->add_option("--L", a.L);
    irr->add_option("--n", a.n);
    irr->add_option("--method", a.method)->check(CLI::IsMember({"formula", "oracle", "both"}));

    auto* per = app.add_subcommand("periodic", "count periodic points in M_n, GL_n, Sp_n or U_n");
    per->add_option("--family", a.family)->required()->check(CLI::IsMember({"m", "gl", "sp", "u"}));
    per->add_option("--n", a.n);
    per->add_option("--q", a.q);
    per->add_option("--L", a.L);
    per->add_option("--method", a.method)->check(CLI::IsMember({"class", "closed", "brute", "all"}));
    per->add_flag("--paper-verbatim", a.paper_verbatim, "uncorrected M_3 closed form");

    auto* lim = app.add_subcommand("limit", "limiting proportion of periodic points");
    lim->add_option("--family", a.family)->required()->check(CLI::IsMember({"gl", "sp", "u"}));
    lim->add_option("--ell", a.ell);
    lim->add_option("--L", a.L);
    lim->add_option("--c", a.c);
    auto* qopt = lim->add_option("--q", a.q, "also report the finite-q ratio");
    lim->add_flag("--paper-verbatim", a.paper_verbatim, "Sp/U coefficients without the factor 2");

    auto* ver = app.add_subcommand("verify", "run formula-versus-oracle suites");
    ver->add_option("--suite", a.suite)->check(CLI::IsMember({"lemmas", "dynamics", "classes", "limits", "all"}));
    ver->add_option("--budget", a.budget, "largest enumeration a single check may scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }
    a.have_q = qopt->count() > 0;

    if (*ver) {
        if (!a.sweep.empty()) {
            std::cerr << "error: verify does not take --sweep\n";
            return kInvalid;
        }
        try {
            return run_verify_cmd(a);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_for(e);
        }
    }
    if (*irr) return run_command(a, "count-irr", cmd_count_irr);
    if (*per) return run_command(a, "periodic", cmd_periodic);
    return run_command(a, "limit", cmd_limit);
}
