// coxcount: reflection-factorization counts and identity checks for
// well-generated complex reflection groups.
//
//   coxcount [--json] [--data-dir DIR] info <spec>
//   coxcount [--json] count <spec> --len L [--method M] [--zeta k/h]
//   coxcount [--json] verify <spec> [--max-len L]
//   coxcount [--json] [--data-dir DIR] verify-exceptional (<name> | --all)
//
// spec grammar: Sn:<n> | G:<r>,1,<n> | G:<r>,<r>,<n> | I2:<r> | C:<r> | X:<name>
// exit codes: 0 ok, 1 usage, 2 verification failure, 3 resource cap

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxcount/counting.hpp"
#include "coxcount/exceptional.hpp"
#include "coxcount/groups.hpp"

using nlohmann::json;
using namespace coxcount;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedSpec {
    std::string text;
    std::optional<GroupSpec> group;  // empty for exceptional types
    std::string xname;
};

long spec_int(const std::string& s) {
    if (s.empty() || s.size() > 6) throw usage_error("bad integer '" + s + "' in spec");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw usage_error("bad integer '" + s + "' in spec");
    return std::stol(s);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

ParsedSpec parse_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw usage_error("spec '" + text + "' must look like Sn:4, G:2,1,3, I2:5, C:6 or X:G4");
    std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
    ParsedSpec out{text, std::nullopt, ""};
    try {
        if (head == "Sn") {
            out.group = GroupSpec::symmetric(static_cast<int>(spec_int(tail)));
        } else if (head == "G") {
            auto parts = split_on(tail, ',');
            if (parts.size() != 3) throw usage_error("G spec needs r,p,n");
            long r = spec_int(parts[0]), p = spec_int(parts[1]), n = spec_int(parts[2]);
            if (r == 1 && p == 1)
                out.group = GroupSpec::symmetric(static_cast<int>(n));
            else if (p == 1)
                out.group = GroupSpec::gr1n(static_cast<int>(r), static_cast<int>(n));
            else if (p == r)
                out.group = GroupSpec::grrn(static_cast<int>(r), static_cast<int>(n));
            else
                throw usage_error("only G(r,1,n) and G(r,r,n) are well-generated");
        } else if (head == "I2") {
            out.group = GroupSpec::grrn(static_cast<int>(spec_int(tail)), 2);
        } else if (head == "C") {
            out.group = GroupSpec::cyclic(static_cast<int>(spec_int(tail)));
        } else if (head == "X") {
            out.xname = canonical_type_name(tail);
        } else {
            throw usage_error("unknown spec family '" + head + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("bad spec: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw usage_error(std::string("bad spec: ") + e.what());
    }
    return out;
}

Caps caps_from_env() {
    Caps caps;
    if (const char* v = std::getenv("COXCOUNT_ENUM_CAP")) caps.enum_cap = std::stoull(v);
    if (const char* v = std::getenv("COXCOUNT_MAX_LEN")) caps.max_len = std::stoi(v);
    if (const char* v = std::getenv("COXCOUNT_STEP_OPS")) caps.step_ops = std::stoull(v);
    return caps;
}

// "k" or "k/h"; must reduce to a fraction with denominator exactly h
Rat parse_zeta(const std::string& s, long h) {
    try {
        Rat q;
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            q = make_rat(std::stol(s), h);
        } else {
            q = make_rat(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
        }
        return q;
    } catch (const std::exception&) {
        throw usage_error("--zeta expects k or k/h, got '" + s + "'");
    }
}

json group_json(const GroupSpec& g) {
    const char* family = nullptr;
    switch (g.family) {
        case Family::Symmetric: family = "Symmetric"; break;
        case Family::GR1N: family = "GR1N"; break;
        case Family::GRRN: family = "GRRN"; break;
        case Family::Cyclic: family = "Cyclic"; break;
    }
    return {{"name", g.name()},
            {"family", family},
            {"rank", g.rank()},
            {"order", g.order().get_str()},
            {"coxeter_number", g.coxeter_number()},
            {"degrees", g.degrees()},
            {"codegrees", g.codegrees()},
            {"reflections", g.reflection_count()},
            {"hyperplanes", g.hyperplane_count()}};
}

json type_json(const ExceptionalType& t) {
    return {{"name", "X:" + t.name},
            {"family", "exceptional"},
            {"rank", t.rank()},
            {"order", t.order.get_str()},
            {"coxeter_number", t.coxeter_number()},
            {"degrees", t.degrees},
            {"codegrees", t.codegrees},
            {"reflections", t.reflection_count()},
            {"hyperplanes", t.hyperplane_count()}};
}

template <typename T>
std::string joined(const std::vector<T>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void print_group_text(const json& spec) {
    std::cout << "name=" << spec["name"].get<std::string>() << "\n"
              << "family=" << spec["family"].get<std::string>() << "\n"
              << "rank=" << spec["rank"].get<int>() << "\n"
              << "order=" << spec["order"].get<std::string>() << "\n"
              << "coxeter_number=" << spec["coxeter_number"].get<long>() << "\n"
              << "degrees=" << joined(spec["degrees"].get<std::vector<long>>()) << "\n"
              << "codegrees=" << joined(spec["codegrees"].get<std::vector<long>>()) << "\n"
              << "reflections=" << spec["reflections"].get<long>() << "\n"
              << "hyperplanes=" << spec["hyperplanes"].get<long>() << "\n";
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

bool report_checks(const std::vector<Check>& checks, bool json_mode, json& results) {
    bool all = true;
    json arr = json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (!json_mode)
            std::cout << (c.pass ? "pass " : "FAIL ") << c.name
                      << (c.detail.empty() ? "" : " " + c.detail) << "\n";
    }
    results["checks"] = arr;
    results["pass"] = all;
    if (!json_mode) std::cout << "result=" << (all ? "pass" : "fail") << "\n";
    return all;
}

// engines applicable to a spec: brute and closed always; frobenius except for
// dihedral G(r,r,2); plus the family-specific closed forms as extra witnesses
std::vector<CountResult> run_counts(const GroupSpec& g, int ell, const Rat& zeta_exp,
                                    const std::string& method, const Caps& caps) {
    bool dihedral = g.family == Family::GRRN && g.n == 2;
    std::vector<CountResult> out;
    auto want = [&](const char* m) { return method == "all" || method == m; };
    if (method == "frobenius" && dihedral)
        throw usage_error("no character model for dihedral specs; use brute/closed/all");
    if (want("brute")) {
        Element c = canonical_coxeter(g, zeta_exp);
        out.push_back(brute_count(g, c, ell, caps));
    }
    if (want("frobenius") && !dihedral) out.push_back(frobenius_count(g, ell, zeta_exp));
    if (want("closed")) out.push_back({ell, egf_count(closed_form_egf(g), ell), "closed"});
    if (method == "all") {
        if (g.family == Family::Cyclic)
            out.push_back({ell, cyclic_count(g.r, ell), "cyclic-closed"});
        if (dihedral) out.push_back({ell, dihedral_count(g.r, ell), "dihedral-closed"});
    }
    if (out.empty()) throw usage_error("unknown method '" + method + "'");
    return out;
}

int cmd_count(const GroupSpec& g, int ell, const std::string& method,
              const std::string& zeta_str, bool json_mode, json& results) {
    Caps caps = caps_from_env();
    if (ell < 0 || ell > caps.max_len)
        throw cap_exceeded("len " + std::to_string(ell) + " outside [0," +
                           std::to_string(caps.max_len) + "] (set COXCOUNT_MAX_LEN to raise)");
    Rat zeta_exp = zeta_str.empty() ? make_rat(1, g.coxeter_number())
                                    : parse_zeta(zeta_str, g.coxeter_number());
    try {
        validate_primitive_exponent(g, zeta_exp);
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }

    auto counts = run_counts(g, ell, zeta_exp, method, caps);
    bool agree = true;
    for (const auto& c : counts) agree = agree && c.count == counts.front().count;

    json arr = json::array();
    for (const auto& c : counts) arr.push_back({{"method", c.method}, {"count", c.count.get_str()}});
    results = {{"len", ell}, {"zeta", zeta_exp.get_str()}, {"counts", arr}, {"agree", agree}};
    if (!json_mode) {
        std::cout << "len=" << ell << " zeta=" << zeta_exp.get_str() << "\n";
        for (const auto& c : counts)
            std::cout << c.method << "=" << c.count.get_str() << "\n";
        if (counts.size() > 1) std::cout << "agree=" << (agree ? "yes" : "NO") << "\n";
    }
    return agree ? 0 : 2;
}

int cmd_verify(const GroupSpec& g, int max_len, bool json_mode, json& results) {
    Caps caps = caps_from_env();
    if (max_len < 0) max_len = g.rank() + 6;
    if (max_len > caps.max_len)
        throw cap_exceeded("max-len exceeds cap (set COXCOUNT_MAX_LEN to raise)");
    bool dihedral = g.family == Family::GRRN && g.n == 2;
    std::vector<Check> checks;

    {
        long n = g.rank(), h = g.coxeter_number();
        auto deg = g.degrees();
        auto codeg = g.codegrees();
        Int prod = 1;
        for (long d : deg) prod *= d;
        bool ok = g.reflection_count() + g.hyperplane_count() == n * h && prod == g.order();
        for (size_t i = 0; i < deg.size(); ++i) ok = ok && deg[i] + codeg[i] == h;
        ok = ok && static_cast<long>(reflections(g).size()) == g.reflection_count();
        checks.push_back({"structure", ok,
                          "|R|=" + std::to_string(g.reflection_count()) +
                              " |R*|=" + std::to_string(g.hyperplane_count()) +
                              " nh=" + std::to_string(n * h)});
    }

    ExpPoly closed = closed_form_egf(g);
    if (!dihedral) {
        bool ok = frobenius_egf(g) == closed;
        checks.push_back({"egf-symbolic", ok,
                          std::to_string(closed.terms().size()) + " exponential terms"});
    }

    {
        Element c = canonical_coxeter(g);
        bool ok = true;
        std::string detail;
        for (int ell = 0; ell <= max_len && ok; ++ell) {
            Int brute = brute_count(g, c, ell, caps).count;
            Int series = egf_count(closed, ell);
            ok = brute == series;
            if (ok && !dihedral) ok = frobenius_count(g, ell).count == brute;
            if (ok && g.family == Family::Cyclic) ok = cyclic_count(g.r, ell) == brute;
            if (ok && dihedral) ok = dihedral_count(g.r, ell) == brute;
            if (!ok) detail = "mismatch at len " + std::to_string(ell);
        }
        checks.push_back({"count-agreement", ok,
                          ok ? "len 0.." + std::to_string(max_len) : detail});
        Int minimal = brute_count(g, c, g.rank(), caps).count;
        bool mok = minimal == minimal_count(g);
        checks.push_back({"minimal-count", mok,
                          "len=" + std::to_string(g.rank()) + " count=" + minimal.get_str()});
    }

    return report_checks(checks, json_mode, results) ? 0 : 2;
}

int cmd_verify_exceptional(const std::vector<std::string>& names, const std::string& data_dir,
                           bool json_mode, json& results) {
    json arr = json::array();
    int passed = 0;
    std::vector<Check> checks;
    for (const auto& name : names) {
        VerifyReport rep;
        try {
            rep = verify_type(name, data_dir);
        } catch (const std::runtime_error& e) {
            rep.type = name;
            rep.pass = false;
            rep.detail = e.what();
        }
        json terms = json::array();
        for (const auto& [expo, amp] : rep.terms)
            terms.push_back({{"exponent", expo.get_str()}, {"amplitude", amp.get_str()}});
        arr.push_back({{"type", rep.type},
                       {"pass", rep.pass},
                       {"n", rep.n},
                       {"order", rep.order.get_str()},
                       {"refl", rep.refl},
                       {"corefl", rep.corefl},
                       {"terms", terms}});
        if (rep.pass) ++passed;
        checks.push_back({rep.type, rep.pass, rep.pass ? "" : rep.detail});
    }
    results["reports"] = arr;
    results["passed"] = passed;
    results["total"] = static_cast<int>(names.size());
    bool all = report_checks(checks, json_mode, results);
    if (!json_mode)
        std::cout << passed << "/" << names.size() << " types verified\n";
    return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"factorization counts in well-generated complex reflection groups"};
    app.fallthrough();
    app.require_subcommand(1);

    bool json_mode = false;
    std::string data_dir = "data/exceptional";
    app.add_flag("--json", json_mode, "machine-readable output");
    app.add_option("--data-dir", data_dir, "directory with exceptional character tables")
        ->envname("COXCOUNT_DATA");

    std::string spec_str, method = "all", zeta_str;
    int len = -1, max_len = -1;
    bool all_types = false;

    auto* info = app.add_subcommand("info", "group invariants for a spec");
    info->add_option("spec", spec_str)->required();

    auto* count = app.add_subcommand("count", "count length-L reflection factorizations");
    count->add_option("spec", spec_str)->required();
    count->add_option("--len", len, "factorization length")->required();
    count->add_option("--method", method)->check(CLI::IsMember({"brute", "frobenius", "closed", "all"}));
    count->add_option("--zeta", zeta_str, "Coxeter-class exponent k or k/h (default 1/h)");

    auto* verify = app.add_subcommand("verify", "run the identity suite for one spec");
    verify->add_option("spec", spec_str)->required();
    verify->add_option("--max-len", max_len, "largest length checked (default rank+6)");

    auto* vx = app.add_subcommand("verify-exceptional", "check tabulated exceptional types");
    vx->add_option("name", spec_str, "type name (G4..G37 or H3/F4/H4/E6/E7/E8)");
    vx->add_flag("--all", all_types, "verify all 26 types");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    auto started = std::chrono::steady_clock::now();
    json envelope;
    std::string command = app.get_subcommands().front()->get_name();
    envelope["command"] = command;
    envelope["spec"] = nullptr;
    envelope["results"] = json::object();

    int code = 0;
    try {
        json results = json::object();
        if (vx->parsed()) {
            if (all_types == !spec_str.empty())
                throw usage_error("verify-exceptional needs a type name or --all");
            std::vector<std::string> names;
            if (all_types) {
                names = all_type_names();
            } else {
                try {
                    names.push_back(canonical_type_name(spec_str));
                } catch (const std::runtime_error& e) {
                    throw usage_error(e.what());
                }
            }
            envelope["spec"] = all_types ? "all" : names.front();
            code = cmd_verify_exceptional(names, data_dir, json_mode, results);
        } else {
            ParsedSpec parsed = parse_spec(spec_str);
            if (parsed.group) {
                envelope["spec"] = group_json(*parsed.group);
            } else {
                if (!info->parsed())
                    throw usage_error("exceptional types support info and verify-exceptional only");
                auto [type, rows] = load_type(parsed.xname, data_dir);
                sanity_checks(type, rows);
                envelope["spec"] = type_json(type);
            }
            if (info->parsed()) {
                if (!json_mode) print_group_text(envelope["spec"]);
            } else if (count->parsed()) {
                code = cmd_count(*parsed.group, len, method, zeta_str, json_mode, results);
            } else {
                code = cmd_verify(*parsed.group, max_len, json_mode, results);
            }
        }
        envelope["results"] = results;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto elapsed = std::chrono::steady_clock::now() - started;
    envelope["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    if (json_mode) std::cout << envelope.dump(2) << "\n";
    return code;
}
