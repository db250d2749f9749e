#include "coxcount/exceptional.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "coxcount/counting.hpp"

namespace coxcount {

namespace {

struct Scanner {
    const std::string& s;
    size_t p = 0;

    void skip_ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool done() {
        skip_ws();
        return p >= s.size();
    }
    char peek() {
        skip_ws();
        return p < s.size() ? s[p] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++p;
        return true;
    }
    long integer() {
        skip_ws();
        size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start) throw parse_error("expected integer", start);
        if (p - start > 12) throw parse_error("integer too large", start);
        return std::stol(s.substr(start, p - start));
    }
};

// term := INT | [INT '*'] 'z' INT ['^' INT]
Cyclo parse_term(Scanner& sc) {
    long coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        coeff = sc.integer();
        have_coeff = true;
        if (!sc.accept('*')) return Cyclo(Int(coeff));
    }
    if (!sc.accept('z'))
        throw parse_error(have_coeff ? "expected root of unity after '*'"
                                     : "expected integer or root of unity",
                          sc.p);
    size_t order_pos = sc.p;
    long m = sc.integer();
    if (m < 1) throw parse_error("root-of-unity order must be positive", order_pos);
    long k = sc.accept('^') ? sc.integer() : 1;
    return Cyclo::zeta(static_cast<unsigned long>(m), k) * Rat(coeff);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
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

long to_long(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("bad " + what + ": '" + s + "'");
    }
}

std::vector<long> long_list(const std::string& csv, const std::string& what) {
    std::vector<long> out;
    for (const auto& part : split(csv, ',')) out.push_back(to_long(part, what));
    return out;
}

std::string describe(const Cyclo& v) {
    if (auto q = v.as_rational()) return q->get_str();
    return "(irrational) over zeta_" + std::to_string(v.order());
}

}  // namespace

Cyclo parse_cyclotomic(const std::string& src) {
    Scanner sc{src};
    if (sc.done()) throw parse_error("empty expression", 0);
    Cyclo total;
    bool neg = sc.accept('-');
    while (true) {
        Cyclo t = parse_term(sc);
        total = neg ? total - t : total + t;
        if (sc.done()) return total;
        if (sc.accept('+'))
            neg = false;
        else if (sc.accept('-'))
            neg = true;
        else
            throw parse_error("expected '+' or '-'", sc.p);
    }
}

long ExceptionalType::reflection_count() const {
    long total = 0;
    for (long d : degrees) total += d - 1;
    return total;
}

long ExceptionalType::hyperplane_count() const {
    long total = 0;
    for (long d : codegrees) total += d + 1;
    return total;
}

void ExceptionalType::validate() const {
    auto fail = [&](const std::string& why) {
        throw std::runtime_error(name + ": " + why);
    };
    if (degrees.empty()) fail("no degrees");
    if (codegrees.size() != degrees.size()) fail("degree/codegree length mismatch");
    if (!std::is_sorted(degrees.begin(), degrees.end())) fail("degrees not ascending");
    if (!std::is_sorted(codegrees.begin(), codegrees.end()))
        fail("codegrees not ascending");
    Int prod = 1;
    for (long d : degrees) prod *= d;
    if (prod != order) fail("product of degrees != order");
    long h = coxeter_number();
    size_t n = degrees.size();
    for (size_t i = 0; i < n; ++i)
        if (degrees[i] + codegrees[n - 1 - i] != h)
            fail("degree/codegree pairing does not sum to the Coxeter number");
    if (reflection_count() + hyperplane_count() != static_cast<long>(n) * h)
        fail("|R| + |R*| != n h");
}

const std::vector<std::string>& all_type_names() {
    static const std::vector<std::string> names = {
        "G4",  "G5",  "G6",  "G8",  "G9",  "G10", "G14", "G16", "G17",
        "G18", "G20", "G21", "G23", "G24", "G25", "G26", "G27", "G28",
        "G29", "G30", "G32", "G33", "G34", "G35", "G36", "G37"};
    return names;
}

std::string canonical_type_name(const std::string& name) {
    std::string up;
    for (char c : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    static const std::map<std::string, std::string> aliases = {
        {"H3", "G23"}, {"F4", "G28"}, {"H4", "G30"},
        {"E6", "G35"}, {"E7", "G36"}, {"E8", "G37"}};
    if (auto it = aliases.find(up); it != aliases.end()) up = it->second;
    const auto& names = all_type_names();
    if (std::find(names.begin(), names.end(), up) == names.end())
        throw std::runtime_error("unknown exceptional type: " + name);
    return up;
}

std::pair<ExceptionalType, std::vector<CharRow>> load_type(const std::string& name,
                                                           const std::string& data_dir) {
    std::string canon = canonical_type_name(name);
    std::string path = data_dir + "/" + canon + ".tsv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);

    ExceptionalType type;
    std::vector<CharRow> rows;
    long expected_rows = -1;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line.find('\t') == std::string::npos) {
            auto eq = line.find('=');
            if (eq == std::string::npos) fail("expected key=value header");
            std::string key = line.substr(0, eq), val = line.substr(eq + 1);
            if (key == "name") {
                if (val != canon) fail("file says name=" + val);
                type.name = val;
            } else if (key == "order") {
                type.order = Int(val);
            } else if (key == "degrees") {
                type.degrees = long_list(val, "degree");
            } else if (key == "codegrees") {
                type.codegrees = long_list(val, "codegree");
            } else if (key == "irreducibles") {
                expected_rows = to_long(val, "irreducible count");
            } else {
                fail("unknown header key '" + key + "'");
            }
            continue;
        }
        auto fields = split(line, '\t');
        if (fields.size() != 4) fail("expected 4 tab-separated fields");
        CharRow row;
        row.deg = to_long(fields[0], "character degree");
        row.occ = to_long(fields[1], "occurrence exponent");
        if (row.deg < 1) fail("character degree must be positive");
        if (row.occ < 0) fail("occurrence exponent must be nonnegative");
        try {
            row.chi_c = parse_cyclotomic(fields[2]);
            row.chi_r = parse_cyclotomic(fields[3]);
        } catch (const parse_error& e) {
            fail(e.what());
        }
        rows.push_back(std::move(row));
    }
    lineno = 0;
    if (type.name.empty()) fail("missing name= header");
    if (type.order == 0) fail("missing order= header");
    if (expected_rows < 0) fail("missing irreducibles= header");
    if (static_cast<long>(rows.size()) != expected_rows)
        fail("expected " + std::to_string(expected_rows) + " rows, found " +
             std::to_string(rows.size()));
    type.validate();
    return {std::move(type), std::move(rows)};
}

void sanity_checks(const ExceptionalType& type, const std::vector<CharRow>& rows) {
    Int sq = 0;
    for (const auto& row : rows) sq += Int(row.deg) * Int(row.deg);
    if (sq != type.order)
        throw std::runtime_error(type.name + ": sum of squared degrees is " +
                                 sq.get_str() + ", group order is " +
                                 type.order.get_str());
}

VerifyReport verify_type(const ExceptionalType& type, const std::vector<CharRow>& rows) {
    VerifyReport rep;
    rep.type = type.name;
    rep.n = type.rank();
    rep.order = type.order;
    rep.refl = type.reflection_count();
    rep.corefl = type.hyperplane_count();

    ExpPoly sum;
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.chi_c.is_zero()) continue;
        auto cr = row.chi_r.as_rational();
        if (!cr) {
            rep.detail = "row " + std::to_string(i + 1) + ": reflection-sum value is not rational";
            return rep;
        }
        Rat expo = *cr / Rat(row.deg);
        expo.canonicalize();
        Rat scale = make_rat(row.deg, 1) / Rat(type.order);
        scale.canonicalize();
        sum.add_term(expo, row.chi_c * scale);
    }

    ExpPoly want = closed_form_egf(type.order, rep.n, rep.refl, rep.corefl);
    rep.pass = (sum == want);
    if (!rep.pass) {
        for (const auto& [expo, amp] : sum.terms()) {
            auto it = want.terms().find(expo);
            if (it == want.terms().end()) {
                rep.detail = "unexpected exponent " + expo.get_str() +
                             " with amplitude " + describe(amp);
                break;
            }
            if (!(it->second == amp)) {
                rep.detail = "exponent " + expo.get_str() + ": character sum gives " +
                             describe(amp) + ", product form gives " +
                             describe(it->second);
                break;
            }
        }
        if (rep.detail.empty())
            for (const auto& [expo, amp] : want.terms())
                if (!sum.terms().count(expo)) {
                    rep.detail = "missing exponent " + expo.get_str() +
                                 " with amplitude " + describe(amp);
                    break;
                }
    }
    for (const auto& [expo, amp] : sum.terms()) {
        auto q = amp.as_rational();
        if (!q) {
            rep.pass = false;
            if (rep.detail.empty())
                rep.detail = "grouped amplitude at exponent " + expo.get_str() +
                             " is not rational";
            break;
        }
        rep.terms.emplace_back(expo, *q);
    }
    return rep;
}

VerifyReport verify_type(const std::string& name, const std::string& data_dir) {
    auto [type, rows] = load_type(name, data_dir);
    sanity_checks(type, rows);
    return verify_type(type, rows);
}

}  // namespace coxcount
