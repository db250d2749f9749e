#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "coxcount/counting.hpp"
#include "coxcount/exceptional.hpp"

using namespace coxcount;

namespace {

std::string data_dir() {
    if (const char* d = std::getenv("COXCOUNT_DATA")) return d;
    return "data/exceptional";
}

// drop a modified copy of one table into a temp directory
std::string write_fixture(const std::string& name, const std::string& contents) {
    auto dir = std::filesystem::temp_directory_path() / "coxcount_test_fixture";
    std::filesystem::create_directories(dir);
    auto path = dir / (name + ".tsv");
    std::ofstream out(path);
    out << contents;
    return dir.string();
}

}  // namespace

TEST_CASE("expression parser accepts the table grammar") {
    CHECK(parse_cyclotomic("0") == Cyclo());
    CHECK(parse_cyclotomic("7") == Cyclo(7));
    CHECK(parse_cyclotomic("-1") == Cyclo(-1));
    CHECK(parse_cyclotomic("z3") == Cyclo::zeta(3, 1));
    CHECK(parse_cyclotomic("z12^7") == Cyclo::zeta(12, 7));
    CHECK(parse_cyclotomic("2*z5^3") == Cyclo::zeta(5, 3) * Rat(2));
    CHECK(parse_cyclotomic("z3+z3^2") == Cyclo(-1));
    CHECK(parse_cyclotomic("-z15^2-z15^8") ==
          -Cyclo::zeta(15, 2) - Cyclo::zeta(15, 8));
    CHECK(parse_cyclotomic("1+z4-z4") == Cyclo(1));
    CHECK(parse_cyclotomic(" 2 + 3*z7^2 ") == Cyclo(2) + Cyclo::zeta(7, 2) * Rat(3));
    CHECK(parse_cyclotomic("z2") == Cyclo(-1));
    CHECK(parse_cyclotomic("z1") == Cyclo(1));
}

TEST_CASE("expression parser rejects malformed input with a position") {
    for (const char* bad : {"", "z", "2*", "1+", "^3", "+1", "z3^", "2**z3", "z3 z3",
                            "1 2", "x3", "z0"}) {
        CHECK_THROWS_AS(parse_cyclotomic(bad), parse_error);
    }
    try {
        parse_cyclotomic("1+z4$");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("rendered values parse back to themselves") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> order(1, 15);
    for (int trial = 0; trial < 200; ++trial) {
        Cyclo v(coef(rng));
        for (int terms = 0; terms < 3; ++terms) {
            int m = order(rng);
            v += Cyclo::zeta(m, std::uniform_int_distribution<int>(0, m - 1)(rng)) *
                 Rat(coef(rng));
        }
        CHECK(parse_cyclotomic(v.str()) == v);
    }
}

TEST_CASE("type names and aliases") {
    CHECK(all_type_names().size() == 26);
    CHECK(canonical_type_name("G4") == "G4");
    CHECK(canonical_type_name("g34") == "G34");
    CHECK(canonical_type_name("H3") == "G23");
    CHECK(canonical_type_name("F4") == "G28");
    CHECK(canonical_type_name("H4") == "G30");
    CHECK(canonical_type_name("E6") == "G35");
    CHECK(canonical_type_name("e7") == "G36");
    CHECK(canonical_type_name("E8") == "G37");
    CHECK_THROWS(canonical_type_name("G7"));   // not well-generated
    CHECK_THROWS(canonical_type_name("G31"));  // not well-generated
    CHECK_THROWS(canonical_type_name("B17"));
}

TEST_CASE("loading the smallest table") {
    auto [type, rows] = load_type("G4", data_dir());
    CHECK(type.name == "G4");
    CHECK(type.order == 24);
    CHECK(type.rank() == 2);
    CHECK(type.degrees == std::vector<long>({4, 6}));
    CHECK(type.codegrees == std::vector<long>({0, 2}));
    CHECK(type.coxeter_number() == 6);
    CHECK(type.reflection_count() == 8);
    CHECK(type.hyperplane_count() == 4);
    CHECK(rows.size() == 7);
    CHECK(rows[0].deg == 1);
    CHECK(rows[0].chi_c == Cyclo(1));
    CHECK(rows[0].chi_r == Cyclo(8));
    CHECK_NOTHROW(sanity_checks(type, rows));
}

TEST_CASE("well-known real and complex types carry their textbook invariants") {
    struct Known {
        const char* name;
        long order;
        std::vector<long> degrees;
    };
    std::vector<Known> known = {{"H3", 120, {2, 6, 10}},
                                {"F4", 1152, {2, 6, 8, 12}},
                                {"H4", 14400, {2, 12, 20, 30}},
                                {"E6", 51840, {2, 5, 6, 8, 9, 12}},
                                {"E7", 2903040, {2, 6, 8, 10, 12, 14, 18}},
                                {"E8", 696729600, {2, 8, 12, 14, 18, 20, 24, 30}},
                                {"G25", 648, {6, 9, 12}},
                                {"G32", 155520, {12, 18, 24, 30}}};
    for (const auto& k : known) {
        auto [type, rows] = load_type(k.name, data_dir());
        CHECK(type.order == k.order);
        CHECK(type.degrees == k.degrees);
    }
    auto [e8, e8rows] = load_type("E8", data_dir());
    CHECK(e8.reflection_count() == 120);
    CHECK(e8.hyperplane_count() == 120);
}

TEST_CASE("every tabulated type passes the generating-function comparison") {
    for (const auto& name : all_type_names()) {
        VerifyReport rep = verify_type(name, data_dir());
        CHECK_MESSAGE(rep.pass, name, ": ", rep.detail);
        CHECK(rep.type == name);
        CHECK(rep.refl + rep.corefl == rep.n * load_type(name, data_dir()).first.coxeter_number());
        CHECK(!rep.terms.empty());
        // terms are the binomial expansion of an n-th power: n+1 of them
        CHECK(rep.terms.size() == static_cast<size_t>(rep.n) + 1);
    }
}

TEST_CASE("the rank-two check reproduces the hand computation") {
    VerifyReport rep = verify_type("G4", data_dir());
    REQUIRE(rep.pass);
    REQUIRE(rep.terms.size() == 3);
    CHECK(rep.terms[0].first == Rat(-4));
    CHECK(rep.terms[0].second == make_rat(1, 24));
    CHECK(rep.terms[1].first == Rat(2));
    CHECK(rep.terms[1].second == make_rat(-1, 12));
    CHECK(rep.terms[2].first == Rat(8));
    CHECK(rep.terms[2].second == make_rat(1, 24));
}

TEST_CASE("a perturbed reflection column is caught") {
    auto [type, rows] = load_type("G4", data_dir());
    rows[0].chi_r = rows[0].chi_r + Cyclo(1);
    CHECK_NOTHROW(sanity_checks(type, rows));  // degrees untouched
    VerifyReport rep = verify_type(type, rows);
    CHECK(!rep.pass);
    CHECK(!rep.detail.empty());
}

TEST_CASE("a perturbed Coxeter column is caught") {
    auto [type, rows] = load_type("G4", data_dir());
    rows[1].chi_c = rows[1].chi_c * Cyclo::zeta(3, 1);
    VerifyReport rep = verify_type(type, rows);
    CHECK(!rep.pass);
}

TEST_CASE("a perturbed degree column fails the completeness sum") {
    auto [type, rows] = load_type("G4", data_dir());
    rows[6].deg = 4;
    CHECK_THROWS(sanity_checks(type, rows));
}

TEST_CASE("the on-disk negative-control fixture fails verification") {
    std::string bad =
        "name=G4\norder=24\ndegrees=4,6\ncodegrees=0,2\nirreducibles=7\n"
        "1\t0\t1\t9\n"  // chi_r bumped from 8
        "1\t4\tz3^2\t-4\n1\t8\tz3\t-4\n2\t1\tz3\t4\n2\t3\tz3^2\t4\n2\t5\t1\t-8\n"
        "3\t2\t0\t0\n";
    std::string dir = write_fixture("G4", bad);
    VerifyReport rep = verify_type("G4", dir);
    CHECK(!rep.pass);
    CHECK(!rep.detail.empty());
}

TEST_CASE("malformed tables are rejected at load time") {
    CHECK_THROWS(load_type("G4", "/nonexistent/dir"));
    // row count disagrees with the header
    CHECK_THROWS(load_type("G4", write_fixture("G4", "name=G4\norder=24\ndegrees=4,6\n"
                                                     "codegrees=0,2\nirreducibles=3\n"
                                                     "1\t0\t1\t8\n")));
    // degree/codegree pairing violated
    CHECK_THROWS(load_type("G4", write_fixture("G4", "name=G4\norder=24\ndegrees=4,6\n"
                                                     "codegrees=1,2\nirreducibles=1\n"
                                                     "1\t0\t1\t8\n")));
    // degree product disagrees with the order
    CHECK_THROWS(load_type("G4", write_fixture("G4", "name=G4\norder=25\ndegrees=4,6\n"
                                                     "codegrees=0,2\nirreducibles=1\n"
                                                     "1\t0\t1\t8\n")));
}

TEST_CASE("structural validation of the derived type invariants") {
    ExceptionalType t;
    t.name = "T";
    t.order = 24;
    t.degrees = {4, 6};
    t.codegrees = {0, 2};
    CHECK_NOTHROW(t.validate());
    auto broken = t;
    broken.codegrees = {2, 0};
    CHECK_THROWS(broken.validate());
    broken = t;
    broken.order = 23;
    CHECK_THROWS(broken.validate());
    broken = t;
    broken.degrees = {6, 4};
    CHECK_THROWS(broken.validate());
}

TEST_CASE("the closed form built from raw invariants matches the spec-backed one") {
    auto spec = GroupSpec::gr1n(3, 2);
    CHECK(closed_form_egf(spec) ==
          closed_form_egf(spec.order(), spec.rank(), spec.reflection_count(),
                          spec.hyperplane_count()));
}
