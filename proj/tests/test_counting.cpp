#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "coxcount/counting.hpp"

using namespace coxcount;

namespace {

// independent witness: walk every reflection tuple and test the product
Int tuple_oracle(const GroupSpec& spec, const Element& target, int ell) {
    auto refl = reflections(spec);
    Int hits = 0;
    std::vector<Element> partial{identity(spec)};
    std::function<void(int)> walk = [&](int depth) {
        if (depth == ell) {
            if (partial.back() == target) ++hits;
            return;
        }
        for (const auto& t : refl) {
            partial.push_back(multiply(spec, partial.back(), t.elt));
            walk(depth + 1);
            partial.pop_back();
        }
    };
    walk(0);
    return hits;
}

Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

const std::vector<GroupSpec>& small_fleet() {
    static const std::vector<GroupSpec> specs = {
        GroupSpec::symmetric(3),  GroupSpec::symmetric(4), GroupSpec::symmetric(5),
        GroupSpec::gr1n(2, 2),    GroupSpec::gr1n(2, 3),   GroupSpec::gr1n(3, 2),
        GroupSpec::gr1n(4, 2),    GroupSpec::grrn(2, 3),   GroupSpec::grrn(3, 3),
        GroupSpec::grrn(2, 4),    GroupSpec::grrn(5, 2),   GroupSpec::grrn(6, 2),
        GroupSpec::cyclic(3),     GroupSpec::cyclic(7)};
    return specs;
}

}  // namespace

TEST_CASE("counts match exhaustive tuple enumeration on tiny groups") {
    struct Case {
        GroupSpec spec;
        int max_len;
    };
    std::vector<Case> cases = {{GroupSpec::symmetric(3), 5},
                               {GroupSpec::gr1n(2, 2), 4},
                               {GroupSpec::grrn(5, 2), 4},
                               {GroupSpec::grrn(3, 3), 3},
                               {GroupSpec::cyclic(4), 5}};
    for (const auto& [spec, max_len] : cases) {
        Element c = canonical_coxeter(spec);
        for (int ell = 0; ell <= max_len; ++ell) {
            Int direct = tuple_oracle(spec, c, ell);
            CHECK(brute_count(spec, c, ell).count == direct);
            CHECK(egf_count(closed_form_egf(spec), ell) == direct);
        }
    }
}

TEST_CASE("derived fixed points of the count table") {
    // these two were computed by tuple enumeration before being frozen here
    auto s3 = GroupSpec::symmetric(3);
    CHECK(tuple_oracle(s3, canonical_coxeter(s3), 4) == 27);
    CHECK(brute_count(s3, canonical_coxeter(s3), 4).count == 27);
    CHECK(frobenius_count(s3, 4).count == 27);

    auto s4 = GroupSpec::symmetric(4);
    CHECK(tuple_oracle(s4, canonical_coxeter(s4), 5) == 640);
    CHECK(brute_count(s4, canonical_coxeter(s4), 5).count == 640);
    CHECK(frobenius_count(s4, 5).count == 640);

    CHECK(brute_count(s4, canonical_coxeter(s4), 3).count == 16);
}

TEST_CASE("minimal-length counts across the fleet") {
    for (const auto& spec : small_fleet()) {
        Element c = canonical_coxeter(spec);
        Int minimal = brute_count(spec, c, spec.rank()).count;
        CHECK(minimal == minimal_count(spec));
        CHECK(minimal > 0);
        if (spec.rank() >= 1) CHECK(brute_count(spec, c, spec.rank() - 1).count == 0);
    }
    CHECK(minimal_count(GroupSpec::symmetric(4)) == 16);
    CHECK(minimal_count(GroupSpec::gr1n(2, 2)) == 4);
    CHECK(minimal_count(GroupSpec::grrn(3, 3)) == 24);
    CHECK(minimal_count(GroupSpec::grrn(8, 2)) == 8);
}

TEST_CASE("labelled-tree specialization of the minimal count") {
    long expect[] = {3, 16, 125, 1296};
    for (int N = 3; N <= 6; ++N) {
        auto spec = GroupSpec::symmetric(N);
        CHECK(minimal_count(spec) == expect[N - 3]);
        CHECK(brute_count(spec, canonical_coxeter(spec), N - 1).count == expect[N - 3]);
    }
}

TEST_CASE("three engines agree to length rank plus six") {
    for (const auto& spec : small_fleet()) {
        bool dihedral = spec.family == Family::GRRN && spec.n == 2;
        Element c = canonical_coxeter(spec);
        ExpPoly closed = closed_form_egf(spec);
        for (int ell = 0; ell <= spec.rank() + 6; ++ell) {
            Int brute = brute_count(spec, c, ell).count;
            CHECK(egf_count(closed, ell) == brute);
            if (!dihedral) CHECK(frobenius_count(spec, ell).count == brute);
            if (spec.family == Family::Cyclic) CHECK(cyclic_count(spec.r, ell) == brute);
            if (dihedral) CHECK(dihedral_count(spec.r, ell) == brute);
        }
    }
}

TEST_CASE("the character sum collapses to the product form symbolically") {
    for (const auto& spec : small_fleet()) {
        if (spec.family == Family::GRRN && spec.n == 2) continue;
        CHECK(frobenius_egf(spec) == closed_form_egf(spec));
    }
}

TEST_CASE("closed generating functions for the classical families") {
    // symmetric: (1/N!) (exp(tN/2) - exp(-tN/2))^{N-1}
    for (int N = 2; N <= 6; ++N) {
        ExpPoly base = ExpPoly::exponential(make_rat(N, 2), Cyclo(1)) -
                       ExpPoly::exponential(make_rat(-N, 2), Cyclo(1));
        ExpPoly expect = base.pow(N - 1).scaled(Rat(1) / Rat(factorial(N)));
        CHECK(expect == closed_form_egf(GroupSpec::symmetric(N)));
    }
    // cyclic: (1/r) (exp((r-1)t) - exp(-t))
    for (int r = 2; r <= 10; ++r) {
        ExpPoly expect = (ExpPoly::exponential(Rat(r - 1), Cyclo(1)) -
                          ExpPoly::exponential(Rat(-1), Cyclo(1)))
                             .scaled(make_rat(1, r));
        CHECK(expect == closed_form_egf(GroupSpec::cyclic(r)));
        CHECK(expect == frobenius_egf(GroupSpec::cyclic(r)));
    }
    // dihedral: (1/2r) (exp(tr/2) - exp(-tr/2))^2
    for (int r = 2; r <= 8; ++r) {
        ExpPoly base = ExpPoly::exponential(make_rat(r, 2), Cyclo(1)) -
                       ExpPoly::exponential(make_rat(-r, 2), Cyclo(1));
        ExpPoly expect = base.pow(2).scaled(make_rat(1, 2 * r));
        CHECK(expect == closed_form_egf(GroupSpec::grrn(r, 2)));
        for (int ell = 0; ell <= 8; ++ell)
            CHECK(egf_count(expect, ell) == dihedral_count(r, ell));
    }
}

TEST_CASE("hand values of the family closed forms") {
    CHECK(cyclic_count(3, 2) == 1);  // zeta^2 * zeta^2 is the only pair
    CHECK(cyclic_count(3, 1) == 1);
    CHECK(cyclic_count(2, 5) == 1);
    CHECK(cyclic_count(5, 3) == 13);  // (4^3 + 1)/5
    CHECK(dihedral_count(5, 2) == 5);
    CHECK(dihedral_count(5, 4) == 125);
    CHECK(dihedral_count(4, 6) == 1024);
    CHECK(dihedral_count(7, 3) == 0);
    CHECK(dihedral_count(7, 0) == 0);
}

TEST_CASE("counts vanish off the forced parity when reflections all have determinant -1") {
    for (const auto& spec :
         {GroupSpec::symmetric(4), GroupSpec::symmetric(5), GroupSpec::gr1n(2, 2),
          GroupSpec::gr1n(2, 3), GroupSpec::grrn(3, 3), GroupSpec::grrn(2, 4),
          GroupSpec::grrn(7, 2)}) {
        Element c = canonical_coxeter(spec);
        for (int ell = 0; ell <= spec.rank() + 5; ++ell)
            if ((ell - spec.rank()) % 2 != 0)
                CHECK(brute_count(spec, c, ell).count == 0);
    }
}

TEST_CASE("counting is invariant under conjugation and inversion of the target") {
    std::mt19937 rng(17);
    for (const auto& spec : {GroupSpec::symmetric(4), GroupSpec::gr1n(3, 2),
                             GroupSpec::gr1n(4, 2), GroupSpec::grrn(3, 3)}) {
        Element c = canonical_coxeter(spec);
        size_t size = element_space_size(spec, 10'000);
        std::uniform_int_distribution<size_t> pick(0, size - 1);
        for (int ell = spec.rank(); ell <= spec.rank() + 2; ++ell) {
            Int base = brute_count(spec, c, ell).count;
            CHECK(brute_count(spec, inverse(spec, c), ell).count == base);
            for (int trial = 0; trial < 3; ++trial) {
                Element g = element_at(spec, pick(rng));
                CHECK(brute_count(spec, conjugate(spec, g, c), ell).count == base);
            }
        }
    }
}

TEST_CASE("every primitive exponent yields the same counts") {
    struct Case {
        GroupSpec spec;
        std::vector<long> numerators;
    };
    std::vector<Case> cases = {{GroupSpec::gr1n(3, 2), {1, 5}},
                               {GroupSpec::gr1n(4, 2), {1, 3, 5, 7}},
                               {GroupSpec::grrn(5, 2), {1, 2, 3, 4}}};
    for (const auto& [spec, numerators] : cases) {
        long h = spec.coxeter_number();
        bool dihedral = spec.family == Family::GRRN && spec.n == 2;
        for (int ell = 0; ell <= 8; ++ell) {
            Int base = -1;
            for (long a : numerators) {
                Rat q = make_rat(a, h);
                Int count = brute_count(spec, canonical_coxeter(spec, q), ell).count;
                if (base < 0) base = count;
                CHECK(count == base);
                if (!dihedral) CHECK(frobenius_count(spec, ell, q).count == base);
            }
        }
    }
}

TEST_CASE("series coefficients that are not counts are rejected") {
    ExpPoly half = ExpPoly::exponential(make_rat(1, 2), Cyclo(1));
    CHECK(egf_count(half, 0) == 1);
    CHECK_THROWS_AS(egf_count(half, 1), std::logic_error);
    CHECK_THROWS_AS(egf_count(half, -1), std::invalid_argument);
}

TEST_CASE("resource caps turn into typed errors") {
    auto s5 = GroupSpec::symmetric(5);
    Element c = canonical_coxeter(s5);
    Caps tight;
    tight.enum_cap = 10;
    CHECK_THROWS_AS(brute_count(s5, c, 4, tight), cap_exceeded);
    Caps short_len;
    short_len.max_len = 3;
    CHECK_THROWS_AS(brute_count(s5, c, 4, short_len), cap_exceeded);
    Caps no_ops;
    no_ops.step_ops = 5;
    CHECK_THROWS_AS(brute_count(s5, c, 4, no_ops), cap_exceeded);
}

TEST_CASE("length caps leave valid lengths alone") {
    auto s4 = GroupSpec::symmetric(4);
    Caps caps;
    caps.max_len = 5;
    CHECK(brute_count(s4, canonical_coxeter(s4), 5, caps).count == 640);
}
