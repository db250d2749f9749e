#pragma once

#include "coxcount/characters.hpp"
#include "coxcount/exppoly.hpp"
#include "coxcount/groups.hpp"

namespace coxcount {

struct Caps {
    size_t enum_cap = 1'000'000;
    int max_len = 12;
    unsigned long long step_ops = 10'000'000;  // |W| * |R| budget per DP step
};

struct CountResult {
    int len = 0;
    Int count;
    std::string method;
};

// Number of length-ell reflection tuples multiplying to target, by dynamic
// programming over the group algebra: f_{j+1}(w) = sum_tau f_j(w tau^{-1}).
CountResult brute_count(const GroupSpec& spec, const Element& target, int ell,
                        const Caps& caps = {});

// Same count for the canonical Coxeter element of zeta_exp, via the finite
// character sum (1/|W|) sum dim * (chi(R)/dim)^ell * chi(c^{-1}); errors if
// the exact result is not a non-negative integer.
CountResult frobenius_count(const GroupSpec& spec, int ell, const Rat& zeta_exp);
CountResult frobenius_count(const GroupSpec& spec, int ell);

// (1/|W|) (exp(t|R|/n) - exp(-t|R*|/n))^n, binomially expanded; n = rank.
ExpPoly closed_form_egf(const GroupSpec& spec);
ExpPoly closed_form_egf(const Int& order, int n, long refl, long corefl);

// (1/|W|) sum dim * chi(c^{-1}) * exp(t chi(R)/dim) with terms grouped by
// exponent; every grouped amplitude must come out rational.
ExpPoly frobenius_egf(const GroupSpec& spec, const Rat& zeta_exp);
ExpPoly frobenius_egf(const GroupSpec& spec);

// ell! * [t^ell] as an exact integer (errors when not integral).
Int egf_count(const ExpPoly& p, int ell);

// minimal-length factorization count n! h^n / |W|
Int minimal_count(const GroupSpec& spec);

// closed forms: ((r-1)^ell - (-1)^ell)/r,  and  r^{ell-1} for even ell >= 2
Int cyclic_count(int r, int ell);
Int dihedral_count(int r, int ell);

}  // namespace coxcount
