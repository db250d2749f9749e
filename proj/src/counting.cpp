#include "coxcount/counting.hpp"

#include <algorithm>

namespace coxcount {

namespace {

Int binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

}  // namespace

CountResult brute_count(const GroupSpec& spec, const Element& target, int ell,
                        const Caps& caps) {
    if (!in_group(spec, target)) throw std::invalid_argument("target not in the group");
    if (ell < 0) throw std::invalid_argument("negative length");
    if (ell > caps.max_len)
        throw cap_exceeded("length " + std::to_string(ell) + " exceeds cap " +
                           std::to_string(caps.max_len));
    size_t total = element_space_size(spec, caps.enum_cap);
    auto refl = reflections(spec);
    if (static_cast<unsigned long long>(total) * refl.size() > caps.step_ops)
        throw cap_exceeded("|W| * |R| exceeds per-step operation cap");

    // index table: column tau maps v -> v * tau
    std::vector<std::vector<size_t>> step(refl.size(), std::vector<size_t>(total));
    for (size_t v = 0; v < total; ++v) {
        Element ev = element_at(spec, v);
        for (size_t t = 0; t < refl.size(); ++t)
            step[t][v] = element_index(spec, multiply(spec, ev, refl[t].elt));
    }

    std::vector<Int> f(total, Int(0)), g(total);
    f[element_index(spec, identity(spec))] = 1;
    for (int j = 0; j < ell; ++j) {
        std::fill(g.begin(), g.end(), Int(0));
        for (size_t t = 0; t < refl.size(); ++t)
            for (size_t v = 0; v < total; ++v)
                if (f[v] != 0) g[step[t][v]] += f[v];
        f.swap(g);
    }
    return {ell, f[element_index(spec, target)], "brute"};
}

namespace {

ExpPoly grouped_frobenius(const GroupSpec& spec, const Rat& zeta_exp) {
    auto records = nonvanishing_records(spec, zeta_exp);
    Rat inv_w(Int(1), spec.order());
    inv_w.canonicalize();
    ExpPoly z;
    for (const auto& rec : records) {
        auto expo = rec.chi_r_norm.as_rational();
        if (!expo)
            throw std::logic_error("record " + rec.label +
                                   " has an irrational normalized reflection value");
        z.add_term(*expo, rec.chi_c_inv * Rat(rec.dim) * inv_w);
    }
    for (const auto& [e, a] : z.terms())
        if (!a.as_rational())
            throw std::logic_error("grouped amplitude is irrational at exponent " +
                                   e.get_str());
    return z;
}

}  // namespace

ExpPoly frobenius_egf(const GroupSpec& spec, const Rat& zeta_exp) {
    return grouped_frobenius(spec, zeta_exp);
}

ExpPoly frobenius_egf(const GroupSpec& spec) {
    return frobenius_egf(spec, make_rat(1, spec.coxeter_number()));
}

Int egf_count(const ExpPoly& p, int ell) {
    if (ell < 0) throw std::invalid_argument("negative length");
    Cyclo c = p.coefficient(static_cast<unsigned long>(ell));
    auto q = c.as_rational();
    if (!q) throw std::logic_error("series coefficient is irrational");
    if (q->get_den() != 1)
        throw std::logic_error("series coefficient is not an integer: " + q->get_str());
    return q->get_num();
}

CountResult frobenius_count(const GroupSpec& spec, int ell, const Rat& zeta_exp) {
    Int c = egf_count(frobenius_egf(spec, zeta_exp), ell);
    if (c < 0) throw std::logic_error("character sum produced a negative count");
    return {ell, c, "frobenius"};
}

CountResult frobenius_count(const GroupSpec& spec, int ell) {
    return frobenius_count(spec, ell, make_rat(1, spec.coxeter_number()));
}

ExpPoly closed_form_egf(const Int& order, int n, long refl, long corefl) {
    Rat inv_w(Int(1), order);
    inv_w.canonicalize();
    ExpPoly p;
    for (long k = 0; k <= n; ++k) {
        Rat expo(k * refl - (n - k) * corefl, n);
        expo.canonicalize();
        Rat amp = Rat(binom(n, k)) * inv_w;
        if ((n - k) % 2 != 0) amp = -amp;
        p.add_term(expo, Cyclo(amp));
    }
    return p;
}

ExpPoly closed_form_egf(const GroupSpec& spec) {
    return closed_form_egf(spec.order(), spec.rank(), spec.reflection_count(),
                           spec.hyperplane_count());
}

Int minimal_count(const GroupSpec& spec) {
    long n = spec.rank();
    Int num = 1;
    for (long i = 2; i <= n; ++i) num *= i;
    Int h(spec.coxeter_number());
    for (long i = 0; i < n; ++i) num *= h;
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                spec.order().get_mpz_t());
    if (rem != 0) throw std::logic_error("n! h^n is not divisible by |W|");
    return q;
}

Int cyclic_count(int r, int ell) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r - 1),
                  static_cast<unsigned long>(ell));
    p -= (ell % 2 == 0) ? 1 : -1;
    Int q, rem;
    Int rr(r);
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), rr.get_mpz_t());
    if (rem != 0) throw std::logic_error("cyclic closed form not divisible by r");
    return q;
}

Int dihedral_count(int r, int ell) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    if (ell <= 0 || ell % 2 != 0) return 0;
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r),
                  static_cast<unsigned long>(ell - 1));
    return p;
}

}  // namespace coxcount
