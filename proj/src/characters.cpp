#include "coxcount/characters.hpp"

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

long exponent_param(const GroupSpec& spec, const Rat& zeta_exp) {
    validate_primitive_exponent(spec, zeta_exp);
    return zeta_exp.get_num().get_si();
}

std::vector<CharRecord> symmetric_records(int n) {
    std::vector<CharRecord> out;
    for (int k = 0; k < n; ++k) {
        CharRecord rec;
        rec.label = "hook(" + std::to_string(n) + "," + std::to_string(k) + ")";
        rec.dim = binom(n - 1, k);
        rec.chi_c_inv = Cyclo(k % 2 == 0 ? 1L : -1L);
        rec.chi_r_norm = Cyclo(make_rat(static_cast<long>(n) * (n - 2 * k - 1), 2));
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CharRecord> cyclic_records(int r, long a) {
    std::vector<CharRecord> out;
    for (int j = 0; j < r; ++j) {
        CharRecord rec;
        rec.label = "linear(" + std::to_string(j) + ")";
        rec.dim = 1;
        rec.chi_c_inv = Cyclo::zeta(r, -static_cast<long>(j) * a);
        Cyclo chi_r;
        for (int w = 1; w < r; ++w) chi_r += Cyclo::zeta(r, static_cast<long>(j) * w);
        rec.chi_r_norm = chi_r.canonicalized();
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CharRecord> gr1n_records(int r, int n, long a) {
    std::vector<CharRecord> out;
    for (int q = 0; q < r; ++q) {
        // sum_{l=1}^{r-1} n * zeta_r^{q l}, evaluated once per position
        Cyclo diag_part;
        for (int l = 1; l < r; ++l)
            diag_part += Cyclo::zeta(r, static_cast<long>(q) * l) * Rat(n);
        for (int k = 0; k < n; ++k) {
            CharRecord rec;
            rec.label = "ghook(" + std::to_string(n) + "," + std::to_string(k) + "," +
                        std::to_string(q) + ")";
            rec.dim = binom(n - 1, k);
            rec.chi_c_inv = Cyclo::zeta(r, -static_cast<long>(q) * a) *
                            Rat(k % 2 == 0 ? 1 : -1);
            rec.chi_r_norm =
                (diag_part +
                 Rat(make_rat(static_cast<long>(n) * r * (n - 2 * k - 1), 2)))
                    .canonicalized();
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::vector<CharRecord> grrn_records(int r, int n, long a) {
    if (n <= 2)
        throw std::invalid_argument(
            "record list for G(r,r,n) needs n > 2; the dihedral case has its own "
            "closed form");
    std::vector<CharRecord> out;
    long rb2 = static_cast<long>(r) * n * (n - 1) / 2;

    CharRecord triv;
    triv.label = "row(" + std::to_string(n) + ")";
    triv.dim = 1;
    triv.chi_c_inv = Cyclo(1L);
    triv.chi_r_norm = Cyclo(Rat(rb2));
    out.push_back(std::move(triv));

    CharRecord sgn;
    sgn.label = "column(" + std::to_string(n) + ")";
    sgn.dim = 1;
    sgn.chi_c_inv = Cyclo(n % 2 == 0 ? 1L : -1L);
    sgn.chi_r_norm = Cyclo(Rat(-rb2));
    out.push_back(std::move(sgn));

    for (int k = 1; k <= n - 3; ++k) {
        CharRecord rec;
        rec.label = "quasihook(" + std::to_string(n) + "," + std::to_string(k) + ")";
        rec.dim = Int(n - 2 - k) * k * binom(n, k + 1) / (n - 1);
        if (rec.dim * (n - 1) != Int(n - 2 - k) * k * binom(n, k + 1))
            throw std::logic_error("quasi-hook dimension is not integral");
        rec.chi_c_inv = Cyclo(k % 2 == 0 ? 1L : -1L);
        rec.chi_r_norm =
            Cyclo(make_rat(static_cast<long>(r) * (n - 1) * (n - 2 - 2 * k), 2));
        out.push_back(std::move(rec));
    }

    for (int j = 1; j < r; ++j)
        for (int k = 0; k <= n - 2; ++k) {
            CharRecord rec;
            rec.label = "hookbox(" + std::to_string(n) + "," + std::to_string(k) + "," +
                        std::to_string(j) + ")";
            rec.dim = Int(n) * binom(n - 2, k);
            // the size-1 block of the inverse Coxeter element carries weight +a
            rec.chi_c_inv = Cyclo::zeta(r, static_cast<long>(j) * a) *
                            Rat(k % 2 == 0 ? 1 : -1);
            rec.chi_r_norm =
                Cyclo(make_rat(static_cast<long>(r) * (n - 1) * (n - 2 * k - 2), 2));
            out.push_back(std::move(rec));
        }
    return out;
}

}  // namespace

std::vector<CharRecord> nonvanishing_records(const GroupSpec& spec, const Rat& zeta_exp) {
    long a = exponent_param(spec, zeta_exp);
    switch (spec.family) {
        case Family::Symmetric: return symmetric_records(spec.n);
        case Family::Cyclic: return cyclic_records(spec.r, a);
        case Family::GR1N: return gr1n_records(spec.r, spec.n, a);
        case Family::GRRN: return grrn_records(spec.r, spec.n, a);
    }
    throw std::logic_error("unknown family");
}

std::vector<CharRecord> nonvanishing_records(const GroupSpec& spec) {
    return nonvanishing_records(spec, make_rat(1, spec.coxeter_number()));
}

Cyclo reference_char_gr1n(const GroupSpec& spec, const PartitionVector& labels,
                          const Element& w, size_t cap) {
    if (spec.family != Family::GR1N && spec.family != Family::Cyclic)
        throw std::invalid_argument("reference evaluator is defined for G(r,1,n)");
    int r = spec.r, n = spec.n;
    if (static_cast<int>(labels.size()) != r)
        throw std::invalid_argument("need one partition per root-of-unity index");
    std::vector<int> block_of(n), block_start(r, 0);
    {
        int pos = 0;
        for (int l = 0; l < r; ++l) {
            block_start[l] = pos;
            int kl = partition_size(labels[l]);
            for (int i = 0; i < kl; ++i) block_of[pos++] = l;
        }
        if (pos != n) throw std::invalid_argument("total label size mismatch");
    }
    size_t total = element_space_size(spec, cap);

    // accumulate integer character products bucketed by the total
    // zeta_r-exponent, so only r cyclotomic operations happen at the end
    std::vector<Int> bucket(r, Int(0));
    for (size_t si = 0; si < total; ++si) {
        Element s = element_at(spec, si);
        Element u = conjugate(spec, inverse(spec, s), w);  // s^{-1} w s
        bool in_block = true;
        for (int i = 0; i < n && in_block; ++i)
            if (block_of[u.perm[i]] != block_of[i]) in_block = false;
        if (!in_block) continue;
        long long prod = 1;
        long e = 0;
        for (int l = 0; l < r && prod != 0; ++l) {
            int start = block_start[l];
            int kl = partition_size(labels[l]);
            if (kl == 0) continue;
            // cycle type of the permutation restricted to the block
            CycleType ct;
            std::vector<bool> seen(kl, false);
            long wsum = 0;
            for (int i = 0; i < kl; ++i) {
                wsum += u.weights[start + i];
                if (seen[i]) continue;
                int len = 0, j = i;
                while (!seen[j]) {
                    seen[j] = true;
                    j = u.perm[start + j] - start;
                    ++len;
                }
                ct.push_back(len);
            }
            std::sort(ct.begin(), ct.end(), std::greater<int>());
            prod *= mn_char(labels[l], ct);
            e += static_cast<long>(l) * wsum;
        }
        if (prod != 0) bucket[((e % r) + r) % r] += static_cast<long>(prod);
    }

    Int block_order = 1;
    for (int l = 0; l < r; ++l) {
        int kl = partition_size(labels[l]);
        for (int i = 2; i <= kl; ++i) block_order *= i;
        for (int i = 0; i < kl; ++i) block_order *= r;
    }
    Cyclo sum;
    for (int e = 0; e < r; ++e) {
        if (bucket[e] == 0) continue;
        sum += Cyclo::zeta(r, e) * Rat(bucket[e]);
    }
    Rat inv_b(Int(1), block_order);
    inv_b.canonicalize();
    return (sum * inv_b).canonicalized();
}

}  // namespace coxcount
