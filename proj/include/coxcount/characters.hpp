#pragma once

#include <string>
#include <vector>

#include "coxcount/groups.hpp"

namespace coxcount {

// One irreducible character's contribution to the reflection-factorization
// count: its dimension, its value at the inverse of the chosen Coxeter
// element, and its normalized value on the sum of all reflections.
struct CharRecord {
    std::string label;
    Int dim;
    Cyclo chi_c_inv;
    Cyclo chi_r_norm;  // chi(R) / dim

    Cyclo chi_r() const { return chi_r_norm * Rat(dim); }
};

// The characters that do not vanish on the inverse of the Coxeter element
// attached to zeta_exp = a/h, with closed-form data:
//   Symmetric(n): hooks
//   GR1N:         one-hook partition vectors, all positions
//   GRRN (n>2):   trivial/sign/quasi-hook/hook-box restrictions
//   Cyclic:       all linear characters
// GRRN with n == 2 is rejected; the dihedral count has its own closed form.
std::vector<CharRecord> nonvanishing_records(const GroupSpec& spec, const Rat& zeta_exp);
std::vector<CharRecord> nonvanishing_records(const GroupSpec& spec);  // a = 1

// Literal evaluation of the induced-character formula for G(r,1,n): averages
// the block-diagonal character of s^{-1} w s over all s that conjugate w into
// the block subgroup of shape (|lambda^(0)|, ..., |lambda^(r-1)|).  This is
// the correctness oracle for the closed forms above, not a fast path.
Cyclo reference_char_gr1n(const GroupSpec& spec, const PartitionVector& labels,
                          const Element& w, size_t cap = 5000);

}  // namespace coxcount
