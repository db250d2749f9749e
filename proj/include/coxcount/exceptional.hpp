#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxcount/exppoly.hpp"

namespace coxcount {

// Parses the root-of-unity expression grammar used by the data files:
//   expr := ['-'] term (('+'|'-') term)*
//   term := INT | [INT '*'] 'z' INT ['^' INT]
// e.g. "-z15^2-z15^8", "2*z3+1".  Whitespace is insignificant.
Cyclo parse_cyclotomic(const std::string& src);

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)),
          position(pos) {}
};

// One of the 26 irreducible well-generated exceptional types, described by
// its invariant degrees; everything else is derived.
struct ExceptionalType {
    std::string name;
    Int order;
    std::vector<long> degrees;    // ascending
    std::vector<long> codegrees;  // ascending

    int rank() const { return static_cast<int>(degrees.size()); }
    long coxeter_number() const { return degrees.back(); }
    long reflection_count() const;
    long hyperplane_count() const;
    void validate() const;  // product/pairing/count identities
};

// one row of a character table: dimension, smallest symmetric-power
// occurrence, value at a Coxeter element, value on the sum of reflections
struct CharRow {
    long deg = 0;
    long occ = 0;
    Cyclo chi_c;
    Cyclo chi_r;
};

std::string canonical_type_name(const std::string& name);  // resolves aliases
const std::vector<std::string>& all_type_names();

std::pair<ExceptionalType, std::vector<CharRow>> load_type(const std::string& name,
                                                           const std::string& data_dir);

// throws std::runtime_error when sum(deg^2) != |W|
void sanity_checks(const ExceptionalType& type, const std::vector<CharRow>& rows);

struct VerifyReport {
    std::string type;
    bool pass = false;
    int n = 0;
    Int order;
    long refl = 0;
    long corefl = 0;
    // grouped character-sum series: (exponent, rational amplitude)
    std::vector<std::pair<Rat, Rat>> terms;
    std::string detail;  // mismatch description when pass is false
};

// Builds the character-sum series sum deg/|W| * chi_c * exp(t chi_r/deg)
// and compares it, term by term, with the closed-form product built from
// (|W|, rank, |R|, |R*|).  The table stores values at c rather than c^{-1};
// the two factorization counts coincide because reversing a tuple and
// inverting each reflection is a bijection.
VerifyReport verify_type(const ExceptionalType& type, const std::vector<CharRow>& rows);
VerifyReport verify_type(const std::string& name, const std::string& data_dir);

}  // namespace coxcount
