#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcount/cyclotomic.hpp"
#include "coxcount/partitions.hpp"

namespace coxcount {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family { Symmetric, GR1N, GRRN, Cyclic };

// One of the infinite families of irreducible well-generated reflection
// groups, realized as n x n monomial matrices whose nonzero entries are
// r-th roots of unity:
//   Symmetric(N)  permutation matrices           (rank N-1)
//   GR1N(r,n)     all weight vectors             (rank n)
//   GRRN(r,n)     weight sums divisible by r     (rank n; n=2 is dihedral)
//   Cyclic(r)     1 x 1 case of GR1N             (rank 1)
struct GroupSpec {
    Family family;
    int r;  // root-of-unity order of the entries (1 for Symmetric)
    int n;  // matrix size

    static GroupSpec symmetric(int N);
    static GroupSpec gr1n(int r, int n);
    static GroupSpec grrn(int r, int n);
    static GroupSpec cyclic(int r);

    int rank() const;
    Int order() const;
    long reflection_count() const;   // |R|
    long hyperplane_count() const;   // |R*|
    std::vector<long> degrees() const;    // ascending
    std::vector<long> codegrees() const;  // descending
    long coxeter_number() const;          // largest degree
    std::string name() const;

    bool operator==(const GroupSpec& o) const = default;
};

// sigma wr (i_1,...,i_n): the matrix with entry zeta_r^{weights[l]} at
// (l, perm[l]); 0-based throughout
struct Element {
    std::vector<int> perm;
    std::vector<int> weights;

    bool operator==(const Element& o) const = default;
    bool operator<(const Element& o) const {
        return perm != o.perm ? perm < o.perm : weights < o.weights;
    }
};

Element identity(const GroupSpec& spec);
bool in_group(const GroupSpec& spec, const Element& a);
Element multiply(const GroupSpec& spec, const Element& a, const Element& b);
Element inverse(const GroupSpec& spec, const Element& a);
Element conjugate(const GroupSpec& spec, const Element& g, const Element& a);  // g a g^{-1}

std::vector<std::vector<Cyclo>> to_matrix(const GroupSpec& spec, const Element& a);

// dense index in [0, |W|): Lehmer code of perm * (#weight vectors) + mixed-radix weights
size_t element_index(const GroupSpec& spec, const Element& a);
Element element_at(const GroupSpec& spec, size_t index);
size_t element_space_size(const GroupSpec& spec, size_t cap);

std::vector<Element> elements(const GroupSpec& spec, size_t cap = 1'000'000);

struct Reflection {
    Element elt;
    int cls;  // 0 for the non-diagonal class, l for the diagonal class of weight l
};

std::vector<Reflection> reflections(const GroupSpec& spec);

// cycle lengths of a 0-based one-line permutation, sorted descending
CycleType cycle_type(const std::vector<int>& perm);

// n eigenvalue angle-fractions in [0,1): a cycle of length k carrying total
// weight s contributes the k solutions of x^k = zeta_r^s
std::vector<Rat> eigenvalue_exponents(const GroupSpec& spec, const Element& a);

// dimension of the fixed space = number of cycles whose weight sum is 0 mod r
int fixed_space_dim(const GroupSpec& spec, const Element& a);
bool is_reflection(const GroupSpec& spec, const Element& a);

// true iff some eigenvalue is a primitive h-th root of unity
bool is_coxeter(const GroupSpec& spec, const Element& a);

// zeta_exp must be a/h in lowest terms with denominator exactly h
void validate_primitive_exponent(const GroupSpec& spec, const Rat& zeta_exp);

std::vector<Element> coxeter_class(const GroupSpec& spec, const Rat& zeta_exp,
                                   size_t cap = 1'000'000);

Element canonical_coxeter(const GroupSpec& spec, const Rat& zeta_exp);
Element canonical_coxeter(const GroupSpec& spec);  // zeta_exp = 1/h

}  // namespace coxcount
