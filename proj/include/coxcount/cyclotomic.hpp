#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace coxcount {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Monic m-th cyclotomic polynomial, coefficients low-to-high, length phi(m)+1.
// Computed by dividing x^m - 1 by the cyclotomic polynomials of proper divisors; memoized.
const std::vector<Rat>& cyclotomic_polynomial(unsigned long m);

unsigned long euler_phi(unsigned long m);

// Exact element of Q(zeta_m): dense coefficient vector in the power basis
// 1, zeta, ..., zeta^{phi(m)-1}, i.e. a polynomial reduced mod the m-th
// cyclotomic polynomial.  Values compare equal across orders by lifting to
// the lcm order.  Immutable value type.
class Cyclo {
  public:
    Cyclo() : order_(1), coeffs_(1, Rat(0)) {}
    explicit Cyclo(const Rat& q) : order_(1), coeffs_(1, q) {}
    explicit Cyclo(const Int& z) : order_(1), coeffs_(1, Rat(z)) {}
    explicit Cyclo(long v) : order_(1), coeffs_(1, Rat(v)) {}

    // zeta_m^k, stored at order m / gcd(m, k).
    static Cyclo zeta(unsigned long m, long k);

    unsigned long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    Cyclo operator*(const Rat& q) const;
    Cyclo operator+(const Rat& q) const { return *this + Cyclo(q); }

    // Negative exponents require a root of unity (checked); exponents are
    // reduced modulo the order of the torsion subgroup first in that case.
    Cyclo pow(long e) const;

    // Galois automorphism zeta -> zeta^{-1}.
    Cyclo conjugate() const;

    bool is_zero() const;
    bool is_root_of_unity() const;
    std::optional<Rat> as_rational() const;

    // Re-express over the smallest divisor d of order() such that the value
    // lies in Q(zeta_d).
    Cyclo canonicalized() const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    // Renders in the expression grammar accepted by parse_cyclotomic
    // ("-2+z15^4+3*z15^7"); requires integral coefficients after
    // canonicalization, which holds for any sum of roots of unity.
    std::string str() const;

  private:
    Cyclo(unsigned long order, std::vector<Rat> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}
    static Cyclo from_poly(unsigned long m, std::vector<Rat> poly);
    std::vector<Rat> lifted_to(unsigned long target) const;

    unsigned long order_;
    std::vector<Rat> coeffs_;
};

inline Cyclo operator*(const Rat& q, const Cyclo& c) { return c * q; }

}  // namespace coxcount
