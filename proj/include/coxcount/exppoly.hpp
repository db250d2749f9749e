#pragma once

#include <map>

#include "coxcount/cyclotomic.hpp"

namespace coxcount {

// Finite formal sum  sum_e a_e * exp(e*t)  with rational exponents e and
// cyclotomic amplitudes a_e.  Zero amplitudes are never stored, so equality
// is exact term-by-term comparison.
class ExpPoly {
  public:
    ExpPoly() = default;

    static ExpPoly exponential(const Rat& exponent, const Cyclo& amplitude) {
        ExpPoly p;
        p.add_term(exponent, amplitude);
        return p;
    }

    void add_term(const Rat& exponent, const Cyclo& amplitude);

    ExpPoly operator+(const ExpPoly& o) const;
    ExpPoly operator-(const ExpPoly& o) const;
    ExpPoly operator*(const ExpPoly& o) const;  // exp(a t) * exp(b t) = exp((a+b) t)
    ExpPoly pow(unsigned e) const;
    ExpPoly scaled(const Rat& q) const;

    // ell! * [t^ell], i.e. sum_e a_e * e^ell.
    Cyclo coefficient(unsigned long ell) const;

    bool operator==(const ExpPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ExpPoly& o) const { return !(*this == o); }

    const std::map<Rat, Cyclo>& terms() const { return terms_; }

  private:
    std::map<Rat, Cyclo> terms_;
};

}  // namespace coxcount
