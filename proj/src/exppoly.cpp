#include "coxcount/exppoly.hpp"

namespace coxcount {

void ExpPoly::add_term(const Rat& exponent, const Cyclo& amplitude) {
    if (amplitude.is_zero()) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, amplitude.canonicalized());
        return;
    }
    it->second += amplitude;
    if (it->second.is_zero())
        terms_.erase(it);
    else
        it->second = it->second.canonicalized();
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    ExpPoly out = *this;
    for (const auto& [e, a] : o.terms_) out.add_term(e, a);
    return out;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const {
    ExpPoly out = *this;
    for (const auto& [e, a] : o.terms_) out.add_term(e, -a);
    return out;
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
    ExpPoly out;
    for (const auto& [e1, a1] : terms_)
        for (const auto& [e2, a2] : o.terms_) out.add_term(e1 + e2, a1 * a2);
    return out;
}

ExpPoly ExpPoly::pow(unsigned e) const {
    ExpPoly acc = exponential(Rat(0), Cyclo(1L));
    ExpPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

ExpPoly ExpPoly::scaled(const Rat& q) const {
    ExpPoly out;
    if (q == 0) return out;
    for (const auto& [e, a] : terms_) out.terms_.emplace(e, a * q);
    return out;
}

Cyclo ExpPoly::coefficient(unsigned long ell) const {
    Cyclo sum;
    for (const auto& [e, a] : terms_) {
        Rat p(1);
        for (unsigned long i = 0; i < ell; ++i) p *= e;
        sum += a * p;
    }
    return sum.canonicalized();
}

}  // namespace coxcount
