#include "coxcount/cyclotomic.hpp"

#include <cassert>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace coxcount {

namespace {

// polynomial helpers: dense vector<Rat>, low-to-high, no trailing zeros enforced

void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// in-place remainder of p modulo the monic divisor d
void mod_monic(std::vector<Rat>& p, const std::vector<Rat>& d) {
    const size_t dd = d.size() - 1;
    while (p.size() > dd) {
        Rat lead = p.back();
        size_t shift = p.size() - 1 - dd;
        if (lead != 0) {
            for (size_t i = 0; i < dd; ++i) p[shift + i] -= lead * d[i];
        }
        p.pop_back();
    }
}

// exact quotient of p by the monic divisor d (remainder must vanish)
std::vector<Rat> div_monic(std::vector<Rat> p, const std::vector<Rat>& d) {
    const size_t dd = d.size() - 1;
    if (p.size() <= dd) throw std::logic_error("division degree underflow");
    std::vector<Rat> q(p.size() - dd);
    for (size_t qi = q.size(); qi-- > 0;) {
        Rat lead = p[qi + dd];
        q[qi] = lead;
        if (lead != 0)
            for (size_t i = 0; i <= dd; ++i) p[qi + i] -= lead * d[i];
    }
    trim(p);
    if (!p.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

std::mutex phi_mutex;
std::map<unsigned long, std::vector<Rat>> phi_cache;

const std::vector<Rat>& cyclo_poly_locked(unsigned long m) {
    auto it = phi_cache.find(m);
    if (it != phi_cache.end()) return it->second;
    std::vector<Rat> p(m + 1, Rat(0));
    p[0] = -1;
    p[m] = 1;  // x^m - 1
    for (unsigned long d = 1; d < m; ++d)
        if (m % d == 0) p = div_monic(std::move(p), cyclo_poly_locked(d));
    return phi_cache.emplace(m, std::move(p)).first->second;
}

}  // namespace

const std::vector<Rat>& cyclotomic_polynomial(unsigned long m) {
    if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    return cyclo_poly_locked(m);
}

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

Cyclo Cyclo::from_poly(unsigned long m, std::vector<Rat> poly) {
    const auto& phi = cyclotomic_polynomial(m);
    mod_monic(poly, phi);
    poly.resize(phi.size() - 1, Rat(0));
    return Cyclo(m, std::move(poly));
}

Cyclo Cyclo::zeta(unsigned long m, long k) {
    if (m == 0) throw std::invalid_argument("root-of-unity order must be positive");
    long km = k % static_cast<long>(m);
    if (km < 0) km += static_cast<long>(m);
    unsigned long g = std::gcd(static_cast<unsigned long>(km), m);
    if (km == 0) g = m;
    unsigned long mm = m / g;
    unsigned long kk = static_cast<unsigned long>(km) / g;
    if (mm == 1) return Cyclo(1);
    std::vector<Rat> poly(kk + 1, Rat(0));
    poly[kk] = 1;
    return from_poly(mm, std::move(poly));
}

std::vector<Rat> Cyclo::lifted_to(unsigned long target) const {
    assert(target % order_ == 0);
    if (target == order_) return coeffs_;
    unsigned long step = target / order_;
    std::vector<Rat> poly;
    poly.resize((coeffs_.size() - 1) * step + 1, Rat(0));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) poly[k * step] = coeffs_[k];
    const auto& phi = cyclotomic_polynomial(target);
    mod_monic(poly, phi);
    poly.resize(phi.size() - 1, Rat(0));
    return poly;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    unsigned long L = std::lcm(order_, o.order_);
    std::vector<Rat> a = lifted_to(L), b = o.lifted_to(L);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return Cyclo(L, std::move(a));
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
    std::vector<Rat> a = coeffs_;
    for (auto& c : a) c = -c;
    return Cyclo(order_, std::move(a));
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    unsigned long L = std::lcm(order_, o.order_);
    std::vector<Rat> a = lifted_to(L), b = o.lifted_to(L);
    std::vector<Rat> prod(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    return from_poly(L, std::move(prod));
}

Cyclo Cyclo::operator*(const Rat& q) const {
    std::vector<Rat> a = coeffs_;
    for (auto& c : a) c *= q;
    return Cyclo(order_, std::move(a));
}

bool Cyclo::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_root_of_unity() const {
    // the torsion subgroup of Q(zeta_m)^x has order lcm(2, m)
    unsigned long t = std::lcm<unsigned long>(2, order_);
    Cyclo p = pow(static_cast<long>(t));
    auto r = p.as_rational();
    return r && *r == 1;
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) {
        unsigned long t = std::lcm<unsigned long>(2, order_);
        unsigned long te = static_cast<unsigned long>(((e % static_cast<long>(t)) +
                                                       static_cast<long>(t)) %
                                                      static_cast<long>(t));
        // guard: base^t must be 1, i.e. base is a root of unity
        Cyclo idc = [&] {
            Cyclo acc(1L);
            Cyclo base = *this;
            unsigned long k = t;
            while (k) {
                if (k & 1) acc *= base;
                base *= base;
                k >>= 1;
            }
            return acc;
        }();
        auto r = idc.as_rational();
        if (!r || *r != 1)
            throw std::domain_error("negative power of a value that is not a root of unity");
        e = static_cast<long>(te);
    }
    Cyclo acc(1L);
    Cyclo base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Cyclo Cyclo::conjugate() const {
    unsigned long m = order_;
    if (m == 1) return *this;
    std::vector<Rat> poly(m, Rat(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        size_t e = (m - k) % m;  // zeta^k -> zeta^{-k}
        poly[e] += coeffs_[k];
    }
    return from_poly(m, std::move(poly));
}

std::optional<Rat> Cyclo::as_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (order_ == o.order_) return coeffs_ == o.coeffs_;
    unsigned long L = std::lcm(order_, o.order_);
    return lifted_to(L) == o.lifted_to(L);
}

namespace {

// Solve  basis * x = v  exactly over Q; basis columns are the subfield power
// basis lifted to the ambient order.  Returns the coordinates if consistent.
std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> cols,
                                            std::vector<Rat> v) {
    const size_t rows = v.size(), ncols = cols.size();
    std::vector<size_t> pivot_col_of_row(rows, SIZE_MAX);
    std::vector<size_t> pivot_row_of_col(ncols, SIZE_MAX);
    size_t prow = 0;
    for (size_t c = 0; c < ncols && prow < rows; ++c) {
        size_t sel = SIZE_MAX;
        for (size_t r = prow; r < rows; ++r)
            if (cols[c][r] != 0) {
                sel = r;
                break;
            }
        if (sel == SIZE_MAX) continue;
        for (size_t cc = 0; cc < ncols; ++cc) std::swap(cols[cc][sel], cols[cc][prow]);
        std::swap(v[sel], v[prow]);
        Rat inv = cols[c][prow];
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || cols[c][r] == 0) continue;
            Rat f = cols[c][r] / inv;
            for (size_t cc = c; cc < ncols; ++cc) cols[cc][r] -= f * cols[cc][prow];
            v[r] -= f * v[prow];
        }
        pivot_col_of_row[prow] = c;
        pivot_row_of_col[c] = prow;
        ++prow;
    }
    // consistency: rows without pivots must have zero rhs
    for (size_t r = prow; r < rows; ++r)
        if (v[r] != 0) return std::nullopt;
    std::vector<Rat> x(ncols, Rat(0));
    for (size_t r = 0; r < prow; ++r) {
        size_t c = pivot_col_of_row[r];
        x[c] = v[r] / cols[c][r];
    }
    return x;
}

}  // namespace

Cyclo Cyclo::canonicalized() const {
    unsigned long m = order_;
    if (m == 1) return *this;
    if (as_rational()) return Cyclo(coeffs_[0]);
    for (unsigned long d = 2; d < m; ++d) {
        if (m % d != 0) continue;
        unsigned long pd = euler_phi(d);
        std::vector<std::vector<Rat>> cols;
        cols.reserve(pd);
        for (unsigned long j = 0; j < pd; ++j)
            cols.push_back(Cyclo::zeta(d, static_cast<long>(j)).lifted_to(m));
        auto x = solve_exact(std::move(cols), coeffs_);
        if (x) {
            x->resize(pd, Rat(0));
            return Cyclo(d, std::move(*x));
        }
    }
    return *this;
}

std::string Cyclo::str() const {
    Cyclo c = canonicalized();
    unsigned long m = c.order_;
    std::string out;
    bool first = true;
    for (size_t k = 0; k < c.coeffs_.size(); ++k) {
        const Rat& q = c.coeffs_[k];
        if (q == 0) continue;
        if (q.get_den() != 1)
            throw std::domain_error("cannot render non-integral coefficients in root grammar");
        Int num = q.get_num();
        bool neg = num < 0;
        Int mag = abs(num);
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? '-' : '+';
        }
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += 'z';
            out += std::to_string(m);
            if (k > 1) {
                out += '^';
                out += std::to_string(k);
            }
        }
    }
    if (first) out = "0";
    return out;
}

}  // namespace coxcount
