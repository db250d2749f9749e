#include "coxcount/groups.hpp"

#include <algorithm>
#include <numeric>

namespace coxcount {

GroupSpec GroupSpec::symmetric(int N) {
    if (N < 2) throw std::invalid_argument("symmetric group needs N >= 2");
    return {Family::Symmetric, 1, N};
}

GroupSpec GroupSpec::gr1n(int r, int n) {
    if (r < 2 || n < 1) throw std::invalid_argument("G(r,1,n) needs r >= 2, n >= 1");
    return {Family::GR1N, r, n};
}

GroupSpec GroupSpec::grrn(int r, int n) {
    if (r < 2 || n < 2) throw std::invalid_argument("G(r,r,n) needs r >= 2, n >= 2");
    return {Family::GRRN, r, n};
}

GroupSpec GroupSpec::cyclic(int r) {
    if (r < 2) throw std::invalid_argument("cyclic group needs r >= 2");
    return {Family::Cyclic, r, 1};
}

int GroupSpec::rank() const { return family == Family::Symmetric ? n - 1 : n; }

Int GroupSpec::order() const {
    Int o = 1;
    for (int i = 2; i <= n; ++i) o *= i;
    Int rw = 1;
    int exps = family == Family::GRRN ? n - 1 : n;
    if (family == Family::Symmetric) exps = 0;
    for (int i = 0; i < exps; ++i) rw *= r;
    return o * rw;
}

std::vector<long> GroupSpec::degrees() const {
    std::vector<long> d;
    switch (family) {
        case Family::Symmetric:
            for (int i = 2; i <= n; ++i) d.push_back(i);
            break;
        case Family::Cyclic:
            d.push_back(r);
            break;
        case Family::GR1N:
            for (int i = 1; i <= n; ++i) d.push_back(static_cast<long>(i) * r);
            break;
        case Family::GRRN:
            for (int i = 1; i < n; ++i) d.push_back(static_cast<long>(i) * r);
            d.push_back(n);
            std::sort(d.begin(), d.end());
            break;
    }
    return d;
}

std::vector<long> GroupSpec::codegrees() const {
    std::vector<long> d;
    switch (family) {
        case Family::Symmetric:
            for (int i = n - 2; i >= 0; --i) d.push_back(i);
            break;
        case Family::Cyclic:
            d.push_back(0);
            break;
        case Family::GR1N:
            for (int i = n - 1; i >= 0; --i) d.push_back(static_cast<long>(i) * r);
            break;
        case Family::GRRN:
            for (int i = 0; i < n - 1; ++i) d.push_back(static_cast<long>(i) * r);
            d.push_back(static_cast<long>(n - 1) * r - n);
            std::sort(d.begin(), d.end(), std::greater<long>());
            break;
    }
    return d;
}

long GroupSpec::coxeter_number() const { return degrees().back(); }

long GroupSpec::reflection_count() const {
    long s = 0;
    for (long d : degrees()) s += d - 1;
    return s;
}

long GroupSpec::hyperplane_count() const {
    long s = 0;
    for (long d : codegrees()) s += d + 1;
    return s;
}

std::string GroupSpec::name() const {
    switch (family) {
        case Family::Symmetric: return "Sn:" + std::to_string(n);
        case Family::Cyclic: return "C:" + std::to_string(r);
        case Family::GR1N:
            return "G:" + std::to_string(r) + ",1," + std::to_string(n);
        case Family::GRRN:
            return "G:" + std::to_string(r) + "," + std::to_string(r) + "," +
                   std::to_string(n);
    }
    return "?";
}

Element identity(const GroupSpec& spec) {
    Element e;
    e.perm.resize(spec.n);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.weights.assign(spec.n, 0);
    return e;
}

bool in_group(const GroupSpec& spec, const Element& a) {
    if (static_cast<int>(a.perm.size()) != spec.n ||
        static_cast<int>(a.weights.size()) != spec.n)
        return false;
    std::vector<bool> seen(spec.n, false);
    long wsum = 0;
    for (int i = 0; i < spec.n; ++i) {
        int p = a.perm[i];
        if (p < 0 || p >= spec.n || seen[p]) return false;
        seen[p] = true;
        if (a.weights[i] < 0 || a.weights[i] >= spec.r) return false;
        wsum += a.weights[i];
    }
    if (spec.family == Family::GRRN && wsum % spec.r != 0) return false;
    return true;
}

Element multiply(const GroupSpec& spec, const Element& a, const Element& b) {
    if (a.perm.size() != b.perm.size())
        throw std::invalid_argument("element size mismatch");
    int n = spec.n;
    Element c;
    c.perm.resize(n);
    c.weights.resize(n);
    for (int l = 0; l < n; ++l) {
        c.perm[l] = b.perm[a.perm[l]];
        c.weights[l] = (a.weights[l] + b.weights[a.perm[l]]) % spec.r;
    }
    return c;
}

Element inverse(const GroupSpec& spec, const Element& a) {
    int n = spec.n;
    Element c;
    c.perm.resize(n);
    c.weights.resize(n);
    for (int l = 0; l < n; ++l) {
        c.perm[a.perm[l]] = l;
        c.weights[a.perm[l]] = (spec.r - a.weights[l]) % spec.r;
    }
    return c;
}

Element conjugate(const GroupSpec& spec, const Element& g, const Element& a) {
    return multiply(spec, multiply(spec, g, a), inverse(spec, g));
}

std::vector<std::vector<Cyclo>> to_matrix(const GroupSpec& spec, const Element& a) {
    int n = spec.n;
    std::vector<std::vector<Cyclo>> m(n, std::vector<Cyclo>(n));
    for (int l = 0; l < n; ++l) m[l][a.perm[l]] = Cyclo::zeta(spec.r, a.weights[l]);
    return m;
}

namespace {

int free_weight_slots(const GroupSpec& spec) {
    switch (spec.family) {
        case Family::Symmetric: return 0;
        case Family::GRRN: return spec.n - 1;
        default: return spec.n;
    }
}

size_t weight_space_size(const GroupSpec& spec) {
    size_t s = 1;
    for (int i = 0; i < free_weight_slots(spec); ++i) s *= static_cast<size_t>(spec.r);
    return s;
}

size_t factorial(int n) {
    size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<size_t>(i);
    return f;
}

}  // namespace

size_t element_space_size(const GroupSpec& spec, size_t cap) {
    Int o = spec.order();
    if (o > Int(static_cast<unsigned long>(cap)))
        throw cap_exceeded("group order " + o.get_str() + " exceeds enumeration cap " +
                           std::to_string(cap));
    return factorial(spec.n) * weight_space_size(spec);
}

size_t element_index(const GroupSpec& spec, const Element& a) {
    int n = spec.n;
    // Lehmer code
    size_t lehmer = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (a.perm[j] < a.perm[i]) ++smaller;
        lehmer = lehmer * static_cast<size_t>(n - i) + static_cast<size_t>(smaller);
    }
    size_t widx = 0;
    for (int i = 0; i < free_weight_slots(spec); ++i)
        widx = widx * static_cast<size_t>(spec.r) + static_cast<size_t>(a.weights[i]);
    return lehmer * weight_space_size(spec) + widx;
}

Element element_at(const GroupSpec& spec, size_t index) {
    int n = spec.n;
    size_t wspace = weight_space_size(spec);
    size_t lehmer = index / wspace;
    size_t widx = index % wspace;
    Element e;
    e.perm.resize(n);
    e.weights.assign(n, 0);
    std::vector<int> digits(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(lehmer % static_cast<size_t>(n - i));
        lehmer /= static_cast<size_t>(n - i);
    }
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 0);
    for (int i = 0; i < n; ++i) {
        e.perm[i] = avail[digits[i]];
        avail.erase(avail.begin() + digits[i]);
    }
    int slots = free_weight_slots(spec);
    for (int i = slots - 1; i >= 0; --i) {
        e.weights[i] = static_cast<int>(widx % static_cast<size_t>(spec.r));
        widx /= static_cast<size_t>(spec.r);
    }
    if (spec.family == Family::GRRN) {
        long s = 0;
        for (int i = 0; i < n - 1; ++i) s += e.weights[i];
        e.weights[n - 1] = static_cast<int>((spec.r - s % spec.r) % spec.r);
    }
    return e;
}

std::vector<Element> elements(const GroupSpec& spec, size_t cap) {
    size_t total = element_space_size(spec, cap);
    std::vector<Element> out;
    out.reserve(total);
    for (size_t i = 0; i < total; ++i) out.push_back(element_at(spec, i));
    return out;
}

std::vector<Reflection> reflections(const GroupSpec& spec) {
    std::vector<Reflection> out;
    int n = spec.n, r = spec.r;
    if (spec.family == Family::GR1N || spec.family == Family::Cyclic) {
        for (int l = 1; l < r; ++l)
            for (int i = 0; i < n; ++i) {
                Element e = identity(spec);
                e.weights[i] = l;
                out.push_back({std::move(e), l});
            }
    }
    if (spec.family != Family::Cyclic) {
        int kmax = spec.family == Family::Symmetric ? 1 : r;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < kmax; ++k) {
                    Element e = identity(spec);
                    e.perm[i] = j;
                    e.perm[j] = i;
                    e.weights[i] = k;
                    e.weights[j] = (r - k) % r;
                    out.push_back({std::move(e), 0});
                }
    }
    if (static_cast<long>(out.size()) != spec.reflection_count())
        throw std::logic_error("reflection enumeration disagrees with degree formula");
    return out;
}

CycleType cycle_type(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    CycleType ct;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        ct.push_back(len);
    }
    std::sort(ct.begin(), ct.end(), std::greater<int>());
    return ct;
}

std::vector<Rat> eigenvalue_exponents(const GroupSpec& spec, const Element& a) {
    int n = spec.n, r = spec.r;
    std::vector<bool> seen(n, false);
    std::vector<Rat> out;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        long wsum = 0;
        while (!seen[j]) {
            seen[j] = true;
            wsum += a.weights[j];
            j = a.perm[j];
            ++len;
        }
        for (int q = 0; q < len; ++q) {
            // solutions of x^len = zeta_r^wsum
            Rat e(wsum + static_cast<long>(q) * r, static_cast<long>(r) * len);
            e.canonicalize();
            e -= e.get_num() / e.get_den();  // floor to [0,1)
            if (e < 0) e += 1;
            out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int fixed_space_dim(const GroupSpec& spec, const Element& a) {
    int n = spec.n, r = spec.r;
    std::vector<bool> seen(n, false);
    int dim = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        long wsum = 0;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            wsum += a.weights[j];
            j = a.perm[j];
        }
        if (wsum % r == 0) ++dim;
    }
    return dim;
}

bool is_reflection(const GroupSpec& spec, const Element& a) {
    return fixed_space_dim(spec, a) == spec.n - 1;
}

bool is_coxeter(const GroupSpec& spec, const Element& a) {
    long h = spec.coxeter_number();
    for (const Rat& e : eigenvalue_exponents(spec, a))
        if (e.get_den() == h) return true;
    return false;
}

void validate_primitive_exponent(const GroupSpec& spec, const Rat& zeta_exp) {
    long h = spec.coxeter_number();
    if (zeta_exp <= 0 || zeta_exp >= 1 || zeta_exp.get_den() != h)
        throw std::invalid_argument(
            "zeta exponent must be a/h in lowest terms with 0 < a < h; h = " +
            std::to_string(h));
}

std::vector<Element> coxeter_class(const GroupSpec& spec, const Rat& zeta_exp,
                                   size_t cap) {
    validate_primitive_exponent(spec, zeta_exp);
    std::vector<Element> out;
    size_t total = element_space_size(spec, cap);
    for (size_t i = 0; i < total; ++i) {
        Element e = element_at(spec, i);
        auto exps = eigenvalue_exponents(spec, e);
        if (std::find(exps.begin(), exps.end(), zeta_exp) != exps.end())
            out.push_back(std::move(e));
    }
    return out;
}

Element canonical_coxeter(const GroupSpec& spec, const Rat& zeta_exp) {
    validate_primitive_exponent(spec, zeta_exp);
    long a = zeta_exp.get_num().get_si();
    int n = spec.n, r = spec.r;
    Element c = identity(spec);
    switch (spec.family) {
        case Family::Symmetric:
            for (int i = 0; i < n; ++i) c.perm[i] = (i + 1) % n;
            break;
        case Family::Cyclic:
            c.weights[0] = static_cast<int>(a % r);
            break;
        case Family::GR1N:
            for (int i = 0; i < n; ++i) c.perm[i] = (i + 1) % n;
            c.weights[n - 1] = static_cast<int>(a % r);
            break;
        case Family::GRRN:
            for (int i = 0; i < n - 1; ++i) c.perm[i] = (i + 1) % (n - 1);
            c.weights[n - 2] = static_cast<int>(a % r);
            c.weights[n - 1] = static_cast<int>((r - a % r) % r);
            break;
    }
    if (!in_group(spec, c) || !is_coxeter(spec, c))
        throw std::logic_error("canonical element failed the eigenvalue test");
    return c;
}

Element canonical_coxeter(const GroupSpec& spec) {
    return canonical_coxeter(spec, make_rat(1, spec.coxeter_number()));
}

}  // namespace coxcount
