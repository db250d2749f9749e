#include "coxcount/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace coxcount {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition hook(int n, int k) {
    if (n < 1 || k < 0 || k >= n) throw std::invalid_argument("hook requires 0 <= k < n");
    Partition p;
    p.push_back(n - k);
    p.insert(p.end(), k, 1);
    return p;
}

Partition quasi_hook(int n, int k) {
    if (n < 4 || k < 1 || k > n - 3)
        throw std::invalid_argument("quasi-hook requires n >= 4 and 1 <= k <= n-3");
    Partition p;
    p.push_back(n - k - 1);
    p.push_back(2);
    p.insert(p.end(), k - 1, 1);
    return p;
}

std::vector<long> contents(const Partition& p) {
    std::vector<long> out;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) out.push_back(j - static_cast<long>(i));
    std::sort(out.begin(), out.end());
    return out;
}

Int dimension(const Partition& p) {
    if (!is_partition(p)) throw std::invalid_argument("not a partition");
    int n = partition_size(p);
    Int num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    Int den = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p[i]; ++j) {
            int arm = p[i] - j - 1;
            int leg = 0;
            for (size_t ii = i + 1; ii < p.size(); ++ii)
                if (p[ii] > j) ++leg;
            den *= arm + leg + 1;
        }
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("hook-length product does not divide n!");
    return q;
}

namespace {

std::vector<long> beta_set(const Partition& p) {
    // first-column hook lengths: p_i + (rows - 1 - i), strictly decreasing
    std::vector<long> beta;
    long rows = static_cast<long>(p.size());
    for (long i = 0; i < rows; ++i) beta.push_back(p[i] + rows - 1 - i);
    return beta;
}

Partition partition_from_beta(std::vector<long> beta) {
    // drop a zero-padded tail so the representation is canonical
    std::sort(beta.begin(), beta.end(), std::greater<long>());
    Partition p;
    long rows = static_cast<long>(beta.size());
    for (long i = 0; i < rows; ++i) {
        long part = beta[i] - (rows - 1 - i);
        if (part > 0) p.push_back(static_cast<int>(part));
    }
    return p;
}

std::mutex mn_mutex;
std::map<std::pair<Partition, CycleType>, long long> mn_cache;

long long mn_rec(const Partition& lambda, const CycleType& mu) {
    if (lambda.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        auto it = mn_cache.find({lambda, mu});
        if (it != mn_cache.end()) return it->second;
    }
    int k = mu.front();
    CycleType rest(mu.begin() + 1, mu.end());
    std::vector<long> beta = beta_set(lambda);
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        long target = beta[i] - k;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<long> nb = beta;
        nb[i] = target;
        long long sign = (between % 2 == 0) ? 1 : -1;
        total += sign * mn_rec(partition_from_beta(std::move(nb)), rest);
    }
    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_cache.emplace(std::make_pair(lambda, mu), total);
    return total;
}

}  // namespace

long long mn_char(const Partition& lambda, const CycleType& mu) {
    if (!is_partition(lambda) || !is_partition(mu))
        throw std::invalid_argument("mn_char arguments must be partitions");
    if (partition_size(lambda) != partition_size(mu))
        throw std::invalid_argument("mn_char size mismatch");
    CycleType sorted_mu = mu;
    std::sort(sorted_mu.begin(), sorted_mu.end(), std::greater<int>());
    return mn_rec(lambda, sorted_mu);
}

Rat normalized_transposition_value(const Partition& p) {
    int n = partition_size(p);
    if (n < 2) throw std::invalid_argument("needs a partition of n >= 2");
    long s = 0;
    for (long c : contents(p)) s += c;
    Rat q(2 * s, static_cast<long>(n) * (n - 1));
    q.canonicalize();
    return q;
}

namespace {

void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<PartitionVector> partition_vectors(int r, int n) {
    if (r < 1) throw std::invalid_argument("need r >= 1 components");
    std::vector<PartitionVector> out;
    PartitionVector cur;
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == r - 1) {
            for (auto& p : partitions_of(remaining)) {
                cur.push_back(p);
                out.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int take = 0; take <= remaining; ++take)
            for (auto& p : partitions_of(take)) {
                cur.push_back(p);
                self(self, pos + 1, remaining - take);
                cur.pop_back();
            }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace coxcount
