#pragma once

#include <vector>

#include "coxcount/cyclotomic.hpp"

namespace coxcount {

// A partition is a weakly decreasing vector of positive parts; {} is the
// empty partition of 0.  A cycle type is a partition read as the multiset of
// cycle lengths of a permutation.
using Partition = std::vector<int>;
using CycleType = Partition;

// r-tuple of partitions of total size n
using PartitionVector = std::vector<Partition>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);

// [n-k, 1^k]
Partition hook(int n, int k);
// [n-k-1, 2, 1^{k-1}]
Partition quasi_hook(int n, int k);

// multiset { j - i : (i,j) a cell }, sorted ascending
std::vector<long> contents(const Partition& p);

// number of standard Young tableaux (hook-length formula)
Int dimension(const Partition& p);

// irreducible symmetric-group character value chi_lambda(mu), computed by
// border-strip removal over the first-column hook lengths; memoized
long long mn_char(const Partition& lambda, const CycleType& mu);

// chi_lambda(transposition class) / dim(lambda) = 2 * (sum of contents) / (n(n-1))
Rat normalized_transposition_value(const Partition& p);

std::vector<Partition> partitions_of(int n);
std::vector<PartitionVector> partition_vectors(int r, int n);

}  // namespace coxcount
