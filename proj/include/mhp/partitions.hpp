#ifndef MHP_PARTITIONS_HPP
#define MHP_PARTITIONS_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace mhp {

using Partition = std::vector<int>;  // parts in weakly decreasing order

// All partitions of n, n >= 0.  The empty partition is the unique partition
// of 0.  Ordering is deterministic (lexicographically decreasing).
std::vector<Partition> partitions_of(int n);

// All ordered pairs (alpha, beta) of partitions with |alpha| + |beta| = n.
std::vector<std::pair<Partition, Partition>> bipartitions_of(int n);

mpz_class factorial(int n);

// Multiplicity of part j in the partition.
int part_multiplicity(const Partition& p, int j);

// Number of permutations in S_n with cycle type sigma (|sigma| = n):
// n! / prod_j (m_j! * j^m_j) where m_j counts parts equal to j.
mpz_class symmetric_group_class_size(const Partition& sigma);

// Number of signed permutations in the hyperoctahedral group of rank n with
// signed cycle type (alpha, beta): 2^n n! divided by the centralizer order
// prod_j (2j)^{a_j} a_j! * prod_j (2j)^{b_j} b_j!.
mpz_class hyperoctahedral_class_size(const Partition& alpha, const Partition& beta);

}  // namespace mhp

#endif
