#pragma once

#include <string>
#include <vector>

#include "covlat/lattice.hpp"

namespace covlat {

// Counting is exact 128-bit integer arithmetic; no floating point.
using BigUint = unsigned __int128;

std::string to_string(BigUint v);

BigUint binomial(int n, int k);

// Stirling numbers of the second kind via S(n,k) = k*S(n-1,k) + S(n-1,k-1).
// Errors: OutOfRange (k outside 0..n or n beyond the exact-arithmetic cap).
BigUint stirling2(int n, int k);

// Gaussian binomial coefficient: the number of l-dimensional subspaces of an
// n-dimensional space over a q-element field, as an exact integer. Accepts any
// q >= 2 (the product formula does not need primality).
BigUint gaussian_binomial(int n, int l, long long q);

// Whitney numbers of the second kind of the Dowling lattice:
// W_m(n, n-l) = sum_{i=n-l}^{n} C(n,i) m^(i-(n-l)) S(i, n-l).
BigUint whitney2(int n, int l, int group_order);

// Number of covers of a Dowling lattice element with k nonzero blocks:
// k + m*C(k,2).
BigUint dowling_cover_count(int k, int group_order);

// v = p^t for a prime p and t >= 1, by trial factorization.
bool is_prime_power(long long v, long long* base = nullptr, int* exponent = nullptr);
bool is_prime(long long v);

// Finite group given by its composition table; identity at index 0.
// Associativity, identity and inverses are validated on construction.
class GroupTable {
 public:
  static GroupTable cyclic(int order);
  static GroupTable from_table(std::vector<std::vector<int>> table);  // errors: InvalidGroup

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_.at(a).at(b); }
  int inv(int a) const { return inverse_.at(a); }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  GroupTable(std::vector<std::vector<int>> table, std::vector<int> inverse)
      : table_(std::move(table)), inverse_(std::move(inverse)) {}

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

// Lattice of set partitions of {1..n} ordered by refinement; height is
// n - (number of blocks); covers merge exactly two blocks. 1 <= n <= 8.
GradedLattice gen_partition_lattice(int n);

// Lattice of subspaces of F_q^n ordered by inclusion, enumerated as canonical
// reduced-row-echelon-form matrices; height is dimension. q prime, q^n <= 10^4.
GradedLattice gen_subspace_lattice(long long q, int n);

// Dowling lattice of rank n over G: partial G-partitions of {1..n} with a zero
// block, labelings canonical under blockwise left multiplication (the least
// element of each block carries the identity). 0 <= n <= 4, |G| <= 4.
GradedLattice gen_dowling_lattice(int n, const GroupTable& g);

}  // namespace covlat
