#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "qbias/series.hpp"

namespace qbias {

// Thrown when a brute-force enumeration is asked to go past its cap.
struct CapExceeded : std::runtime_error {
  CapExceeded(long n, long cap);
};

// Default ceiling for the enumeration oracles.
inline constexpr long kEnumerationCap = 40;

// Memoized P_{s,m,k}(n): partitions of n with every part in the arithmetic
// progression {s, s+m, ..., s+(k-1)m}. Built once by coin-style dynamic
// programming, immutable afterwards; lookups are pure.
//
// Conventions: count(k, n) is 0 for n < 0, 1 for n = 0, and count(0, n) is
// [n == 0]. Rows satisfy count(k, n) <= count(k+1, n).
class RestrictedCountTable {
 public:
  RestrictedCountTable(long s, long m, long max_k, long max_n);

  long s() const { return s_; }
  long m() const { return m_; }
  long max_k() const { return max_k_; }
  long max_n() const { return max_n_; }

  // Requires 0 <= k <= max_k and n <= max_n; any negative n yields zero.
  const Int& count(long k, long n) const;

 private:
  long s_;
  long m_;
  long max_k_;
  long max_n_;
  long stored_k_;  // rows above this repeat the last stored row
  std::vector<std::vector<Int>> rows_;
};

// One-off P_{s,m,k}(n) (builds the table it needs; use RestrictedCountTable
// directly when querying many values for the same s, m).
Int restricted_count(long s, long m, long k, long n);

// Exhaustive-enumeration twin of restricted_count, for cross-checking the
// dynamic programming. Throws CapExceeded for n > cap.
Int restricted_count_oracle(long s, long m, long k, long n, long cap = kEnumerationCap);

// 1/(q^s; q^m)_k: the generating function whose q^n coefficient is
// restricted_count(s, m, k, n).
Series restricted_gf(long s, long m, long k, std::size_t order);

// Identifies p_{a,b,m}(n): partitions of n with strictly more parts
// congruent to a than to b modulo m. Residues live in 1..m; a part matches
// residue a when part mod m == a mod m, so residue m means divisible by m.
struct BiasQuery {
  long residue_a = 1;
  long residue_b = 2;
  long modulus = 2;
  long n = 0;

  void validate() const;  // throws std::invalid_argument
};

// p_{a,b,m}(n), p_{b,a,m}(n) and the tied remainder for every n <= max_n,
// from a single dynamic program over part sizes 1..max_n that tracks the
// signed difference (#parts = a mod m) - (#parts = b mod m) within +-n.
class BiasTable {
 public:
  BiasTable(long residue_a, long residue_b, long modulus, long max_n);

  long residue_a() const { return residue_a_; }
  long residue_b() const { return residue_b_; }
  long modulus() const { return modulus_; }
  long max_n() const { return max_n_; }

  const Int& more_a(long n) const { return more_a_.at(static_cast<std::size_t>(n)); }
  const Int& more_b(long n) const { return more_b_.at(static_cast<std::size_t>(n)); }
  const Int& tied(long n) const { return tied_.at(static_cast<std::size_t>(n)); }

 private:
  long residue_a_;
  long residue_b_;
  long modulus_;
  long max_n_;
  std::vector<Int> more_a_;
  std::vector<Int> more_b_;
  std::vector<Int> tied_;
};

// p_{a,b,m}(n) by dynamic programming.
Int bias_count(const BiasQuery& query);

// Same count by exhaustive generation of all partitions of n with direct
// residue tallying. Throws CapExceeded for query.n > cap.
Int bias_oracle(const BiasQuery& query, long cap = kEnumerationCap);

// Visits every partition of n exactly once, parts weakly decreasing.
// The empty partition is the sole partition of 0.
void for_each_partition(long n, const std::function<void(const std::vector<long>&)>& visit);

}  // namespace qbias
