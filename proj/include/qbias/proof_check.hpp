#pragma once

#include <utility>
#include <vector>

#include "qbias/partitions.hpp"
#include "qbias/report.hpp"

namespace qbias {

// Coefficient of q^n in inner_series(s, m), evaluated through restricted
// counts: sum_{k >= 1} (P_{s,m,k}(n-k) - P_{s,m,k}(n-2k)). Terms with k > n
// vanish because both arguments go negative.
Int coefficient_formula(long s, long m, long n);
// Table variant for bulk evaluation; requires counts.max_k, max_n >= n.
Int coefficient_formula(const RestrictedCountTable& counts, long n);

// The same sum regrouped by parity of k:
//   sum_{k odd} P_{s,m,k}(n-k)
// + sum_{k even} (P_{s,m,k}(n-k) - P_{s,m,k/2}(n-k)),
// where the subtracted half comes from re-indexing P_{s,m,k}(n-2k) at the
// even index 2k. The regrouped total must equal coefficient_formula, and
// every even-k value must be >= 0.
struct ProofDecomposition {
  long s = 1;
  long m = 1;
  long n = 0;
  std::vector<std::pair<long, Int>> odd_terms;   // (k, P_{s,m,k}(n-k))
  std::vector<std::pair<long, Int>> even_terms;  // (k, P_{s,m,k}(n-k) - P_{s,m,k/2}(n-k))
  Int total;
};

ProofDecomposition regrouped_formula(long s, long m, long n);
ProofDecomposition regrouped_formula(const RestrictedCountTable& counts, long n);

// For each n <= max_n checks, as separate verdicts:
//   (i)   coefficient_formula equals the q^n coefficient of inner_series,
//   (ii)  the regrouped total equals the formula,
//   (iii) every even-k decomposition value is >= 0,
//   (iv)  the monotonicity instances P_{s,m,k/2}(n-k) <= P_{s,m,k}(n-k) hold.
// One row per n with all four sub-verdicts; PASS only when all hold.
VerificationReport verify_proof(long s, long m, long max_n);

}  // namespace qbias
