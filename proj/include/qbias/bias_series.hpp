#pragma once

#include <cstddef>

#include "qbias/report.hpp"
#include "qbias/series.hpp"

namespace qbias {

// The q-series whose coefficient signs encode the partition bias
// inequalities. All builders return exact truncations: a coefficient of the
// result equals the coefficient of the untruncated series.

// sum_{k >= 1} q^k (1 - q^k) / (q^s; q^m)_k, for s, m >= 1. The k = 0 term
// vanishes identically; terms with k > order start past the truncation.
Series inner_series(long s, long m, std::size_t order);

// sum_{j >= 0} sum_{k >= 1} q^{3j+k} (1 - q^k) / ((q^m;q^m)_j (q^m;q^m)_{j+k}),
// for m >= 2. Only terms with 3j + k <= order reach the truncation window.
Series double_series(long m, std::size_t order);

// The same double sum regrouped at fixed j:
// sum_{j >= 0} q^{3j} / (q^m;q^m)_j^2 * sum_{k >= 1} q^k (1-q^k) / (q^{(j+1)m}; q^m)_k.
// Built through inner_series, so it shares no term accumulation with
// double_series; the two must agree coefficient for coefficient.
Series rearranged_double_series(long m, std::size_t order);

// (q; q^m)_inf (q^2; q^m)_inf / (q; q)_inf. Equals the generating function
// of partitions whose parts avoid residues 1 and 2 mod m; in particular the
// constant series 1 when m = 2.
Series prefactor(long m, std::size_t order);

// prefactor(m) * double_series(m).
Series full_series(long m, std::size_t order);

// Exact coefficientwise comparison of double_series against
// rearranged_double_series, one row per coefficient 0..order.
VerificationReport identity_check(long m, std::size_t order);

// Names one buildable series for the expand command.
struct SeriesId {
  enum class Kind { Inner, Double, Full };

  Kind kind = Kind::Inner;
  long s = 1;  // Inner only
  long m = 1;
  std::size_t order = 0;

  void validate() const;  // throws std::invalid_argument
};

Series build_series(const SeriesId& id);

}  // namespace qbias
