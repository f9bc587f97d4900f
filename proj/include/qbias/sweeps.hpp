#pragma once

#include <cstddef>

#include "qbias/report.hpp"

namespace qbias {

// Inclusive integer range for sweep grids.
struct Range {
  long lo = 0;
  long hi = 0;

  long size() const { return hi >= lo ? hi - lo + 1 : 0; }
};

// Grid sweeps behind the verify targets. Each returns one report whose rows
// are ordered by grid position regardless of how the work was scheduled, so
// repeated runs render byte-identical text.

// conj5: every coefficient of inner_series(s, m, order) is >= 0, one row
// per (s, m) grid point.
VerificationReport verify_inner_nonnegativity(Range s, Range m, std::size_t order);

// conj4: every coefficient of double_series(m, order) is >= 0, one row per m.
VerificationReport verify_double_nonnegativity(Range m, std::size_t order);

// rearrange: double_series(m, order) equals rearranged_double_series(m,
// order) exactly, one row per m.
VerificationReport verify_rearrangement(Range m, std::size_t order);

// proof: verify_proof(s, m, max_n) holds, one row per (s, m) grid point.
VerificationReport verify_decomposition(Range s, Range m, long max_n);

// thm1: p_{1,2,2}(n) >= p_{2,1,2}(n), one row per n. The n = 2 row is
// printed with its values but excluded from the verdict.
VerificationReport verify_parity_bias(long max_n);

// thm3: p_{a,b,m}(n) >= p_{b,a,m}(n) for all 1 <= a < b <= m and all
// n <= max_n, one row per (m, a, b).
VerificationReport verify_general_bias(Range m, long max_n);

}  // namespace qbias
