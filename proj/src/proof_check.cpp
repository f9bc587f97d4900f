#include "qbias/proof_check.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "qbias/bias_series.hpp"

namespace qbias {

namespace {

void require_nonnegative_n(long n) {
  if (n < 0) throw std::invalid_argument("coefficient formula: n must be >= 0");
}

}  // namespace

Int coefficient_formula(const RestrictedCountTable& counts, long n) {
  require_nonnegative_n(n);
  Int total = 0;
  for (long k = 1; k <= n; ++k) {
    total += counts.count(k, n - k) - counts.count(k, n - 2 * k);
  }
  return total;
}

Int coefficient_formula(long s, long m, long n) {
  require_nonnegative_n(n);
  return coefficient_formula(RestrictedCountTable(s, m, n, n), n);
}

ProofDecomposition regrouped_formula(const RestrictedCountTable& counts, long n) {
  require_nonnegative_n(n);
  ProofDecomposition decomposition;
  decomposition.s = counts.s();
  decomposition.m = counts.m();
  decomposition.n = n;
  decomposition.total = 0;
  for (long k = 1; k <= n; ++k) {
    if (k % 2 == 1) {
      Int value = counts.count(k, n - k);
      decomposition.total += value;
      decomposition.odd_terms.emplace_back(k, std::move(value));
    } else {
      Int value = counts.count(k, n - k) - counts.count(k / 2, n - k);
      decomposition.total += value;
      decomposition.even_terms.emplace_back(k, std::move(value));
    }
  }
  return decomposition;
}

ProofDecomposition regrouped_formula(long s, long m, long n) {
  require_nonnegative_n(n);
  return regrouped_formula(RestrictedCountTable(s, m, n, n), n);
}

VerificationReport verify_proof(long s, long m, long max_n) {
  if (s < 1 || m < 1) throw std::invalid_argument("verify_proof: s, m must be >= 1");
  if (max_n < 0) throw std::invalid_argument("verify_proof: max_n must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  const RestrictedCountTable counts(s, m, max_n, max_n);
  const Series series = inner_series(s, m, static_cast<std::size_t>(max_n));

  VerificationReport report;
  report.identity = "coefficient-decomposition";
  report.add_param("s", std::to_string(s));
  report.add_param("m", std::to_string(m));
  report.add_param("maxN", std::to_string(max_n));

  for (long n = 0; n <= max_n; ++n) {
    const Int formula = coefficient_formula(counts, n);
    const ProofDecomposition decomposition = regrouped_formula(counts, n);

    const bool formula_matches_series = formula == series[static_cast<std::size_t>(n)];
    const bool regroup_conserves = decomposition.total == formula;
    bool even_terms_nonnegative = true;
    for (const auto& [k, value] : decomposition.even_terms) {
      if (value < 0) {
        even_terms_nonnegative = false;
        break;
      }
    }
    bool monotonicity = true;
    for (long k = 2; k <= n; k += 2) {
      if (counts.count(k / 2, n - k) > counts.count(k, n - k)) {
        monotonicity = false;
        break;
      }
    }

    ReportRow row;
    row.index = n;
    row.pass = formula_matches_series && regroup_conserves && even_terms_nonnegative &&
               monotonicity;
    row.witness.emplace_back("series", series[static_cast<std::size_t>(n)].str());
    row.witness.emplace_back("formula", formula.str());
    row.witness.emplace_back("regrouped_total", decomposition.total.str());
    row.witness.emplace_back("formula_matches_series", formula_matches_series ? "yes" : "no");
    row.witness.emplace_back("regroup_conserves", regroup_conserves ? "yes" : "no");
    row.witness.emplace_back("even_terms_nonnegative", even_terms_nonnegative ? "yes" : "no");
    row.witness.emplace_back("monotonicity", monotonicity ? "yes" : "no");
    report.add_row(std::move(row));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace qbias
