#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbias/bias_series.hpp"
#include "qbias/proof_check.hpp"
#include "test_support.hpp"

using qbias::Int;
using qbias::ProofDecomposition;
using qbias::RestrictedCountTable;

TEST_CASE("coefficient formula: small values") {
  CHECK(qbias::coefficient_formula(1, 1, 1) == 1);
  CHECK(qbias::coefficient_formula(1, 1, 3) == 2);
  CHECK(qbias::coefficient_formula(5, 3, 0) == 0);
  CHECK_THROWS_AS(qbias::coefficient_formula(1, 1, -1), std::invalid_argument);
}

TEST_CASE("regrouped decomposition: structure and conservation") {
  const ProofDecomposition d3 = qbias::regrouped_formula(1, 1, 3);
  CHECK(d3.total == 2);
  CHECK(d3.total == qbias::coefficient_formula(1, 1, 3));
  for (const auto& [k, value] : d3.even_terms) {
    CHECK(k % 2 == 0);
    CHECK(value >= 0);
  }
  for (const auto& [k, value] : d3.odd_terms) CHECK(k % 2 == 1);

  const ProofDecomposition d0 = qbias::regrouped_formula(1, 1, 0);
  CHECK(d0.total == 0);
  CHECK(d0.odd_terms.empty());
  CHECK(d0.even_terms.empty());

  CHECK(qbias::regrouped_formula(2, 3, 7).total == qbias::coefficient_formula(2, 3, 7));
}

TEST_CASE("decomposition totals always match the formula") {
  for (long s = 1; s <= 5; ++s) {
    for (long m = 1; m <= 5; ++m) {
      const RestrictedCountTable counts(s, m, 40, 40);
      for (long n = 0; n <= 40; ++n) {
        const ProofDecomposition d = qbias::regrouped_formula(counts, n);
        Int recomputed = 0;
        for (const auto& [k, value] : d.odd_terms) recomputed += value;
        for (const auto& [k, value] : d.even_terms) recomputed += value;
        REQUIRE(recomputed == d.total);
        REQUIRE(d.total == qbias::coefficient_formula(counts, n));
      }
    }
  }
}

TEST_CASE("formula equals the series coefficients") {
  for (long s = 1; s <= 4; ++s) {
    for (long m = 1; m <= 4; ++m) {
      const qbias::Series series = qbias::inner_series(s, m, 60);
      const RestrictedCountTable counts(s, m, 60, 60);
      for (long n = 0; n <= 60; ++n) {
        REQUIRE(qbias::coefficient_formula(counts, n) ==
                series[static_cast<std::size_t>(n)]);
      }
    }
  }
}

TEST_CASE("formula values are nonnegative on the unit grid") {
  for (long s = 1; s <= 4; ++s) {
    for (long m = 1; m <= 4; ++m) {
      const RestrictedCountTable counts(s, m, 60, 60);
      for (long n = 0; n <= 60; ++n) {
        REQUIRE(qbias::coefficient_formula(counts, n) >= 0);
      }
    }
  }
}

TEST_CASE("verify_proof: passing reports with four sub-verdicts per row") {
  const qbias::VerificationReport r11 = qbias::verify_proof(1, 1, 60);
  CHECK(r11.overall);
  CHECK(r11.rows.size() == 61);
  const qbias::VerificationReport r12 = qbias::verify_proof(1, 2, 60);
  CHECK(r12.overall);

  const char* expected_keys[] = {"series",
                                 "formula",
                                 "regrouped_total",
                                 "formula_matches_series",
                                 "regroup_conserves",
                                 "even_terms_nonnegative",
                                 "monotonicity"};
  for (const auto& row : r12.rows) {
    REQUIRE(row.witness.size() == 7);
    for (std::size_t i = 0; i < 7; ++i) REQUIRE(row.witness[i].first == expected_keys[i]);
    for (std::size_t i = 3; i < 7; ++i) REQUIRE(row.witness[i].second == "yes");
  }

  CHECK_THROWS_AS(qbias::verify_proof(0, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(qbias::verify_proof(1, 1, -2), std::invalid_argument);
}
