#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "qbias/partitions.hpp"
#include "test_support.hpp"

using qbias::BiasQuery;
using qbias::BiasTable;
using qbias::Int;
using qbias::RestrictedCountTable;
using qbias_test::make_series;

TEST_CASE("restricted counts: progression conventions") {
  CHECK(qbias::restricted_count(1, 2, 1, 7) == 1);   // only part 1
  CHECK(qbias::restricted_count(1, 2, 2, 5) == 2);   // {3,1,1} and {1^5}
  CHECK(qbias::restricted_count(3, 4, 2, 2) == 0);   // smallest part exceeds n
  CHECK(qbias::restricted_count(2, 5, 3, -4) == 0);  // negative n
  CHECK(qbias::restricted_count(4, 7, 0, 0) == 1);   // empty partition
  CHECK(qbias::restricted_count(4, 7, 0, 3) == 0);   // k = 0 counts only n = 0

  CHECK_THROWS_AS(qbias::restricted_count(0, 1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(qbias::restricted_count(1, 0, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(qbias::restricted_count(1, 1, -1, 5), std::invalid_argument);
}

TEST_CASE("restricted count table: bounds and row conventions") {
  const RestrictedCountTable table(2, 3, 6, 30);
  CHECK(table.count(0, 0) == 1);
  CHECK(table.count(5, 0) == 1);
  CHECK(table.count(0, 7) == 0);
  CHECK(table.count(3, -9) == 0);
  CHECK_THROWS_AS(table.count(7, 10), std::out_of_range);
  CHECK_THROWS_AS(table.count(-1, 10), std::out_of_range);
  CHECK_THROWS_AS(table.count(2, 31), std::out_of_range);
}

TEST_CASE("restricted counts match the enumeration oracle and the golden table") {
  for (const auto& row : qbias_test::load_golden("restricted_counts.tsv")) {
    const long s = row[0].convert_to<long>();
    const long m = row[1].convert_to<long>();
    const long k = row[2].convert_to<long>();
    const long n = row[3].convert_to<long>();
    CHECK(qbias::restricted_count(s, m, k, n) == row[4]);
    CHECK(qbias::restricted_count_oracle(s, m, k, n) == row[4]);
  }
}

TEST_CASE("restricted generating functions") {
  CHECK(qbias::restricted_gf(1, 2, 1, 4) == make_series({1, 1, 1, 1, 1}));
  CHECK(qbias::restricted_gf(1, 2, 2, 5) == make_series({1, 1, 1, 2, 2, 2}));
  CHECK(qbias::restricted_gf(1, 1, 0, 3) == make_series({1, 0, 0, 0}));
}

TEST_CASE("generating-function coefficients equal the dynamic program") {
  const std::size_t order = 60;
  for (long s = 1; s <= 5; ++s) {
    for (long m = 1; m <= 5; ++m) {
      const RestrictedCountTable table(s, m, 8, static_cast<long>(order));
      for (long k = 0; k <= 8; ++k) {
        const qbias::Series gf = qbias::restricted_gf(s, m, k, order);
        for (long n = 0; n <= static_cast<long>(order); ++n) {
          REQUIRE(gf[static_cast<std::size_t>(n)] == table.count(k, n));
        }
      }
    }
  }
}

TEST_CASE("restricted counts increase with k") {
  for (long s = 1; s <= 5; ++s) {
    for (long m = 1; m <= 5; ++m) {
      const RestrictedCountTable table(s, m, 9, 60);
      for (long k = 0; k <= 8; ++k) {
        for (long n = 0; n <= 60; ++n) {
          REQUIRE(table.count(k, n) <= table.count(k + 1, n));
        }
      }
    }
  }
}

TEST_CASE("bias counts: strict-majority examples") {
  CHECK(qbias::bias_count({1, 2, 2, 4}) == 3);  // {3,1}, {2,1,1}, {1,1,1,1}
  CHECK(qbias::bias_count({2, 1, 2, 4}) == 2);  // {4}, {2,2}
  CHECK(qbias::bias_count({1, 2, 2, 0}) == 0);  // empty partition is a tie
}

TEST_CASE("bias oracle: enumeration examples") {
  CHECK(qbias::bias_oracle({1, 2, 2, 4}) == 3);
  CHECK(qbias::bias_oracle({1, 2, 2, 1}) == 1);
  // Partitions of 2 with residues mod 3: {2} ties at zero, {1,1} has two
  // parts = 1 and none divisible by 3.
  CHECK(qbias::bias_oracle({1, 3, 3, 2}) == 1);
  CHECK(qbias::bias_count({1, 3, 3, 2}) == 1);
}

TEST_CASE("bias query validation and enumeration cap") {
  CHECK_THROWS_AS((BiasQuery{1, 1, 2, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BiasQuery{0, 2, 2, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BiasQuery{1, 3, 2, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BiasQuery{1, 2, 1, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BiasQuery{1, 2, 2, -1}.validate()), std::invalid_argument);

  CHECK_THROWS_AS(BiasTable(1, 2, 2, -5), std::invalid_argument);

  CHECK_THROWS_AS(qbias::bias_oracle({1, 2, 2, 41}), qbias::CapExceeded);
  CHECK_THROWS_AS(qbias::bias_oracle({1, 2, 2, 9}, 8), qbias::CapExceeded);
  CHECK_NOTHROW(qbias::bias_oracle({1, 2, 2, 9}, 9));
  CHECK_THROWS_AS(qbias::restricted_count_oracle(1, 1, 3, 50, 40), qbias::CapExceeded);
}

TEST_CASE("dynamic program agrees with the enumeration oracle") {
  for (long m = 2; m <= 4; ++m) {
    for (long a = 1; a <= m; ++a) {
      for (long b = 1; b <= m; ++b) {
        if (a == b) continue;
        const BiasTable table(a, b, m, 22);
        for (long n = 0; n <= 22; ++n) {
          REQUIRE(table.more_a(n) == qbias::bias_oracle({a, b, m, n}));
        }
      }
    }
  }
}

TEST_CASE("bias table splits the partitions of n exactly") {
  const qbias::Series p = qbias::inverse(qbias::pochhammer_infinite(1, 1, 50));
  const long pairs[][3] = {{1, 2, 2}, {1, 3, 3}, {2, 3, 3}, {1, 4, 4}, {3, 4, 5}};
  for (const auto& [a, b, m] : pairs) {
    const BiasTable table(a, b, m, 50);
    for (long n = 0; n <= 50; ++n) {
      REQUIRE(table.more_a(n) + table.more_b(n) + table.tied(n) ==
              p[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("bias table is antisymmetric in the residue pair") {
  const BiasTable forward(2, 5, 5, 30);
  const BiasTable backward(5, 2, 5, 30);
  for (long n = 0; n <= 30; ++n) {
    CHECK(forward.more_a(n) == backward.more_b(n));
    CHECK(forward.more_b(n) == backward.more_a(n));
    CHECK(forward.tied(n) == backward.tied(n));
  }
}

TEST_CASE("parity-bias golden values, modulus 2") {
  const BiasTable table(1, 2, 2, 40);
  for (const auto& row : qbias_test::load_golden("parity_bias_m2.tsv")) {
    const long n = row[0].convert_to<long>();
    CHECK(table.more_a(n) == row[1]);
    CHECK(table.more_b(n) == row[2]);
    CHECK(table.tied(n) == row[3]);
  }
}

TEST_CASE("bias golden values, modulus 3") {
  const BiasTable t12(1, 2, 3, 30);
  const BiasTable t13(1, 3, 3, 30);
  const BiasTable t23(2, 3, 3, 30);
  for (const auto& row : qbias_test::load_golden("bias_m3.tsv")) {
    const long n = row[0].convert_to<long>();
    CHECK(t12.more_a(n) == row[1]);
    CHECK(t12.more_b(n) == row[2]);
    CHECK(t13.more_a(n) == row[3]);
    CHECK(t13.more_b(n) == row[4]);
    CHECK(t23.more_a(n) == row[5]);
    CHECK(t23.more_b(n) == row[6]);
  }
}

TEST_CASE("partition enumeration is exhaustive and duplicate-free") {
  const qbias::Series p = qbias::inverse(qbias::pochhammer_infinite(1, 1, 18));
  for (long n = 0; n <= 18; ++n) {
    std::set<std::vector<long>> seen;
    qbias::for_each_partition(n, [&](const std::vector<long>& parts) {
      long sum = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        sum += parts[i];
        if (i > 0) REQUIRE(parts[i] <= parts[i - 1]);
      }
      REQUIRE(sum == n);
      REQUIRE(seen.insert(parts).second);
    });
    CHECK(Int(seen.size()) == p[static_cast<std::size_t>(n)]);
  }
}
