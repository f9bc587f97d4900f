#include "qbias/bias_series.hpp"

#include <chrono>
#include <stdexcept>

namespace qbias {

namespace {

void require_modulus(long m) {
  if (m < 2) throw std::invalid_argument("series builder: m must be >= 2");
}

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

Series inner_series(long s, long m, std::size_t order) {
  if (s < 1 || m < 1) throw std::invalid_argument("inner_series: s, m must be >= 1");
  const long n = static_cast<long>(order);
  Series acc(order);
  // Running reciprocal 1/(q^s; q^m)_k, extended by one factor per k. Each
  // added term is exactly q^k (1 - q^k) / (q^s; q^m)_k at this order; terms
  // with k > order lie entirely past the truncation window.
  Series recip = Series::constant(1, order);
  for (long k = 1; k <= n; ++k) {
    const long factor_exp = s + (k - 1) * m;
    if (factor_exp <= n) recip.div_one_minus_qpow(static_cast<std::size_t>(factor_exp));
    acc.add_shifted(recip, static_cast<std::size_t>(k));
    if (2 * k <= n) acc.sub_shifted(recip, static_cast<std::size_t>(2 * k));
  }
  return acc;
}

Series double_series(long m, std::size_t order) {
  require_modulus(m);
  const long n = static_cast<long>(order);
  Series acc(order);
  Series recip_j = Series::constant(1, order);  // 1/(q^m; q^m)_j
  for (long j = 0; 3 * j <= n; ++j) {
    if (j > 0 && j * m <= n) recip_j.div_one_minus_qpow(static_cast<std::size_t>(j * m));
    // prod = 1/((q^m;q^m)_j (q^m;q^m)_{j+k}), extended by one factor per k.
    Series prod = recip_j * recip_j;
    for (long k = 1; 3 * j + k <= n; ++k) {
      const long factor_exp = (j + k) * m;
      if (factor_exp <= n) prod.div_one_minus_qpow(static_cast<std::size_t>(factor_exp));
      acc.add_shifted(prod, static_cast<std::size_t>(3 * j + k));
      if (3 * j + 2 * k <= n) acc.sub_shifted(prod, static_cast<std::size_t>(3 * j + 2 * k));
    }
  }
  return acc;
}

Series rearranged_double_series(long m, std::size_t order) {
  require_modulus(m);
  const long n = static_cast<long>(order);
  Series acc(order);
  Series recip_j = Series::constant(1, order);  // 1/(q^m; q^m)_j
  for (long j = 0; 3 * j <= n; ++j) {
    if (j > 0 && j * m <= n) recip_j.div_one_minus_qpow(static_cast<std::size_t>(j * m));
    Series term = (recip_j * recip_j) * inner_series((j + 1) * m, m, order);
    acc.add_shifted(term, static_cast<std::size_t>(3 * j));
  }
  return acc;
}

Series prefactor(long m, std::size_t order) {
  require_modulus(m);
  const Series numerator =
      pochhammer_infinite(1, m, order) * pochhammer_infinite(2, m, order);
  return numerator * inverse(pochhammer_infinite(1, 1, order));
}

Series full_series(long m, std::size_t order) {
  return prefactor(m, order) * double_series(m, order);
}

VerificationReport identity_check(long m, std::size_t order) {
  require_modulus(m);
  const auto start = std::chrono::steady_clock::now();
  const Series lhs = double_series(m, order);
  const Series rhs = rearranged_double_series(m, order);
  VerificationReport report;
  report.identity = "double-series-rearrangement";
  report.add_param("m", std::to_string(m));
  report.add_param("N", std::to_string(order));
  for (std::size_t t = 0; t <= order; ++t) {
    ReportRow row;
    row.index = static_cast<long>(t);
    row.pass = lhs[t] == rhs[t];
    row.witness.emplace_back("double", lhs[t].str());
    row.witness.emplace_back("rearranged", rhs[t].str());
    report.add_row(std::move(row));
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

void SeriesId::validate() const {
  switch (kind) {
    case Kind::Inner:
      if (s < 1 || m < 1) {
        throw std::invalid_argument("inner series requires s >= 1 and m >= 1");
      }
      break;
    case Kind::Double:
    case Kind::Full:
      require_modulus(m);
      break;
  }
}

Series build_series(const SeriesId& id) {
  id.validate();
  switch (id.kind) {
    case SeriesId::Kind::Inner:
      return inner_series(id.s, id.m, id.order);
    case SeriesId::Kind::Double:
      return double_series(id.m, id.order);
    case SeriesId::Kind::Full:
      return full_series(id.m, id.order);
  }
  throw std::logic_error("unreachable series kind");
}

}  // namespace qbias
