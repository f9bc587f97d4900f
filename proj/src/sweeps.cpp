#include "qbias/sweeps.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qbias/bias_series.hpp"
#include "qbias/parallel.hpp"
#include "qbias/partitions.hpp"
#include "qbias/proof_check.hpp"
#include "qbias/series.hpp"

namespace qbias {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

void require_range(const Range& range, const char* what, long minimum) {
  if (range.size() <= 0) {
    throw std::invalid_argument(std::string(what) + ": empty range");
  }
  if (range.lo < minimum) {
    throw std::invalid_argument(std::string(what) + ": values must be >= " +
                                std::to_string(minimum));
  }
}

void add_nonnegativity_witness(ReportRow& row, const Series& series) {
  const auto neg = series.first_negative();
  row.pass = !neg.has_value();
  if (neg) {
    row.witness.emplace_back("first_negative", std::to_string(*neg));
    row.witness.emplace_back("coefficient", series[*neg].str());
  } else {
    row.witness.emplace_back("first_negative", "none");
  }
}

}  // namespace

VerificationReport verify_inner_nonnegativity(Range s, Range m, std::size_t order) {
  require_range(s, "inner nonnegativity sweep, s", 1);
  require_range(m, "inner nonnegativity sweep, m", 1);
  const auto start = Clock::now();
  const std::size_t points =
      static_cast<std::size_t>(s.size()) * static_cast<std::size_t>(m.size());
  std::vector<ReportRow> rows(points);
  parallel_for(points, [&](std::size_t i) {
    const long s_value = s.lo + static_cast<long>(i) / m.size();
    const long m_value = m.lo + static_cast<long>(i) % m.size();
    ReportRow& row = rows[i];
    row.index = static_cast<long>(i);
    row.witness.emplace_back("s", std::to_string(s_value));
    row.witness.emplace_back("m", std::to_string(m_value));
    add_nonnegativity_witness(row, inner_series(s_value, m_value, order));
  });
  VerificationReport report;
  report.identity = "inner-series-nonnegativity";
  report.add_param("s", std::to_string(s.lo) + ".." + std::to_string(s.hi));
  report.add_param("m", std::to_string(m.lo) + ".." + std::to_string(m.hi));
  report.add_param("N", std::to_string(order));
  for (auto& row : rows) report.add_row(std::move(row));
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_double_nonnegativity(Range m, std::size_t order) {
  require_range(m, "double nonnegativity sweep, m", 2);
  const auto start = Clock::now();
  std::vector<ReportRow> rows(static_cast<std::size_t>(m.size()));
  parallel_for(rows.size(), [&](std::size_t i) {
    const long m_value = m.lo + static_cast<long>(i);
    ReportRow& row = rows[i];
    row.index = static_cast<long>(i);
    row.witness.emplace_back("m", std::to_string(m_value));
    add_nonnegativity_witness(row, double_series(m_value, order));
  });
  VerificationReport report;
  report.identity = "double-series-nonnegativity";
  report.add_param("m", std::to_string(m.lo) + ".." + std::to_string(m.hi));
  report.add_param("N", std::to_string(order));
  for (auto& row : rows) report.add_row(std::move(row));
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_rearrangement(Range m, std::size_t order) {
  require_range(m, "rearrangement sweep, m", 2);
  const auto start = Clock::now();
  std::vector<ReportRow> rows(static_cast<std::size_t>(m.size()));
  parallel_for(rows.size(), [&](std::size_t i) {
    const long m_value = m.lo + static_cast<long>(i);
    const VerificationReport inner = identity_check(m_value, order);
    ReportRow& row = rows[i];
    row.index = static_cast<long>(i);
    row.pass = inner.overall;
    row.witness.emplace_back("m", std::to_string(m_value));
    row.witness.emplace_back("coefficients", std::to_string(inner.rows.size()));
    row.witness.emplace_back("mismatches", std::to_string(inner.failures()));
  });
  VerificationReport report;
  report.identity = "double-series-rearrangement";
  report.add_param("m", std::to_string(m.lo) + ".." + std::to_string(m.hi));
  report.add_param("N", std::to_string(order));
  for (auto& row : rows) report.add_row(std::move(row));
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_decomposition(Range s, Range m, long max_n) {
  require_range(s, "decomposition sweep, s", 1);
  require_range(m, "decomposition sweep, m", 1);
  if (max_n < 0) throw std::invalid_argument("decomposition sweep: max_n must be >= 0");
  const auto start = Clock::now();
  const std::size_t points =
      static_cast<std::size_t>(s.size()) * static_cast<std::size_t>(m.size());
  std::vector<ReportRow> rows(points);
  parallel_for(points, [&](std::size_t i) {
    const long s_value = s.lo + static_cast<long>(i) / m.size();
    const long m_value = m.lo + static_cast<long>(i) % m.size();
    const VerificationReport inner = verify_proof(s_value, m_value, max_n);
    ReportRow& row = rows[i];
    row.index = static_cast<long>(i);
    row.pass = inner.overall;
    row.witness.emplace_back("s", std::to_string(s_value));
    row.witness.emplace_back("m", std::to_string(m_value));
    row.witness.emplace_back("rows", std::to_string(inner.rows.size()));
    row.witness.emplace_back("failures", std::to_string(inner.failures()));
  });
  VerificationReport report;
  report.identity = "coefficient-decomposition";
  report.add_param("s", std::to_string(s.lo) + ".." + std::to_string(s.hi));
  report.add_param("m", std::to_string(m.lo) + ".." + std::to_string(m.hi));
  report.add_param("maxN", std::to_string(max_n));
  for (auto& row : rows) report.add_row(std::move(row));
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_parity_bias(long max_n) {
  if (max_n < 0) throw std::invalid_argument("parity bias sweep: max_n must be >= 0");
  const auto start = Clock::now();
  const BiasTable table(1, 2, 2, max_n);
  VerificationReport report;
  report.identity = "parity-bias";
  report.add_param("a", "1");
  report.add_param("b", "2");
  report.add_param("m", "2");
  report.add_param("maxN", std::to_string(max_n));
  for (long n = 0; n <= max_n; ++n) {
    // The inequality is asserted for every n except 2; the n = 2 values are
    // still reported.
    const bool asserted = n != 2;
    ReportRow row;
    row.index = n;
    row.pass = !asserted || table.more_a(n) >= table.more_b(n);
    row.witness.emplace_back("more_odd", table.more_a(n).str());
    row.witness.emplace_back("more_even", table.more_b(n).str());
    row.witness.emplace_back("difference", Int(table.more_a(n) - table.more_b(n)).str());
    row.witness.emplace_back("asserted", asserted ? "yes" : "no");
    report.add_row(std::move(row));
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_general_bias(Range m, long max_n) {
  require_range(m, "general bias sweep, m", 2);
  if (max_n < 0) throw std::invalid_argument("general bias sweep: max_n must be >= 0");
  const auto start = Clock::now();
  std::vector<std::tuple<long, long, long>> grid;  // (m, a, b), a < b
  for (long m_value = m.lo; m_value <= m.hi; ++m_value) {
    for (long a = 1; a <= m_value; ++a) {
      for (long b = a + 1; b <= m_value; ++b) grid.emplace_back(m_value, a, b);
    }
  }
  std::vector<ReportRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const auto [m_value, a, b] = grid[i];
    const BiasTable table(a, b, m_value, max_n);
    long first_violation = -1;
    for (long n = 0; n <= max_n; ++n) {
      if (table.more_a(n) < table.more_b(n)) {
        first_violation = n;
        break;
      }
    }
    ReportRow& row = rows[i];
    row.index = static_cast<long>(i);
    row.pass = first_violation < 0;
    row.witness.emplace_back("m", std::to_string(m_value));
    row.witness.emplace_back("a", std::to_string(a));
    row.witness.emplace_back("b", std::to_string(b));
    row.witness.emplace_back("checked", std::to_string(max_n + 1));
    row.witness.emplace_back(
        "first_violation",
        first_violation < 0 ? std::string("none") : std::to_string(first_violation));
  });
  VerificationReport report;
  report.identity = "general-bias";
  report.add_param("m", std::to_string(m.lo) + ".." + std::to_string(m.hi));
  report.add_param("maxN", std::to_string(max_n));
  for (auto& row : rows) report.add_row(std::move(row));
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace qbias
