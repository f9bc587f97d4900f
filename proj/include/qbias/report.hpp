#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qbias {

struct ReportRow {
  long index = 0;
  bool pass = true;
  // Named exact values backing the verdict, in print order.
  std::vector<std::pair<std::string, std::string>> witness;
};

// Per-row verdicts for one named identity or inequality. overall is PASS
// exactly when every row passes; add_row keeps that invariant.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ReportRow> rows;
  bool overall = true;
  std::int64_t elapsed_ms = 0;

  void add_param(std::string key, std::string value);
  void add_row(ReportRow row);
  std::size_t failures() const;

  // Deterministic renderings: identical reports produce identical bytes.
  // Timing is deliberately absent; it goes to the diagnostics stream.
  void write_text(std::ostream& out) const;
  std::string to_json_string(int indent = 1) const;
};

}  // namespace qbias
