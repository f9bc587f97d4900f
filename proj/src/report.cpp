#include "qbias/report.hpp"

#include <ostream>

#include "json.hpp"

namespace qbias {

void VerificationReport::add_param(std::string key, std::string value) {
  parameters.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::add_row(ReportRow row) {
  overall = overall && row.pass;
  rows.push_back(std::move(row));
}

std::size_t VerificationReport::failures() const {
  std::size_t total = 0;
  for (const auto& row : rows) {
    if (!row.pass) ++total;
  }
  return total;
}

void VerificationReport::write_text(std::ostream& out) const {
  out << "# identity=" << identity;
  for (const auto& [key, value] : parameters) out << ' ' << key << '=' << value;
  out << '\n';
  for (const auto& row : rows) {
    out << row.index << '\t' << (row.pass ? "PASS" : "FAIL");
    for (const auto& [key, value] : row.witness) out << '\t' << key << '=' << value;
    out << '\n';
  }
  out << "# overall=" << (overall ? "PASS" : "FAIL") << " rows=" << rows.size()
      << " failures=" << failures() << '\n';
}

std::string VerificationReport::to_json_string(int indent) const {
  nlohmann::ordered_json doc;
  doc["identity"] = identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  doc["parameters"] = std::move(params);
  nlohmann::ordered_json row_list = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json entry;
    entry["index"] = row.index;
    entry["pass"] = row.pass;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();
    for (const auto& [key, value] : row.witness) witness[key] = value;
    entry["witness"] = std::move(witness);
    row_list.push_back(std::move(entry));
  }
  doc["rows"] = std::move(row_list);
  doc["overall"] = overall;
  return doc.dump(indent);
}

}  // namespace qbias
