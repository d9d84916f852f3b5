#include "coilphase/result_table.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace coilphase {

namespace {

std::string cell_text(const Cell& cell) {
  if (std::holds_alternative<double>(cell)) return format_number(std::get<double>(cell));
  if (std::holds_alternative<long long>(cell)) return std::to_string(std::get<long long>(cell));
  return std::get<std::string>(cell);
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // fold negative zero
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", value);
  return std::string(buffer);
}

std::string to_csv(const ResultTable& table) {
  std::ostringstream out;
  for (const auto& [key, value] : table.metadata) out << "# " << key << "=" << value << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ",";
    out << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << cell_text(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string to_json_text(const ResultTable& table) {
  nlohmann::json doc;
  doc["meta"] = nlohmann::json::object();
  for (const auto& [key, value] : table.metadata) doc["meta"][key] = value;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json json_row = nlohmann::json::array();
    for (const Cell& cell : row) {
      if (std::holds_alternative<double>(cell)) {
        // Round-trip through the canonical %.15g rendering so CSV and JSON
        // emit the same precision.
        json_row.push_back(std::strtod(format_number(std::get<double>(cell)).c_str(), nullptr));
      } else if (std::holds_alternative<long long>(cell)) {
        json_row.push_back(std::get<long long>(cell));
      } else {
        json_row.push_back(std::get<std::string>(cell));
      }
    }
    doc["rows"].push_back(std::move(json_row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace coilphase
