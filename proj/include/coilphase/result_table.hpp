#ifndef COILPHASE_RESULT_TABLE_HPP
#define COILPHASE_RESULT_TABLE_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace coilphase {

using Cell = std::variant<double, long long, std::string>;

/// Flat result rows with a stable column order and deterministic metadata
/// (subcommand, version, config hash, seed; never timestamps).
struct ResultTable {
  std::string name;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Canonical number rendering: %.15g, C locale.
std::string format_number(double value);

/// Comma-separated, '.' decimal, LF line endings, UTF-8. Metadata rides in
/// leading '# key=value' lines, then the header row, then data rows.
std::string to_csv(const ResultTable& table);

/// {"meta": {...}, "columns": [...], "rows": [[...], ...]}; doubles pass
/// through the %.15g rendering so both formats agree on emitted precision.
std::string to_json_text(const ResultTable& table);

}  // namespace coilphase

#endif  // COILPHASE_RESULT_TABLE_HPP
