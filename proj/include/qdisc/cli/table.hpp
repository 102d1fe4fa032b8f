#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace qdisc::cli {

inline constexpr const char* kToolVersion = "qdisc 0.1.0";

using Cell = std::variant<double, long, std::string>;

/// A rectangular result set with leading comment lines. Row order is the
/// order rows were appended.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// %.9g, with "inf" / "-inf" / "nan" for non-finite values.
std::string format_number(double v);

/// Comment lines prefixed by "# ", a header row, then one row per entry.
void write_csv(const Table& table, std::ostream& out);

/// {"comments": [...], "columns": [...], "rows": [[...], ...]}. Numbers are
/// rounded to 9 significant digits; non-finite numbers become strings.
void write_json(const Table& table, std::ostream& out);

}  // namespace qdisc::cli
