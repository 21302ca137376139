#ifndef LOGITFP_TABLE_HPP
#define LOGITFP_TABLE_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace logitfp {

/// One output value. monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

enum class OutputFormat { Csv, Json };

/// Column-named rows, written as CSV (header + LF rows) or as a JSON array
/// with one object per row. Reals use 17 significant digits.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

std::string format_real(double v);

void write_csv(std::ostream& out, const Table& t);
void write_json(std::ostream& out, const Table& t);
void write_table(std::ostream& out, const Table& t, OutputFormat f);

std::string json_escape(const std::string& s);

}  // namespace logitfp

#endif  // LOGITFP_TABLE_HPP
