#pragma once

// Row tables shared by every subcommand, written as RFC-4180 CSV or JSON.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qswitch::app {

// monostate is an empty cell (CSV "", JSON null).
using Cell = std::variant<std::monostate, double, std::string, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

// 12 significant digits, shortest %g form; non-finite values are empty.
std::string format_number(double value);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

}  // namespace qswitch::app
