/**
 * @file format.hpp
 * @brief CSV/JSON table emission with lossless double formatting.
 *
 * Doubles are printed with 17 significant digits in CSV so every cell
 * round-trips bit-exactly; the JSON writer mirrors the same rows under the
 * same field names.
 */

#pragma once

#include <string>
#include <variant>
#include <vector>

namespace elliptope {

using Cell = std::variant<std::string, long long, double, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// %.17g rendering: parses back to the identical double.
std::string format_g17(double value);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

/// Writes csv or json according to `format` ("csv"/"json").
void write_table(const Table& table, const std::string& path, const std::string& format);

}  // namespace elliptope
