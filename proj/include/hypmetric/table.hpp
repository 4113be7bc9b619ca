#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace hypmetric {

enum class TableFormat { csv, json };

/// Shortest decimal text that round-trips to the same double; "inf", "-inf"
/// and "nan" for non-finite values. Independent of the C locale.
std::string format_number(double value);

/// Column-named result table. CSV is the canonical rendering (header row
/// first); JSON is an array of row objects with the same fields.
class Table {
 public:
  using Cell = std::variant<double, std::int64_t, std::string>;

  Table() = default;
  explicit Table(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }

  void add_row(std::vector<Cell> row);
  const Cell& at(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }
  /// Column index by name; throws Error(invalid_argument) if missing.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;

  void write(std::ostream& out, TableFormat format) const;
  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace hypmetric
