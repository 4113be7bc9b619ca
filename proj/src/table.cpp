#include "hypmetric/table.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>

#include "hypmetric/error.hpp"

namespace hypmetric {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_string(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string cell_text(const Table::Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw Error(ErrorCode::invalid_argument, "row width does not match the table columns");
  }
  rows_.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw Error(ErrorCode::invalid_argument, "no column named " + name);
}

double Table::number(std::size_t row, const std::string& name) const {
  const auto& cell = at(row, column(name));
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  throw Error(ErrorCode::invalid_argument, "column " + name + " is not numeric");
}

void Table::write(std::ostream& out, TableFormat format) const {
  if (format == TableFormat::csv) {
    write_csv(out);
  } else {
    write_json(out);
  }
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    out << (c ? "," : "") << csv_field(columns_[c]);
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << csv_field(cell_text(row[c]));
    }
    out << '\n';
  }
}

void Table::write_json(std::ostream& out) const {
  out << '[';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out << (r ? ",\n " : "\n ") << '{';
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      out << (c ? ", " : "") << json_string(columns_[c]) << ": ";
      const auto& cell = rows_[r][c];
      if (const auto* d = std::get_if<double>(&cell)) {
        const auto text = format_number(*d);
        out << (std::isfinite(*d) ? text : json_string(text));
      } else if (const auto* s = std::get_if<std::string>(&cell)) {
        out << json_string(*s);
      } else {
        out << cell_text(cell);
      }
    }
    out << '}';
  }
  out << (rows_.empty() ? "]\n" : "\n]\n");
}

}  // namespace hypmetric
