#include "hypmetric/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hypmetric/table.hpp"

namespace hypmetric {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits into lines, dropping blank lines and '#' comments; keeps line numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    auto line = trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(std::string_view field, std::size_t line) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    parse_error(line, "expected a number, got '" + std::string(field) + "'");
  }
  return value;
}

bool is_number(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  return ec == std::errc() && ptr == field.data() + field.size() && !field.empty();
}

}  // namespace

PointCloud parse_point_csv(std::string_view text, MetricMode mode) {
  const auto lines = content_lines(text);
  if (lines.empty()) parse_error(1, "missing header row x0,x1,...");
  const auto header = split_fields(lines.front().second);
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] != "x" + std::to_string(k)) {
      parse_error(lines.front().first, "header must be x0,x1,...; got '" +
                                           std::string(lines.front().second) + "'");
    }
  }
  const std::size_t dim = header.size();
  std::vector<double> coords;
  coords.reserve((lines.size() - 1) * dim);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto [number, line] = lines[r];
    const auto fields = split_fields(line);
    if (fields.size() != dim) {
      parse_error(number, "expected " + std::to_string(dim) + " fields, got " +
                              std::to_string(fields.size()));
    }
    for (auto f : fields) {
      const double v = parse_double(f, number);
      if (!std::isfinite(v)) parse_error(number, "non-finite coordinate");
      coords.push_back(v);
    }
  }
  return PointCloud(dim, std::move(coords), mode);
}

DistanceMatrix parse_distance_csv(std::string_view text) {
  const auto lines = content_lines(text);
  const std::size_t n = lines.size();
  std::vector<double> values;
  values.reserve(n * n);
  for (const auto& [number, line] : lines) {
    const auto fields = split_fields(line);
    if (fields.size() != n) {
      parse_error(number, "expected " + std::to_string(n) + " entries (square matrix), got " +
                              std::to_string(fields.size()));
    }
    for (auto f : fields) values.push_back(parse_double(f, number));
  }
  return DistanceMatrix(n, std::move(values));
}

Region parse_region(std::string_view text, std::size_t universe) {
  std::vector<std::size_t> members;
  for (const auto& [number, line] : content_lines(text)) {
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), index);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      parse_error(number, "expected a point index, got '" + std::string(line) + "'");
    }
    if (index >= universe) {
      parse_error(number, "point index " + std::to_string(index) + " out of range (space has " +
                              std::to_string(universe) + " points)");
    }
    members.push_back(index);
  }
  return Region(universe, std::move(members));
}

SampledPath parse_path_csv(std::string_view text) {
  auto lines = content_lines(text);
  if (!lines.empty()) {
    const auto fields = split_fields(lines.front().second);
    if (!fields.empty() && !is_number(fields.front())) {
      if (fields.size() != 3 || fields[0] != "t" || fields[1] != "x" || fields[2] != "y") {
        parse_error(lines.front().first, "path header must be t,x,y");
      }
      lines.erase(lines.begin());
    }
  }
  std::vector<double> params;
  std::vector<Point2> points;
  for (const auto& [number, line] : lines) {
    const auto fields = split_fields(line);
    if (fields.size() != 3) parse_error(number, "expected t,x,y");
    const double t = parse_double(fields[0], number);
    const Point2 p{parse_double(fields[1], number), parse_double(fields[2], number)};
    if (!std::isfinite(t) || !std::isfinite(p.x) || !std::isfinite(p.y)) {
      parse_error(number, "non-finite value");
    }
    if (!params.empty() && !(params.back() < t)) {
      parse_error(number, "parameters must be strictly increasing");
    }
    params.push_back(t);
    points.push_back(p);
  }
  return SampledPath(std::move(params), std::move(points));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

template <class Fn>
auto with_file(const std::filesystem::path& path, Fn&& fn) {
  const auto text = read_text_file(path);
  try {
    return fn(std::string_view(text));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::parse) throw;
    throw Error(ErrorCode::parse, path.string() + ": " + e.what());
  }
}

}  // namespace

PointCloud read_point_csv(const std::filesystem::path& path, MetricMode mode) {
  return with_file(path, [&](std::string_view t) { return parse_point_csv(t, mode); });
}

DistanceMatrix read_distance_csv(const std::filesystem::path& path) {
  return with_file(path, [](std::string_view t) { return parse_distance_csv(t); });
}

Region read_region_file(const std::filesystem::path& path, std::size_t universe) {
  return with_file(path, [&](std::string_view t) { return parse_region(t, universe); });
}

SampledPath read_path_csv(const std::filesystem::path& path) {
  return with_file(path, [](std::string_view t) { return parse_path_csv(t); });
}

void write_distance_csv(std::ostream& out, const FiniteMetricSpace& space) {
  std::vector<double> row(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    space.fill_row(i, row);
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_number(row[j]);
    out << '\n';
  }
}

}  // namespace hypmetric
