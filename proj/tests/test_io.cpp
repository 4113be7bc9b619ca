#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hypmetric/io.hpp"
#include "hypmetric/table.hpp"
#include "json.hpp"

using namespace hypmetric;

namespace {

std::string parse_message(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("point cloud CSV") {
  const auto cloud = parse_point_csv("x0,x1\n0,0\n# comment\n\n3,4\n-1.5e0, +2\n");
  CHECK(cloud.size() == 3);
  CHECK(cloud.dim() == 2);
  CHECK(cloud.distance(0, 1) == 5.0);
  CHECK(cloud.point(2)[0] == -1.5);
  CHECK(parse_point_csv("x0\n1\n", MetricMode::log_euclidean).mode() == MetricMode::log_euclidean);

  CHECK(parse_message([] { parse_point_csv("a,b\n1,2\n"); }).find("line 1") != std::string::npos);
  CHECK(parse_message([] { parse_point_csv("x0,x1\n1,2\n3\n"); }).find("line 3") != std::string::npos);
  CHECK(parse_message([] { parse_point_csv("x0,x1\n1,zz\n"); }).find("'zz'") != std::string::npos);
  CHECK(parse_message([] { parse_point_csv("x0\ninf\n"); }).find("non-finite") != std::string::npos);
  parse_message([] { parse_point_csv(""); });
}

TEST_CASE("distance matrix CSV") {
  const auto m = parse_distance_csv("0,1\r\n1,0\r\n");
  CHECK(m.n == 2);
  CHECK(m.at(0, 1) == 1.0);
  CHECK(parse_message([] { parse_distance_csv("0,1\n1,0,2\n"); }).find("square") != std::string::npos);
  CHECK(parse_distance_csv("").n == 0);
}

TEST_CASE("region file") {
  const auto r = parse_region("3\n1\n\n1\n", 5);
  CHECK(r.members() == std::vector<std::size_t>{1, 3});
  CHECK(parse_message([] { parse_region("7\n", 5); }).find("out of range") != std::string::npos);
  CHECK(parse_message([] { parse_region("-1\n", 5); }).find("line 1") != std::string::npos);
  CHECK(parse_message([] { parse_region("1.5\n", 5); }).find("line 1") != std::string::npos);
}

TEST_CASE("path CSV") {
  const auto with_header = parse_path_csv("t,x,y\n0,0,0\n1,1,0\n");
  const auto without = parse_path_csv("0,0,0\n1,1,0\n");
  CHECK(with_header.params == without.params);
  CHECK(with_header.points == without.points);
  CHECK(parse_message([] { parse_path_csv("a,b,c\n0,0,0\n"); }).find("t,x,y") != std::string::npos);
  CHECK(parse_message([] { parse_path_csv("1,0,0\n0,0,0\n"); }).find("increasing") !=
        std::string::npos);
  CHECK(parse_message([] { parse_path_csv("1,0\n"); }).find("line 1") != std::string::npos);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "hypmetric_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "pts.csv") << "x0\n0\n2\n";
  }
  const auto cloud = read_point_csv(dir / "pts.csv");
  CHECK(cloud.distance(0, 1) == 2.0);
  try {
    read_point_csv(dir / "missing.csv");
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io);
  }
  {
    std::ofstream(dir / "bad.csv") << "x0\nfoo\n";
  }
  try {
    read_point_csv(dir / "bad.csv");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("bad.csv: line 2") != std::string::npos);
  }
  std::ostringstream out;
  write_distance_csv(out, FiniteMetricSpace::from_cloud(cloud));
  CHECK(out.str() == "0,2\n2,0\n");
  CHECK(parse_distance_csv(out.str()).at(1, 0) == 2.0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5, std::sqrt(2.0)}) {
    const auto text = format_number(v);
    CHECK(std::stod(text) == v);
  }
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(-INFINITY) == "-inf");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("tables") {
  Table t({"name", "value", "count"});
  t.add_row({std::string("a,b"), 0.5, std::int64_t{3}});
  t.add_row({std::string("say \"hi\""), INFINITY, std::int64_t{-1}});
  CHECK_THROWS_AS(t.add_row({1.0}), Error);
  CHECK(t.number(0, "value") == 0.5);
  CHECK(t.number(0, "count") == 3.0);
  CHECK_THROWS_AS(t.number(0, "name"), Error);
  CHECK_THROWS_AS(t.column("nope"), Error);

  std::ostringstream csv;
  t.write(csv, TableFormat::csv);
  CHECK(csv.str() == "name,value,count\n\"a,b\",0.5,3\n\"say \"\"hi\"\"\",inf,-1\n");

  std::ostringstream json;
  t.write(json, TableFormat::json);
  const auto parsed = nlohmann::json::parse(json.str());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["name"] == "a,b");
  CHECK(parsed[0]["value"] == 0.5);
  CHECK(parsed[0]["count"] == 3);
  CHECK(parsed[1]["name"] == "say \"hi\"");
  CHECK(parsed[1]["value"] == "inf");

  std::ostringstream empty;
  Table({"a"}).write_json(empty);
  CHECK(nlohmann::json::parse(empty.str()).empty());
}
