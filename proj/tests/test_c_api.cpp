#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "hypmetric/hypmetric.h"
#include "json.hpp"

namespace {

hm_space* square(hm_metric_mode mode = HM_EUCLIDEAN) {
  const double coords[] = {0, 0, 1, 0, 0, 1, 1, 1};
  hm_space* space = nullptr;
  REQUIRE(hm_space_from_points(2, 4, coords, mode, &space) == HM_OK);
  return space;
}

std::string render(const hm_table* table, hm_format format) {
  size_t needed = 0;
  REQUIRE(hm_table_render(table, format, nullptr, 0, &needed) == HM_OK);
  std::string text(needed + 1, '\0');
  REQUIRE(hm_table_render(table, format, text.data(), text.size(), &needed) == HM_OK);
  text.resize(needed);
  return text;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(hm_version()) == "1.0.0");
  CHECK(std::string(hm_status_name(HM_OK)) == "ok");
  CHECK(std::string(hm_status_name(HM_GUARD)) == "guard");
  hm_space* space = nullptr;
  CHECK(hm_space_from_points(2, 1, nullptr, HM_EUCLIDEAN, &space) == HM_INVALID_ARGUMENT);
  CHECK(space == nullptr);
  CHECK(std::strlen(hm_last_error()) > 0);
  CHECK(hm_space_load_points("/nonexistent/file.csv", HM_EUCLIDEAN, &space) == HM_IO);
  CHECK(std::string(hm_last_error()).find("/nonexistent/file.csv") != std::string::npos);
}

TEST_CASE("spaces and validation") {
  hm_space* space = square();
  CHECK(hm_space_size(space) == 4);
  double d = 0;
  CHECK(hm_space_distance(space, 0, 3, &d) == HM_OK);
  CHECK(d == std::sqrt(2.0));
  CHECK(hm_space_distance(space, 0, 4, &d) == HM_INVALID_ARGUMENT);

  hm_space* logged = nullptr;
  REQUIRE(hm_space_log_transform(space, &logged) == HM_OK);
  CHECK(hm_space_distance(logged, 0, 3, &d) == HM_OK);
  CHECK(d == std::log1p(std::sqrt(2.0)));
  hm_validation v{};
  CHECK(hm_space_validate(logged, 1e-9, &v) == HM_OK);
  CHECK(v.violated == HM_AXIOM_NONE);

  const double bad[] = {0, 1, 5, 1, 0, 1, 5, 1, 0};
  CHECK(hm_matrix_validate(3, bad, 1e-9, &v) == HM_OK);
  CHECK(v.violated == HM_AXIOM_TRIANGLE);
  CHECK(std::string(hm_axiom_name(v.violated)) == "triangle");
  CHECK(v.excess == 3.0);
  hm_space* invalid = nullptr;
  CHECK(hm_space_from_matrix(3, bad, &invalid) == HM_METRIC);
  CHECK(invalid == nullptr);

  hm_space_free(logged);
  hm_space_free(space);
  hm_space_free(nullptr);
}

TEST_CASE("regions and ball geometry") {
  hm_space* space = square();
  const size_t members[] = {3, 0, 3};
  hm_region* diag = nullptr;
  REQUIRE(hm_region_create(space, members, 3, &diag) == HM_OK);
  CHECK(hm_region_size(diag) == 2);
  size_t out[4] = {};
  CHECK(hm_region_members(diag, out, 4) == 2);
  CHECK(out[0] == 0);
  CHECK(out[1] == 3);

  hm_region* ball = nullptr;
  REQUIRE(hm_region_ball(space, 0, 1.0, &ball) == HM_OK);
  CHECK(hm_region_size(ball) == 3);
  hm_region* lens = nullptr;
  REQUIRE(hm_region_intersect_balls(space, 0, 1.0, 3, 1.0, &lens) == HM_OK);
  CHECK(hm_region_size(lens) == 2);
  CHECK(hm_region_equal(lens, diag) == 0);

  double value = 0;
  CHECK(hm_hausdorff_distance(space, diag, ball, &value) == HM_OK);
  CHECK(value == 1.0);
  CHECK(hm_covering_radius(space, 1, diag, &value) == HM_OK);
  CHECK(value == 1.0);
  CHECK(hm_inradius_at(space, 1, diag, &value) == HM_INVALID_ARGUMENT);

  hm_ecc_result ecc{};
  CHECK(hm_eccentricity(space, diag, 1, &ecc) == HM_OK);
  CHECK(ecc.has_balls == 1);
  CHECK(ecc.ecc == 0.0);
  hm_quasi_ball_result qb{};
  CHECK(hm_quasi_ball_defect(space, diag, 1, &qb) == HM_OK);
  CHECK(qb.defect >= 0.0);
  CHECK(hm_weak_ecc_defect(space, diag, 0.5, 1, &value) == HM_INVALID_ARGUMENT);

  hm_region* empty = nullptr;
  REQUIRE(hm_region_create(space, nullptr, 0, &empty) == HM_OK);
  CHECK(hm_eccentricity(space, empty, 1, &ecc) == HM_OK);
  CHECK(ecc.has_balls == 0);
  CHECK(hm_quasi_ball_defect(space, empty, 1, &qb) == HM_EMPTY_REGION);

  for (hm_region* r : {diag, ball, lens, empty}) hm_region_free(r);
  hm_space_free(space);
}

TEST_CASE("hyperbolicity") {
  hm_space* space = square();
  hm_delta_result delta{};
  REQUIRE(hm_four_point_delta(space, 2, &delta) == HM_OK);
  CHECK(std::abs(delta.delta - (std::sqrt(2.0) - 1.0)) <= 1e-12);
  CHECK(delta.scanned == 160);
  hm_delta_result fixed{};
  REQUIRE(hm_four_point_delta_fixed_base(space, 0, 1, &fixed) == HM_OK);
  CHECK(fixed.delta <= delta.delta);
  CHECK(hm_four_point_delta_fixed_base(space, 9, 1, &fixed) == HM_INVALID_ARGUMENT);
  double g = 0;
  CHECK(hm_gromov_product(space, 0, 1, 2, &g) == HM_OK);
  CHECK(g == doctest::Approx(1.0 - std::sqrt(0.5)));

  const double line[] = {0, 1, 2};
  hm_space* pts = nullptr;
  REQUIRE(hm_space_from_points(1, 3, line, HM_LOG_EUCLIDEAN, &pts) == HM_OK);
  hm_ultra_result ultra{};
  REQUIRE(hm_ultrametric_delta(pts, 1, &ultra) == HM_OK);
  CHECK(ultra.delta_u == doctest::Approx(std::log(1.5)));
  CHECK(ultra.witness[0] == 0);
  CHECK(ultra.witness[1] == 2);
  CHECK(ultra.witness[2] == 1);
  hm_space_free(pts);
  hm_space_free(space);
}

TEST_CASE("paths, lengths and taming") {
  const double params[] = {0, 1, 2, 3};
  const double xy[] = {0, 0, 1, 0, 2, 0, 3, 0};
  hm_path* path = nullptr;
  REQUIRE(hm_path_create(params, xy, 4, &path) == HM_OK);
  CHECK(hm_path_size(path) == 4);
  double t = 0, x = 0, y = 0;
  CHECK(hm_path_sample(path, 2, &t, &x, &y) == HM_OK);
  CHECK((t == 2.0 && x == 2.0 && y == 0.0));

  hm_lengths_result lengths{};
  REQUIRE(hm_path_lengths(path, 1e-9, &lengths) == HM_OK);
  CHECK(lengths.segments == 3);
  CHECK(lengths.length_d == 3.0);
  CHECK(lengths.length_dprime <= 3.0);
  CHECK(lengths.length_dprime > 3.0 - 1e-6);
  CHECK(lengths.chord_dprime == std::log1p(3.0));

  hm_qg_result qg{};
  CHECK(hm_qg_defect(path, 1.0, HM_EUCLIDEAN, &qg) == HM_OK);
  CHECK(qg.defect == 0.0);

  hm_tame_constants k{};
  CHECK(hm_tame_constants_for(2.0, 1.0, &k) == HM_OK);
  CHECK((k.c_prime == 9.0 && k.k1 == 6.0 && k.k2 == 66.0));
  double d = 0;
  CHECK(hm_horizon(1.0, 0.0, 1e-12, &d) == HM_OK);
  CHECK(std::abs(d - 2.3356) < 1e-3);

  hm_tame_result tame{};
  hm_path* tamed = nullptr;
  REQUIRE(hm_tame(path, 2.0, 1.0, 0.1, 1e-6, &tame, &tamed) == HM_OK);
  CHECK(tame.passed == 1);
  CHECK(tame.conclusion[0] == 1);
  CHECK(hm_path_size(tamed) == 4);
  hm_path_free(tamed);

  const double far_xy[] = {0, 0, 100, 0, 200, 0, 300, 0};
  hm_path* far = nullptr;
  REQUIRE(hm_path_create(params, far_xy, 4, &far) == HM_OK);
  CHECK(hm_tame(far, 1.0, 0.0, 0.1, 1e-6, &tame, nullptr) == HM_NOT_QUASI_GEODESIC);
  hm_path_free(far);

  const double decreasing[] = {1, 0};
  CHECK(hm_path_create(decreasing, xy, 2, &far) == HM_INVALID_ARGUMENT);
  hm_path_free(path);
}

TEST_CASE("experiments and tables") {
  hm_lens_stats stats{};
  REQUIRE(hm_lens_exact_stats(4, &stats) == HM_OK);
  CHECK(stats.inradius == 1.0);
  CHECK(stats.diameter == 6.0);
  CHECK(hm_lens_exact_stats(0, &stats) == HM_INVALID_ARGUMENT);

  const int ns[] = {1, 2};
  hm_table* lens = nullptr;
  REQUIRE(hm_lens_experiment(ns, 2, 0.25, 2.0, 1, &lens) == HM_OK);
  CHECK(hm_table_rows(lens) == 2);
  double ecc = 0;
  CHECK(hm_table_number(lens, 1, "ecc_d", &ecc) == HM_OK);
  CHECK(ecc > 0.0);
  CHECK(hm_table_number(lens, 1, "nope", &ecc) == HM_INVALID_ARGUMENT);
  const auto json = nlohmann::json::parse(render(lens, HM_FORMAT_JSON));
  CHECK(json.size() == 2);
  CHECK(json[0]["n"] == 1);
  hm_table_free(lens);

  const int sides[] = {21};
  hm_table* grid = nullptr;
  CHECK(hm_grid_experiment(sides, 1, 1.0, 0, 0, 1, &grid) == HM_GUARD);
  CHECK(grid == nullptr);
  const int small[] = {2};
  REQUIRE(hm_grid_experiment(small, 1, 1.0, 0, 0, 1, &grid) == HM_OK);
  double delta = 0;
  CHECK(hm_table_number(grid, 0, "delta_d", &delta) == HM_OK);
  CHECK(delta == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  hm_table_free(grid);

  const int big_n[] = {2};
  hm_table* line = nullptr;
  REQUIRE(hm_line_ultra_experiment(big_n, 1, 1, &line) == HM_OK);
  CHECK(render(line, HM_FORMAT_CSV).rfind("N,delta_u,gap_to_ln2", 0) == 0);
  hm_table_free(line);
}

TEST_CASE("building tables") {
  const char* columns[] = {"label", "value", "count"};
  hm_table* table = nullptr;
  REQUIRE(hm_table_create(columns, 3, &table) == HM_OK);
  CHECK(hm_table_columns(table) == 3);
  CHECK(std::string(hm_table_column_name(table, 1)) == "value");
  hm_cell cells[3] = {{HM_CELL_TEXT, 0, 0, "x,y"}, {HM_CELL_NUMBER, 0.25, 0, nullptr},
                      {HM_CELL_INTEGER, 0, 7, nullptr}};
  REQUIRE(hm_table_add_row(table, cells, 3) == HM_OK);
  CHECK(hm_table_add_row(table, cells, 2) == HM_INVALID_ARGUMENT);
  CHECK(render(table, HM_FORMAT_CSV) == "label,value,count\n\"x,y\",0.25,7\n");

  char buf[4];
  size_t needed = 0;
  CHECK(hm_table_cell_text(table, 0, 1, buf, sizeof buf, &needed) == HM_OK);
  CHECK(needed == 4);
  CHECK(std::string(buf) == "0.2");
  CHECK(hm_table_cell_text(table, 3, 0, buf, sizeof buf, &needed) == HM_INVALID_ARGUMENT);

  char num[32];
  CHECK(hm_format_number(0.1, num, sizeof num, &needed) == HM_OK);
  CHECK(std::string(num) == "0.1");
  hm_table_free(table);
}
