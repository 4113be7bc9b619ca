#include "hypmetric/hypmetric.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>
#include <string>

#include "hypmetric/ball_geometry.hpp"
#include "hypmetric/hyperbolicity.hpp"
#include "hypmetric/io.hpp"
#include "hypmetric/lens_lab.hpp"
#include "hypmetric/metric_space.hpp"
#include "hypmetric/quasigeodesic.hpp"
#include "hypmetric/table.hpp"

struct hm_space {
  hypmetric::FiniteMetricSpace space;
};
struct hm_region {
  hypmetric::Region region;
};
struct hm_path {
  hypmetric::SampledPath path;
};
struct hm_table {
  hypmetric::Table table;
};

namespace {

using namespace hypmetric;

thread_local std::string g_last_error;

hm_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return HM_INVALID_ARGUMENT;
    case ErrorCode::parse: return HM_PARSE;
    case ErrorCode::metric: return HM_METRIC;
    case ErrorCode::guard: return HM_GUARD;
    case ErrorCode::empty_region: return HM_EMPTY_REGION;
    case ErrorCode::not_quasi_geodesic: return HM_NOT_QUASI_GEODESIC;
    case ErrorCode::io: return HM_IO;
  }
  return HM_INTERNAL;
}

hm_status fail(hm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class Fn>
hm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HM_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HM_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HM_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::invalid_argument, std::string(what) + " is null");
}

void require_region(const hm_space* s, const hm_region* r) {
  require(s, "space");
  require(r, "region");
  if (r->region.universe() != s->space.size()) {
    throw Error(ErrorCode::invalid_argument, "region belongs to a different space");
  }
}

MetricMode to_mode(hm_metric_mode mode) {
  if (mode == HM_EUCLIDEAN) return MetricMode::euclidean;
  if (mode == HM_LOG_EUCLIDEAN) return MetricMode::log_euclidean;
  throw Error(ErrorCode::invalid_argument, "unknown metric mode");
}

TableFormat to_format(hm_format format) {
  if (format == HM_FORMAT_CSV) return TableFormat::csv;
  if (format == HM_FORMAT_JSON) return TableFormat::json;
  throw Error(ErrorCode::invalid_argument, "unknown table format");
}

void fill_validation(const ValidationReport& r, hm_validation* out) {
  out->violated = static_cast<hm_axiom>(r.violated);
  for (int k = 0; k < 3; ++k) out->witness[k] = r.witness[k];
  out->excess = r.excess;
  out->coincident_pairs = r.coincident_pairs;
  out->first_coincident[0] = r.first_coincident[0];
  out->first_coincident[1] = r.first_coincident[1];
}

void copy_text(const std::string& text, char* buf, size_t capacity, size_t* needed) {
  if (needed) *needed = text.size();
  if (buf && capacity > 0) {
    const size_t n = std::min(capacity - 1, text.size());
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  }
}

std::vector<int> int_list(const int* values, size_t count) {
  if (count > 0) require(values, "list");
  return std::vector<int>(values, values + count);
}

void emit_table(Table table, hm_table** out) {
  require(out, "out");
  *out = new hm_table{std::move(table)};
}

}  // namespace

extern "C" {

const char* hm_version(void) { return "1.0.0"; }

const char* hm_status_name(hm_status status) {
  switch (status) {
    case HM_OK: return "ok";
    case HM_INVALID_ARGUMENT: return "invalid_argument";
    case HM_PARSE: return "parse";
    case HM_METRIC: return "metric";
    case HM_GUARD: return "guard";
    case HM_EMPTY_REGION: return "empty_region";
    case HM_NOT_QUASI_GEODESIC: return "not_quasi_geodesic";
    case HM_IO: return "io";
    case HM_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* hm_last_error(void) { return g_last_error.c_str(); }

hm_status hm_space_from_points(size_t dim, size_t count, const double* coords,
                               hm_metric_mode mode, hm_space** out) {
  return guarded([&] {
    require(out, "out");
    if (count * dim > 0) require(coords, "coords");
    PointCloud cloud(dim, std::vector<double>(coords, coords + count * dim), to_mode(mode));
    *out = new hm_space{FiniteMetricSpace::from_cloud(std::move(cloud))};
  });
}

hm_status hm_space_from_matrix(size_t n, const double* values, hm_space** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(values, "values");
    DistanceMatrix m(n, std::vector<double>(values, values + n * n));
    *out = new hm_space{FiniteMetricSpace::from_matrix(std::move(m))};
  });
}

hm_status hm_space_load_points(const char* path, hm_metric_mode mode, hm_space** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new hm_space{FiniteMetricSpace::from_cloud(read_point_csv(path, to_mode(mode)))};
  });
}

hm_status hm_space_load_matrix(const char* path, hm_space** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new hm_space{FiniteMetricSpace::from_matrix(read_distance_csv(path))};
  });
}

hm_status hm_space_log_transform(const hm_space* space, hm_space** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = new hm_space{log_transform(space->space)};
  });
}

hm_status hm_space_write_matrix(const hm_space* space, const char* path) {
  return guarded([&] {
    require(space, "space");
    require(path, "path");
    if (std::strcmp(path, "-") == 0) {
      write_distance_csv(std::cout, space->space);
      std::cout.flush();
      return;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorCode::io, std::string("cannot write ") + path);
    write_distance_csv(file, space->space);
    if (!file) throw Error(ErrorCode::io, std::string("write failed: ") + path);
  });
}

void hm_space_free(hm_space* space) { delete space; }

size_t hm_space_size(const hm_space* space) { return space ? space->space.size() : 0; }

hm_status hm_space_distance(const hm_space* space, size_t i, size_t j, double* out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    if (i >= space->space.size() || j >= space->space.size()) {
      throw Error(ErrorCode::invalid_argument, "point index out of range");
    }
    *out = space->space(i, j);
  });
}

const char* hm_axiom_name(hm_axiom axiom) { return to_string(static_cast<Axiom>(axiom)); }

hm_status hm_space_validate(const hm_space* space, double tolerance, hm_validation* out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    fill_validation(validate_metric(space->space, tolerance), out);
  });
}

hm_status hm_matrix_validate(size_t n, const double* values, double tolerance,
                             hm_validation* out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(values, "values");
    DistanceMatrix m(n, std::vector<double>(values, values + n * n));
    fill_validation(validate_metric(m, tolerance), out);
  });
}

hm_status hm_matrix_file_validate(const char* path, double tolerance, hm_validation* out,
                                  size_t* size) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    const auto m = read_distance_csv(path);
    if (size) *size = m.n;
    fill_validation(validate_metric(m, tolerance), out);
  });
}

hm_status hm_region_create(const hm_space* space, const size_t* members, size_t count,
                           hm_region** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    if (count > 0) require(members, "members");
    *out = new hm_region{
        Region(space->space.size(), std::vector<std::size_t>(members, members + count))};
  });
}

hm_status hm_region_load(const hm_space* space, const char* path, hm_region** out) {
  return guarded([&] {
    require(space, "space");
    require(path, "path");
    require(out, "out");
    *out = new hm_region{read_region_file(path, space->space.size())};
  });
}

hm_status hm_region_ball(const hm_space* space, size_t center, double radius, hm_region** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = new hm_region{ball(space->space, center, radius)};
  });
}

hm_status hm_region_intersect_balls(const hm_space* space, size_t c1, double r1, size_t c2,
                                    double r2, hm_region** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = new hm_region{intersect_balls(space->space, {c1, r1}, {c2, r2})};
  });
}

void hm_region_free(hm_region* region) { delete region; }

size_t hm_region_size(const hm_region* region) { return region ? region->region.size() : 0; }

size_t hm_region_members(const hm_region* region, size_t* out, size_t capacity) {
  if (!region || !out) return 0;
  const auto& m = region->region.members();
  const size_t n = std::min(capacity, m.size());
  std::copy_n(m.begin(), n, out);
  return n;
}

int hm_region_equal(const hm_region* a, const hm_region* b) {
  if (!a || !b) return 0;
  return a->region == b->region ? 1 : 0;
}

hm_status hm_gromov_product(const hm_space* space, size_t p, size_t x, size_t y, double* out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    const auto n = space->space.size();
    if (p >= n || x >= n || y >= n) throw Error(ErrorCode::invalid_argument, "point index out of range");
    *out = gromov_product(space->space, p, x, y);
  });
}

namespace {
void fill_delta(const DeltaReport& r, hm_delta_result* out) {
  out->delta = r.delta;
  out->witness[0] = r.witness.p;
  out->witness[1] = r.witness.x;
  out->witness[2] = r.witness.y;
  out->witness[3] = r.witness.z;
  out->scanned = r.quadruples_scanned;
}
}  // namespace

hm_status hm_four_point_delta(const hm_space* space, unsigned threads, hm_delta_result* out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    fill_delta(four_point_delta(space->space, ScanOptions{threads}), out);
  });
}

hm_status hm_four_point_delta_fixed_base(const hm_space* space, size_t base, unsigned threads,
                                         hm_delta_result* out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    fill_delta(four_point_delta_fixed_base(space->space, base, ScanOptions{threads}), out);
  });
}

hm_status hm_ultrametric_delta(const hm_space* space, unsigned threads, hm_ultra_result* out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    const auto r = ultrametric_delta(space->space, ScanOptions{threads});
    out->delta_u = r.delta_u;
    for (int k = 0; k < 3; ++k) out->witness[k] = r.witness[k];
    out->scanned = r.triples_scanned;
  });
}

hm_status hm_inradius_at(const hm_space* space, size_t center, const hm_region* region,
                         double* out) {
  return guarded([&] {
    require_region(space, region);
    require(out, "out");
    if (center >= space->space.size()) throw Error(ErrorCode::invalid_argument, "center out of range");
    *out = inradius_at(space->space, center, region->region);
  });
}

hm_status hm_covering_radius(const hm_space* space, size_t center, const hm_region* region,
                             double* out) {
  return guarded([&] {
    require_region(space, region);
    require(out, "out");
    *out = covering_radius(space->space, center, region->region);
  });
}

hm_status hm_hausdorff_distance(const hm_space* space, const hm_region* a, const hm_region* b,
                                double* out) {
  return guarded([&] {
    require_region(space, a);
    require_region(space, b);
    require(out, "out");
    *out = hausdorff_distance(space->space, a->region, b->region);
  });
}

hm_status hm_eccentricity(const hm_space* space, const hm_region* region, unsigned threads,
                          hm_ecc_result* out) {
  return guarded([&] {
    require_region(space, region);
    require(out, "out");
    const auto r = eccentricity(space->space, region->region, BallGeometryOptions{threads});
    *out = hm_ecc_result{};
    out->ecc = r.ecc;
    out->has_balls = r.inner.has_value() ? 1 : 0;
    if (r.inner) {
      out->inner_center = r.inner->center;
      out->inner_radius = r.inner->radius;
      out->outer_center = r.outer->center;
      out->outer_radius = r.outer->radius;
    }
  });
}

hm_status hm_quasi_ball_defect(const hm_space* space, const hm_region* region, unsigned threads,
                               hm_quasi_ball_result* out) {
  return guarded([&] {
    require_region(space, region);
    require(out, "out");
    const auto r = quasi_ball_defect(space->space, region->region, BallGeometryOptions{threads});
    out->defect = r.defect;
    out->center = r.best.center;
    out->radius = r.best.radius;
  });
}

hm_status hm_weak_ecc_defect(const hm_space* space, const hm_region* region, double lambda,
                             unsigned threads, double* out) {
  return guarded([&] {
    require_region(space, region);
    require(out, "out");
    *out = weak_ecc_defect(space->space, region->region, lambda, BallGeometryOptions{threads});
  });
}

hm_status hm_path_create(const double* params, const double* xy, size_t count, hm_path** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) {
      require(params, "params");
      require(xy, "xy");
    }
    std::vector<Point2> pts(count);
    for (size_t i = 0; i < count; ++i) pts[i] = {xy[2 * i], xy[2 * i + 1]};
    for (size_t i = 0; i < count; ++i) {
      if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y)) {
        throw Error(ErrorCode::invalid_argument, "non-finite path point");
      }
    }
    *out = new hm_path{SampledPath(std::vector<double>(params, params + count), std::move(pts))};
  });
}

hm_status hm_path_load(const char* path, hm_path** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new hm_path{read_path_csv(path)};
  });
}

void hm_path_free(hm_path* path) { delete path; }

size_t hm_path_size(const hm_path* path) { return path ? path->path.size() : 0; }

hm_status hm_path_sample(const hm_path* path, size_t i, double* t, double* x, double* y) {
  return guarded([&] {
    require(path, "path");
    if (i >= path->path.size()) throw Error(ErrorCode::invalid_argument, "sample index out of range");
    if (t) *t = path->path.params[i];
    if (x) *x = path->path.points[i].x;
    if (y) *y = path->path.points[i].y;
  });
}

hm_status hm_qg_defect(const hm_path* path, double L, hm_metric_mode mode, hm_qg_result* out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    const auto r = qg_defect(path->path, L, to_mode(mode));
    *out = {r.defect, r.i, r.j};
  });
}

hm_status hm_log_segment_length(double length, double tolerance, double* out) {
  return guarded([&] {
    require(out, "out");
    if (!(tolerance > 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
    *out = log_segment_length(length, tolerance);
  });
}

hm_status hm_path_lengths(const hm_path* path, double tolerance, hm_lengths_result* out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    if (!(tolerance > 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
    if (path->path.size() < 1) throw Error(ErrorCode::invalid_argument, "path has no samples");
    const PLPath pl(path->path.params, path->path.points);
    out->segments = path->path.size() - 1;
    out->length_d = pl_length(pl, MetricMode::euclidean, tolerance);
    out->length_dprime = pl_length(pl, MetricMode::log_euclidean, tolerance);
    const auto& pts = path->path.points;
    out->chord_d = plane_distance(pts.front(), pts.back(), MetricMode::euclidean);
    out->chord_dprime = plane_distance(pts.front(), pts.back(), MetricMode::log_euclidean);
  });
}

hm_status hm_tame_constants_for(double L, double C, hm_tame_constants* out) {
  return guarded([&] {
    require(out, "out");
    const auto k = TameConstants::from({L, C});
    *out = {k.c_prime, k.k1, k.k2};
  });
}

hm_status hm_horizon(double L, double C, double tolerance, double* out) {
  return guarded([&] {
    require(out, "out");
    if (!(tolerance > 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
    *out = horizon({L, C}, tolerance);
  });
}

hm_status hm_tame(const hm_path* input, double L, double C, double probe_spacing,
                  double refine_tolerance, hm_tame_result* out, hm_path** tamed) {
  return guarded([&] {
    require(input, "input");
    require(out, "out");
    TameOptions options;
    options.probe_spacing = probe_spacing;
    options.refine_tolerance = refine_tolerance;
    if (!(refine_tolerance > 0.0)) {
      throw Error(ErrorCode::invalid_argument, "refine tolerance must be positive");
    }
    const auto r = tame(input->path, {L, C}, options);
    const auto& rep = r.report;
    out->constants = {r.constants.c_prime, r.constants.k1, r.constants.k2};
    out->probe_count = rep.probe_count;
    out->endpoints_preserved = rep.endpoints_preserved ? 1 : 0;
    out->qg_defect_probe = rep.qg_defect_probe;
    out->chord_arc_excess = rep.chord_arc_excess;
    out->chord_arc_excess_euclidean = rep.chord_arc_excess_euclidean;
    out->hausdorff = rep.hausdorff;
    out->hausdorff_bound = rep.hausdorff_bound;
    out->conclusion[0] = rep.conclusion1();
    out->conclusion[1] = rep.conclusion2();
    out->conclusion[2] = rep.conclusion3();
    out->conclusion[3] = rep.conclusion4();
    out->passed = rep.passed();
    if (tamed) *tamed = new hm_path{SampledPath(r.path.params(), r.path.breakpoints())};
  });
}

hm_status hm_lens_exact_stats(int n, hm_lens_stats* out) {
  return guarded([&] {
    require(out, "out");
    const auto s = lens_exact_stats(n);
    out->inradius = s.inradius;
    out->inradius_center[0] = s.inradius_center.x;
    out->inradius_center[1] = s.inradius_center.y;
    out->diameter = s.diameter;
    out->ecc_d = s.ecc_d;
    out->ecc_dprime = s.ecc_dprime;
  });
}

hm_status hm_lens_experiment(const int* n_list, size_t count, double h, double lambda,
                             unsigned threads, hm_table** out) {
  return guarded([&] {
    LensOptions options;
    options.lambda = lambda;
    options.threads = threads;
    emit_table(lens_table(ecc_growth_experiment(int_list(n_list, count), h, options)), out);
  });
}

hm_status hm_grid_experiment(const int* sides, size_t count, double spacing, int fixed_base,
                             int force, unsigned threads, hm_table** out) {
  return guarded([&] {
    GridOptions options;
    options.fixed_base = fixed_base != 0;
    options.force = force != 0;
    options.threads = threads;
    emit_table(grid_table(grid_experiment(int_list(sides, count), spacing, options)), out);
  });
}

hm_status hm_line_ultra_experiment(const int* n_list, size_t count, unsigned threads,
                                   hm_table** out) {
  return guarded([&] {
    std::vector<LineUltraResult> rows;
    for (int n : int_list(n_list, count)) rows.push_back(line_ultrametric_experiment(n, threads));
    emit_table(line_ultra_table(rows), out);
  });
}

hm_status hm_table_create(const char* const* columns, size_t count, hm_table** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(columns, "columns");
    std::vector<std::string> names;
    for (size_t i = 0; i < count; ++i) {
      require(columns[i], "column name");
      names.emplace_back(columns[i]);
    }
    *out = new hm_table{Table(std::move(names))};
  });
}

hm_status hm_table_add_row(hm_table* table, const hm_cell* cells, size_t count) {
  return guarded([&] {
    require(table, "table");
    if (count > 0) require(cells, "cells");
    std::vector<Table::Cell> row;
    row.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      switch (cells[i].kind) {
        case HM_CELL_NUMBER: row.emplace_back(cells[i].number); break;
        case HM_CELL_INTEGER: row.emplace_back(static_cast<std::int64_t>(cells[i].integer)); break;
        case HM_CELL_TEXT:
          require(cells[i].text, "cell text");
          row.emplace_back(std::string(cells[i].text));
          break;
        default: throw Error(ErrorCode::invalid_argument, "unknown cell kind");
      }
    }
    table->table.add_row(std::move(row));
  });
}

void hm_table_free(hm_table* table) { delete table; }

size_t hm_table_rows(const hm_table* table) { return table ? table->table.row_count() : 0; }

size_t hm_table_columns(const hm_table* table) {
  return table ? table->table.columns().size() : 0;
}

const char* hm_table_column_name(const hm_table* table, size_t column) {
  if (!table || column >= table->table.columns().size()) return nullptr;
  return table->table.columns()[column].c_str();
}

hm_status hm_table_number(const hm_table* table, size_t row, const char* column, double* out) {
  return guarded([&] {
    require(table, "table");
    require(column, "column");
    require(out, "out");
    if (row >= table->table.row_count()) throw Error(ErrorCode::invalid_argument, "row out of range");
    *out = table->table.number(row, column);
  });
}

hm_status hm_table_cell_text(const hm_table* table, size_t row, size_t column, char* buf,
                             size_t capacity, size_t* needed) {
  return guarded([&] {
    require(table, "table");
    if (row >= table->table.row_count() || column >= table->table.columns().size()) {
      throw Error(ErrorCode::invalid_argument, "cell out of range");
    }
    const auto& cell = table->table.at(row, column);
    std::string text;
    if (const auto* d = std::get_if<double>(&cell)) {
      text = format_number(*d);
    } else if (const auto* i = std::get_if<std::int64_t>(&cell)) {
      text = std::to_string(*i);
    } else {
      text = std::get<std::string>(cell);
    }
    copy_text(text, buf, capacity, needed);
  });
}

hm_status hm_table_write(const hm_table* table, const char* path, hm_format format) {
  return guarded([&] {
    require(table, "table");
    require(path, "path");
    const auto fmt = to_format(format);
    if (std::strcmp(path, "-") == 0) {
      table->table.write(std::cout, fmt);
      std::cout.flush();
      return;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorCode::io, std::string("cannot write ") + path);
    table->table.write(file, fmt);
    if (!file) throw Error(ErrorCode::io, std::string("write failed: ") + path);
  });
}

hm_status hm_table_render(const hm_table* table, hm_format format, char* buf, size_t capacity,
                          size_t* needed) {
  return guarded([&] {
    require(table, "table");
    std::ostringstream text;
    table->table.write(text, to_format(format));
    copy_text(text.str(), buf, capacity, needed);
  });
}

hm_status hm_format_number(double value, char* buf, size_t capacity, size_t* needed) {
  return guarded([&] { copy_text(format_number(value), buf, capacity, needed); });
}

}  // extern "C"
