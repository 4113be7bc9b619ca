/* C interface to the hypmetric library.
 *
 * Objects are opaque handles created by hm_*_create / hm_*_load functions
 * and released with the matching hm_*_free. Every fallible call returns an
 * hm_status; on failure hm_last_error() describes the problem for the
 * calling thread. */
#ifndef HYPMETRIC_H
#define HYPMETRIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(HM_BUILDING_LIBRARY)
#define HM_API __attribute__((visibility("default")))
#else
#define HM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hm_status {
  HM_OK = 0,
  HM_INVALID_ARGUMENT = 1,
  HM_PARSE = 2,
  HM_METRIC = 3,
  HM_GUARD = 4,
  HM_EMPTY_REGION = 5,
  HM_NOT_QUASI_GEODESIC = 6,
  HM_IO = 7,
  HM_INTERNAL = 8
} hm_status;

typedef enum hm_metric_mode { HM_EUCLIDEAN = 0, HM_LOG_EUCLIDEAN = 1 } hm_metric_mode;
typedef enum hm_format { HM_FORMAT_CSV = 0, HM_FORMAT_JSON = 1 } hm_format;

typedef struct hm_space hm_space;
typedef struct hm_region hm_region;
typedef struct hm_path hm_path;
typedef struct hm_table hm_table;

HM_API const char* hm_version(void);
HM_API const char* hm_status_name(hm_status status);
/* Message of the last failed call on this thread; "" if none. */
HM_API const char* hm_last_error(void);

/* ---- metric spaces ---- */

/* count points of dimension dim, coordinates row-major. */
HM_API hm_status hm_space_from_points(size_t dim, size_t count, const double* coords,
                                      hm_metric_mode mode, hm_space** out);
/* n x n row-major matrix; validated (pseudometrics are accepted). */
HM_API hm_status hm_space_from_matrix(size_t n, const double* values, hm_space** out);
HM_API hm_status hm_space_load_points(const char* path, hm_metric_mode mode, hm_space** out);
HM_API hm_status hm_space_load_matrix(const char* path, hm_space** out);
/* d' = ln(1 + d) of the given space. */
HM_API hm_status hm_space_log_transform(const hm_space* space, hm_space** out);
HM_API hm_status hm_space_write_matrix(const hm_space* space, const char* path);
HM_API void hm_space_free(hm_space* space);
HM_API size_t hm_space_size(const hm_space* space);
HM_API hm_status hm_space_distance(const hm_space* space, size_t i, size_t j, double* out);

typedef enum hm_axiom {
  HM_AXIOM_NONE = 0,
  HM_AXIOM_NON_FINITE = 1,
  HM_AXIOM_NEGATIVE = 2,
  HM_AXIOM_DIAGONAL = 3,
  HM_AXIOM_SYMMETRY = 4,
  HM_AXIOM_TRIANGLE = 5
} hm_axiom;

typedef struct hm_validation {
  hm_axiom violated;
  size_t witness[3];
  double excess;
  size_t coincident_pairs;
  size_t first_coincident[2];
} hm_validation;

HM_API const char* hm_axiom_name(hm_axiom axiom);
HM_API hm_status hm_space_validate(const hm_space* space, double tolerance, hm_validation* out);
/* Validates a raw matrix without building a space. */
HM_API hm_status hm_matrix_validate(size_t n, const double* values, double tolerance,
                                    hm_validation* out);

/* Reads a distance-matrix CSV and validates it without building a space. */
HM_API hm_status hm_matrix_file_validate(const char* path, double tolerance, hm_validation* out,
                                         size_t* size);

/* ---- regions ---- */

HM_API hm_status hm_region_create(const hm_space* space, const size_t* members, size_t count,
                                  hm_region** out);
HM_API hm_status hm_region_load(const hm_space* space, const char* path, hm_region** out);
HM_API hm_status hm_region_ball(const hm_space* space, size_t center, double radius,
                                hm_region** out);
HM_API hm_status hm_region_intersect_balls(const hm_space* space, size_t c1, double r1,
                                           size_t c2, double r2, hm_region** out);
HM_API void hm_region_free(hm_region* region);
HM_API size_t hm_region_size(const hm_region* region);
/* Copies up to capacity member indices (ascending); returns the count copied. */
HM_API size_t hm_region_members(const hm_region* region, size_t* out, size_t capacity);
HM_API int hm_region_equal(const hm_region* a, const hm_region* b);

/* ---- hyperbolicity ---- */

typedef struct hm_delta_result {
  double delta;
  size_t witness[4]; /* p, x, y, z */
  uint64_t scanned;
} hm_delta_result;

typedef struct hm_ultra_result {
  double delta_u;
  size_t witness[3]; /* x, y, z */
  uint64_t scanned;
} hm_ultra_result;

HM_API hm_status hm_gromov_product(const hm_space* space, size_t p, size_t x, size_t y,
                                   double* out);
HM_API hm_status hm_four_point_delta(const hm_space* space, unsigned threads,
                                     hm_delta_result* out);
HM_API hm_status hm_four_point_delta_fixed_base(const hm_space* space, size_t base,
                                                unsigned threads, hm_delta_result* out);
HM_API hm_status hm_ultrametric_delta(const hm_space* space, unsigned threads,
                                      hm_ultra_result* out);

/* ---- ball geometry ---- */

typedef struct hm_ecc_result {
  double ecc;
  int has_balls; /* 0 for an empty region */
  size_t inner_center;
  double inner_radius; /* may be +inf when the region is the whole space */
  size_t outer_center;
  double outer_radius;
} hm_ecc_result;

typedef struct hm_quasi_ball_result {
  double defect;
  size_t center;
  double radius;
} hm_quasi_ball_result;

HM_API hm_status hm_inradius_at(const hm_space* space, size_t center, const hm_region* region,
                                double* out);
HM_API hm_status hm_covering_radius(const hm_space* space, size_t center,
                                    const hm_region* region, double* out);
HM_API hm_status hm_hausdorff_distance(const hm_space* space, const hm_region* a,
                                       const hm_region* b, double* out);
HM_API hm_status hm_eccentricity(const hm_space* space, const hm_region* region,
                                 unsigned threads, hm_ecc_result* out);
HM_API hm_status hm_quasi_ball_defect(const hm_space* space, const hm_region* region,
                                      unsigned threads, hm_quasi_ball_result* out);
HM_API hm_status hm_weak_ecc_defect(const hm_space* space, const hm_region* region,
                                    double lambda, unsigned threads, double* out);

/* ---- paths in the plane ---- */

/* count samples: params strictly increasing, xy holds x0,y0,x1,y1,... */
HM_API hm_status hm_path_create(const double* params, const double* xy, size_t count,
                                hm_path** out);
HM_API hm_status hm_path_load(const char* path, hm_path** out);
HM_API void hm_path_free(hm_path* path);
HM_API size_t hm_path_size(const hm_path* path);
HM_API hm_status hm_path_sample(const hm_path* path, size_t i, double* t, double* x, double* y);

typedef struct hm_qg_result {
  double defect; /* least C for the given L */
  size_t i;
  size_t j;
} hm_qg_result;

HM_API hm_status hm_qg_defect(const hm_path* path, double L, hm_metric_mode mode,
                              hm_qg_result* out);

typedef struct hm_lengths_result {
  size_t segments;
  double length_d;      /* Euclidean length of the piecewise-linear path */
  double length_dprime; /* refined length under d' */
  double chord_d;       /* distance between the end points */
  double chord_dprime;
} hm_lengths_result;

HM_API hm_status hm_log_segment_length(double length, double tolerance, double* out);
HM_API hm_status hm_path_lengths(const hm_path* path, double tolerance, hm_lengths_result* out);

typedef struct hm_tame_constants {
  double c_prime;
  double k1;
  double k2;
} hm_tame_constants;

typedef struct hm_tame_result {
  hm_tame_constants constants;
  size_t probe_count;
  int endpoints_preserved;
  double qg_defect_probe;
  double chord_arc_excess;
  double chord_arc_excess_euclidean;
  double hausdorff;
  double hausdorff_bound;
  int conclusion[4];
  int passed;
} hm_tame_result;

HM_API hm_status hm_tame_constants_for(double L, double C, hm_tame_constants* out);
HM_API hm_status hm_horizon(double L, double C, double tolerance, double* out);
/* tamed may be NULL; otherwise receives the piecewise-linear skeleton path. */
HM_API hm_status hm_tame(const hm_path* input, double L, double C, double probe_spacing,
                         double refine_tolerance, hm_tame_result* out, hm_path** tamed);

/* ---- lens family and experiments ---- */

typedef struct hm_lens_stats {
  double inradius;
  double inradius_center[2];
  double diameter;
  double ecc_d;
  double ecc_dprime;
} hm_lens_stats;

HM_API hm_status hm_lens_exact_stats(int n, hm_lens_stats* out);
HM_API hm_status hm_lens_experiment(const int* n_list, size_t count, double h, double lambda,
                                    unsigned threads, hm_table** out);
HM_API hm_status hm_grid_experiment(const int* sides, size_t count, double spacing,
                                    int fixed_base, int force, unsigned threads,
                                    hm_table** out);
HM_API hm_status hm_line_ultra_experiment(const int* n_list, size_t count, unsigned threads,
                                          hm_table** out);

/* ---- tables ---- */

typedef enum hm_cell_kind { HM_CELL_NUMBER = 0, HM_CELL_INTEGER = 1, HM_CELL_TEXT = 2 } hm_cell_kind;

typedef struct hm_cell {
  hm_cell_kind kind;
  double number;
  int64_t integer;
  const char* text;
} hm_cell;

HM_API hm_status hm_table_create(const char* const* columns, size_t count, hm_table** out);
HM_API hm_status hm_table_add_row(hm_table* table, const hm_cell* cells, size_t count);
HM_API void hm_table_free(hm_table* table);
HM_API size_t hm_table_rows(const hm_table* table);
HM_API size_t hm_table_columns(const hm_table* table);
HM_API const char* hm_table_column_name(const hm_table* table, size_t column);
HM_API hm_status hm_table_number(const hm_table* table, size_t row, const char* column,
                                 double* out);
/* Text of one cell, formatted as in the CSV rendering. */
HM_API hm_status hm_table_cell_text(const hm_table* table, size_t row, size_t column, char* buf,
                                    size_t capacity, size_t* needed);
/* Writes to path; "-" writes to standard output. */
HM_API hm_status hm_table_write(const hm_table* table, const char* path, hm_format format);
/* Renders into buf (NUL-terminated, truncated to capacity); *needed gets the
 * full length excluding the terminator. buf may be NULL when capacity is 0. */
HM_API hm_status hm_table_render(const hm_table* table, hm_format format, char* buf,
                                 size_t capacity, size_t* needed);
/* Shortest round-trip decimal text of value, as used in tables. */
HM_API hm_status hm_format_number(double value, char* buf, size_t capacity, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* HYPMETRIC_H */
