#pragma once

// The lens family Y_n = B((0,0), n+1) ∩ B((2n,0), n+1) in the plane, its
// closed-form constants, lattice samples of it, and the growth experiments.

#include <array>
#include <cstdint>
#include <vector>

#include "hypmetric/ball_geometry.hpp"
#include "hypmetric/hyperbolicity.hpp"
#include "hypmetric/metric_space.hpp"
#include "hypmetric/quasigeodesic.hpp"
#include "hypmetric/table.hpp"

namespace hypmetric {

struct LensFamily {
  int n = 1;

  Point2 left_center() const noexcept { return {0.0, 0.0}; }
  Point2 right_center() const noexcept { return {2.0 * n, 0.0}; }
  Point2 middle() const noexcept { return {static_cast<double>(n), 0.0}; }
  double radius() const noexcept { return n + 1.0; }
  /// Half the distance between the two tips (n, ±sqrt(2n+1)).
  double half_height() const noexcept;
  bool contains(Point2 p) const noexcept;
};

enum class LensSource { analytic, sampled };

struct LensStats {
  LensSource source = LensSource::analytic;
  double h = 0.0;  // sample spacing, 0 for analytic values
  double inradius = 0.0;
  Point2 inradius_center;
  double diameter = 0.0;
  double ecc_d = 0.0;
  double ecc_dprime = 0.0;
};

/// Closed-form constants; throws Error(invalid_argument) for n < 1.
LensStats lens_exact_stats(int n);

/// Square lattice of spacing h anchored at (n, 0). Lattice point (i, j),
/// with |i| <= half_cols and |j| <= half_rows, sits at (n + i h, j h) and
/// has index (j + half_rows) * cols() + (i + half_cols).
struct LensSample {
  int n = 1;
  double h = 1.0;
  std::int64_t offset = 0;  // n / h: the disk centers are (∓offset, 0)
  std::int64_t half_cols = 0;
  std::int64_t half_rows = 0;
  PointCloud cloud;
  Region region;

  std::int64_t cols() const noexcept { return 2 * half_cols + 1; }
  std::int64_t rows() const noexcept { return 2 * half_rows + 1; }
  std::size_t index(std::int64_t i, std::int64_t j) const noexcept {
    return static_cast<std::size_t>((j + half_rows) * cols() + (i + half_cols));
  }
  std::size_t middle_index() const noexcept { return index(0, 0); }
};

/// Lattice points in the lens bounding box widened by one lens diameter on
/// every side. Requires n >= 1, 0 < h <= 1 and n / h an integer so that
/// (0,0), (n,0) and (2n,0) are lattice points.
LensSample sample_lens(int n, double h);

struct LensMeasurement {
  std::size_t points = 0;
  std::size_t region_size = 0;
  double max_inradius = 0.0;
  std::size_t inradius_center = 0;
  double min_covering_radius = 0.0;
  std::size_t covering_center = 0;
  double ecc_d = 0.0;
  double ecc_dprime = 0.0;
  double quasi_ball_d = 0.0;
  double quasi_ball_dprime = 0.0;
  BallSpec quasi_ball;  // radius in d
  double lambda = 2.0;
  double weak_ecc_d = 0.0;
  double weak_ecc_dprime = 0.0;
};

struct LensOptions {
  double lambda = 2.0;
  bool quasi_ball = true;
  unsigned threads = 1;
};

/// Exact extremal quantities of the sampled lens inside its sample cloud,
/// equal to the generic ball-geometry results on the same finite space.
/// Uses the lattice structure: distances are h sqrt(m) for integer m.
LensMeasurement measure_lens(const LensSample& sample, LensOptions options = {});

struct LensRow {
  int n = 1;
  double h = 0.0;
  LensMeasurement measured;
  LensStats analytic;
};

std::vector<LensRow> ecc_growth_experiment(const std::vector<int>& n_list, double h,
                                           LensOptions options = {});
Table lens_table(const std::vector<LensRow>& rows);

/// s x s grid with the given spacing, row-major.
PointCloud square_grid(int side, double spacing);

inline constexpr std::size_t kFullScanLimit = 400;

struct GridOptions {
  /// Scan only quadruples based at the corner point 0.
  bool fixed_base = false;
  /// Allow the full scan beyond kFullScanLimit points.
  bool force = false;
  unsigned threads = 1;
};

struct GridRow {
  int side = 0;
  double spacing = 0.0;
  std::size_t points = 0;
  bool fixed_base = false;
  double delta_d = 0.0;
  double delta_dprime = 0.0;
  /// Defect of the corner quadruple, evaluated in the grid space; a lower
  /// bound for delta_d that the scan dominates exactly.
  double corner_bound = 0.0;
  double corner_analytic = 0.0;  // (sqrt2 - 1)(side - 1) spacing
  Quadruple witness_d;
  Quadruple witness_dprime;
};

/// Throws Error(guard) when a full scan would exceed kFullScanLimit points.
std::vector<GridRow> grid_experiment(const std::vector<int>& sides, double spacing,
                                     GridOptions options = {});
Table grid_table(const std::vector<GridRow>& rows);

struct LineUltraResult {
  int N = 0;
  double delta_u = 0.0;
  double gap_to_ln2 = 0.0;
  std::array<std::size_t, 3> witness{0, 0, 0};
};

/// ultrametric_delta of {0, 1, ..., N} on the line under d'; N >= 2.
LineUltraResult line_ultrametric_experiment(int N, unsigned threads = 1);
Table line_ultra_table(const std::vector<LineUltraResult>& rows);

}  // namespace hypmetric
