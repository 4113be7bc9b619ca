#pragma once

// Quasi-geodesic checks, path lengths under d and d' = ln(1 + d), and the
// taming construction in the Euclidean plane: a map known on its samples is
// replaced by the piecewise-linear path through its values at
// {a, b} ∪ (Z ∩ (a, b)).

#include <cstddef>
#include <vector>

#include "hypmetric/metric_space.hpp"

namespace hypmetric {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

double plane_distance(Point2 a, Point2 b, MetricMode mode) noexcept;

/// (L, C) with L >= 1 and C >= 0.
struct QGParams {
  double L = 1.0;
  double C = 0.0;

  void validate() const;
};

struct TameConstants {
  double c_prime = 0.0;  // 3(L + C)
  double k1 = 0.0;       // L(L + C)
  double k2 = 0.0;       // (L C' + 4)(L + C)

  static TameConstants from(const QGParams& params);
};

/// A map [a, b] -> R^2 known on finitely many strictly increasing parameters.
struct SampledPath {
  std::vector<double> params;
  std::vector<Point2> points;

  SampledPath() = default;
  SampledPath(std::vector<double> params, std::vector<Point2> points);

  std::size_t size() const noexcept { return params.size(); }
};

/// Piecewise-linear path: linear interpolation between breakpoints.
class PLPath {
 public:
  PLPath() = default;
  PLPath(std::vector<double> params, std::vector<Point2> breakpoints);

  const std::vector<double>& params() const noexcept { return params_; }
  const std::vector<Point2>& breakpoints() const noexcept { return breakpoints_; }
  double start() const { return params_.front(); }
  double end() const { return params_.back(); }

  Point2 at(double t) const;
  /// Euclidean arc length of the restriction to [t0, t1].
  double euclidean_length(double t0, double t1) const;

 private:
  std::vector<double> params_;
  std::vector<Point2> breakpoints_;
};

struct QGDefect {
  /// Least C making the samples (L, C)-quasi-geodesic; 0 for fewer than two samples.
  double defect = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// max over sample pairs of max(0, |a-b|/L - d, d - L|a-b|).
QGDefect qg_defect(const SampledPath& path, double L, MetricMode mode);
QGDefect qg_defect(const PLPath& path, double L, MetricMode mode);
QGDefect qg_defect(const FiniteMetricSpace& space, const Chain& chain, double L);

inline constexpr double kRefineTolerance = 1e-6;

/// Supremum length under d' of a straight segment of Euclidean length
/// `length`, approximated by dyadic refinement until two successive sums
/// differ by less than `tolerance`. On a line the 2^k-piece sum equals
/// 2^k ln(1 + length / 2^k).
double log_segment_length(double length, double tolerance = kRefineTolerance);

/// Sum of segment lengths in `mode`; in log mode each segment is refined.
double pl_length(const PLPath& path, MetricMode mode, double tolerance = kRefineTolerance);

struct TameOptions {
  double probe_spacing = 0.1;
  double refine_tolerance = kRefineTolerance;
  /// Slack allowed when checking that the input is (L, C)-quasi-geodesic.
  double admission_slack = 1e-12;
};

struct TameReport {
  TameConstants constants;
  std::size_t probe_count = 0;
  double probe_spacing = 0.0;

  // (1) endpoints preserved
  bool endpoints_preserved = false;
  // (2) (L, C')-quasi-geodesic w.r.t. d' on all probe pairs
  double qg_defect_probe = 0.0;
  // (3) l'(path|[t,t']) - (k1 d'(t, t') + k2), worst over probe pairs; the
  // second value uses the exact Euclidean length instead of the d' estimate.
  double chord_arc_excess = 0.0;
  double chord_arc_excess_euclidean = 0.0;
  std::size_t chord_arc_worst_i = 0;
  std::size_t chord_arc_worst_j = 0;
  // (4) d'-Hausdorff distance between the input samples and the probed path
  double hausdorff = 0.0;
  double hausdorff_bound = 0.0;

  bool conclusion1() const noexcept { return endpoints_preserved; }
  bool conclusion2() const noexcept { return qg_defect_probe <= constants.c_prime; }
  bool conclusion3() const noexcept { return chord_arc_excess <= 0.0; }
  bool conclusion4() const noexcept { return hausdorff <= hausdorff_bound; }
  bool passed() const noexcept {
    return conclusion1() && conclusion2() && conclusion3() && conclusion4();
  }
};

struct TameResult {
  PLPath path;
  TameConstants constants;
  TameReport report;
};

/// Parameters of the taming skeleton {a, b} ∪ (Z ∩ (a, b)).
std::vector<double> tame_skeleton(double a, double b);

/// The input must contain a sample at every skeleton parameter and be
/// (L, C)-quasi-geodesic w.r.t. d' on its samples; otherwise throws
/// Error(invalid_argument) or Error(not_quasi_geodesic) naming the worst pair.
TameResult tame(const SampledPath& input, const QGParams& params, TameOptions options = {});

/// Unique D > 0 with exp(D) - 1 = k1 D + k2, by bisection.
double horizon(const QGParams& params, double tolerance = 1e-9);

}  // namespace hypmetric
