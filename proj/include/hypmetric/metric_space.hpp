#pragma once

// Finite metric spaces, Euclidean point clouds and the log-metric transform
// d'(x, y) = ln(1 + d(x, y)), together with the set-level primitives built on
// them: closed balls, Hausdorff distance, Gromov products and chain lengths.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypmetric/error.hpp"

namespace hypmetric {

enum class MetricMode { euclidean, log_euclidean };

const char* to_string(MetricMode mode) noexcept;

/// Raw n x n table of distances, row-major. No axioms are assumed; this is
/// what file loaders produce and what validate_metric inspects.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<double> values;

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t size, std::vector<double> data);

  double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * n + j]; }
};

/// Points in R^dim, stored row-major, with either the Euclidean metric or its
/// log transform.
class PointCloud {
 public:
  PointCloud() = default;
  PointCloud(std::size_t dim, std::vector<double> coords,
             MetricMode mode = MetricMode::euclidean);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  MetricMode mode() const noexcept { return mode_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& coords() const noexcept { return coords_; }

  double euclidean(std::size_t i, std::size_t j) const noexcept;
  double distance(std::size_t i, std::size_t j) const noexcept;

  PointCloud with_mode(MetricMode mode) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  MetricMode mode_ = MetricMode::euclidean;
};

enum class Axiom { none, non_finite, negative, diagonal, symmetry, triangle };

const char* to_string(Axiom axiom) noexcept;

struct ValidationReport {
  Axiom violated = Axiom::none;
  /// (i, j) for pairwise failures, (i, j, k) for the triangle d(i,j) > d(i,k) + d(k,j).
  std::array<std::size_t, 3> witness{0, 0, 0};
  /// Amount by which the axiom fails (triangle excess, asymmetry, ...).
  double excess = 0.0;
  /// Distinct points at distance zero: allowed, but the space is then a pseudometric.
  std::size_t coincident_pairs = 0;
  std::array<std::size_t, 2> first_coincident{0, 0};

  bool ok() const noexcept { return violated == Axiom::none; }
  bool pseudometric() const noexcept { return coincident_pairs > 0; }
  std::string describe() const;
};

inline constexpr double kTriangleTolerance = 1e-9;

class FiniteMetricSpace;

ValidationReport validate_metric(const DistanceMatrix& matrix,
                                 double tolerance = kTriangleTolerance);
ValidationReport validate_metric(const FiniteMetricSpace& space,
                                 double tolerance = kTriangleTolerance);

class Region;

/// An immutable finite metric space. Small spaces (n <= kDenseLimit) hold the
/// full distance matrix; larger point-cloud spaces evaluate distances from
/// coordinates on demand. Copies share storage.
class FiniteMetricSpace {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  FiniteMetricSpace() = default;

  /// Throws Error(metric) when the matrix fails validation. Coincident points
  /// are accepted.
  static FiniteMetricSpace from_matrix(DistanceMatrix matrix,
                                       std::vector<std::string> labels = {},
                                       double tolerance = kTriangleTolerance);
  /// Precomputes the matrix up to dense_limit points; larger clouds compute
  /// distances on demand.
  static FiniteMetricSpace from_cloud(PointCloud cloud, std::size_t dense_limit = kDenseLimit);

  std::size_t size() const noexcept { return n_; }
  bool dense() const noexcept { return static_cast<bool>(matrix_); }

  double distance(std::size_t i, std::size_t j) const noexcept {
    if (matrix_) return (*matrix_)[i * n_ + j];
    return lazy_distance(i, j);
  }
  double operator()(std::size_t i, std::size_t j) const noexcept { return distance(i, j); }

  /// Contiguous row of the dense matrix; empty for lazy spaces.
  std::span<const double> row(std::size_t i) const noexcept;
  /// Fills `out` (size n) with distances from i. Works for both representations.
  void fill_row(std::size_t i, std::span<double> out) const noexcept;

  std::string label(std::size_t i) const;
  const PointCloud* cloud() const noexcept { return cloud_.get(); }

  /// Number of ln(1+.) applications on top of the base metric.
  int log_depth() const noexcept { return log_depth_; }

  DistanceMatrix to_matrix() const;
  FiniteMetricSpace subspace(const Region& region) const;

 private:
  friend FiniteMetricSpace log_transform(const FiniteMetricSpace& space);

  double lazy_distance(std::size_t i, std::size_t j) const noexcept;

  std::size_t n_ = 0;
  std::shared_ptr<const std::vector<double>> matrix_;
  std::shared_ptr<const PointCloud> cloud_;
  std::shared_ptr<const std::vector<std::string>> labels_;
  int log_depth_ = 0;
};

/// d'(x, y) = ln(1 + d(x, y)) pointwise.
FiniteMetricSpace log_transform(const FiniteMetricSpace& space);

/// Index subset of a space with n points. Members are kept sorted and unique.
class Region {
 public:
  Region() = default;
  Region(std::size_t universe, std::vector<std::size_t> members);

  static Region all(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool full() const noexcept { return members_.size() == universe_; }
  bool contains(std::size_t i) const noexcept { return i < universe_ && mask_[i] != 0; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }

  friend bool operator==(const Region& a, const Region& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::size_t> members_;
  std::vector<unsigned char> mask_;
};

/// (x|y)_p = (d(x,p) + d(y,p) - d(x,y)) / 2
double gromov_product(const FiniteMetricSpace& space, std::size_t p, std::size_t x,
                      std::size_t y);

/// Closed ball {y : d(c, y) <= r}.
Region ball(const FiniteMetricSpace& space, std::size_t center, double radius);

/// sup over a in A of d(a, B).
double directed_hausdorff(const FiniteMetricSpace& space, const Region& from,
                          const Region& to);
/// Infinity when exactly one side is empty, zero when both are.
double hausdorff_distance(const FiniteMetricSpace& space, const Region& a, const Region& b);

/// A partition t_0 < ... < t_k of a path together with the sampled points.
struct Chain {
  std::vector<double> params;
  std::vector<std::size_t> points;

  Chain() = default;
  Chain(std::vector<double> params, std::vector<std::size_t> points);
};

double chain_length(const FiniteMetricSpace& space, const Chain& chain);

}  // namespace hypmetric
