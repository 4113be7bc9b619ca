#pragma once

// Eccentricity, quasi-ball defect and weak eccentricity of regions in a
// finite metric space. A region S has eccentricity < delta when
//   B(c, R) ⊆ S ⊆ B(c', R + delta)
// for some centers c, c' and R >= 0; the reported value is the infimum.

#include <cstddef>
#include <optional>

#include "hypmetric/metric_space.hpp"

namespace hypmetric {

struct BallSpec {
  std::size_t center = 0;
  double radius = 0.0;
};

struct EccReport {
  double ecc = 0.0;
  /// Center in S with the largest inradius (supremum semantics; may be +inf).
  std::optional<BallSpec> inner;
  /// Center in X with the smallest covering radius.
  std::optional<BallSpec> outer;
};

struct QuasiBallReport {
  double defect = 0.0;
  BallSpec best;
};

struct BallGeometryOptions {
  unsigned threads = 1;
};

Region intersect_balls(const FiniteMetricSpace& space, const BallSpec& b1, const BallSpec& b2);

/// sup{R : B(c, R) ⊆ S} = min over y outside S of d(c, y); +inf when S = X.
/// Throws Error(invalid_argument) when c is not in S.
double inradius_at(const FiniteMetricSpace& space, std::size_t center, const Region& region);

/// max over y in S of d(c, y). Throws Error(empty_region) for an empty S.
double covering_radius(const FiniteMetricSpace& space, std::size_t center,
                       const Region& region);

/// Empty S has eccentricity 0.
EccReport eccentricity(const FiniteMetricSpace& space, const Region& region,
                       BallGeometryOptions options = {});

/// min over centers c in X and realized radii r of d_H(S, B(c, r)).
/// Throws Error(empty_region) for an empty S.
QuasiBallReport quasi_ball_defect(const FiniteMetricSpace& space, const Region& region,
                                  BallGeometryOptions options = {});

/// Least delta with B(z, r) ⊆ S ⊆ B(z', lambda * r + delta). Empty S gives 0.
double weak_ecc_defect(const FiniteMetricSpace& space, const Region& region, double lambda,
                       BallGeometryOptions options = {});

}  // namespace hypmetric
