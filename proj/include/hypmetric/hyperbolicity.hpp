#pragma once

// Gromov 4-point defect and ultrametric defect of a finite metric space.
//
// The 4-point defect is the least delta with
//   (x|y)_p >= min((x|z)_p, (y|z)_p) - delta
// over all ordered quadruples (p, x, y, z), repeats allowed. The ultrametric
// defect is the least delta with d(x, y) <= max(d(x, z), d(y, z)) + delta.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

#include "hypmetric/metric_space.hpp"

namespace hypmetric {

struct Quadruple {
  std::size_t p = 0, x = 0, y = 0, z = 0;
  auto operator<=>(const Quadruple&) const = default;
};

struct DeltaReport {
  double delta = 0.0;
  /// Lexicographically smallest maximizer.
  Quadruple witness;
  /// Quadruples actually evaluated; the x <= y symmetry halves the n^4 total.
  std::uint64_t quadruples_scanned = 0;
};

struct UltraReport {
  double delta_u = 0.0;
  std::array<std::size_t, 3> witness{0, 0, 0};
  std::uint64_t triples_scanned = 0;
};

struct ScanOptions {
  unsigned threads = 1;
};

/// min((x|z)_p, (y|z)_p) - (x|y)_p, unclamped. Evaluated through the
/// equivalent sum form (S1 - max(S2, S3)) / 2 that the kernels use, so a
/// report's witness reproduces its delta bit for bit.
double quadruple_defect(const FiniteMetricSpace& space, const Quadruple& q);

/// d(x, y) - max(d(x, z), d(y, z)), unclamped.
double triple_defect(const FiniteMetricSpace& space, std::size_t x, std::size_t y,
                     std::size_t z);

DeltaReport four_point_delta(const FiniteMetricSpace& space, ScanOptions options = {});

/// The same scan restricted to one basepoint; a lower bound for four_point_delta.
DeltaReport four_point_delta_fixed_base(const FiniteMetricSpace& space, std::size_t base,
                                        ScanOptions options = {});

UltraReport ultrametric_delta(const FiniteMetricSpace& space, ScanOptions options = {});

}  // namespace hypmetric
