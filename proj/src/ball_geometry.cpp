#include "hypmetric/ball_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "parallel.hpp"

namespace hypmetric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Fixed chunking keeps reductions independent of the thread count.
constexpr std::size_t kChunks = 64;

void require_same_space(const FiniteMetricSpace& space, const Region& region) {
  if (region.universe() != space.size()) {
    throw Error(ErrorCode::invalid_argument, "region belongs to a different space");
  }
}

std::vector<std::size_t> complement_of(const Region& region) {
  std::vector<std::size_t> out;
  out.reserve(region.universe() - region.size());
  for (std::size_t i = 0; i < region.universe(); ++i) {
    if (!region.contains(i)) out.push_back(i);
  }
  return out;
}

struct Extremum {
  double value;
  std::size_t index;
};

// Max over candidates of f(c) where f is a min over `others`; first maximizer wins.
Extremum max_of_min(const FiniteMetricSpace& space, const std::vector<std::size_t>& candidates,
                    const std::vector<std::size_t>& others, unsigned threads) {
  const std::size_t chunk = (candidates.size() + kChunks - 1) / kChunks;
  std::vector<Extremum> partial(kChunks, Extremum{-kInf, 0});
  detail::parallel_for(kChunks, threads, [&](std::size_t k) {
    const std::size_t begin = k * chunk;
    const std::size_t end = std::min(candidates.size(), begin + chunk);
    Extremum best{-kInf, 0};
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t c = candidates[idx];
      double value = kInf;
      for (auto y : others) {
        value = std::min(value, space(c, y));
        if (value <= best.value) break;
      }
      if (value > best.value) best = {value, c};
    }
    partial[k] = best;
  });
  Extremum best{-kInf, 0};
  for (const auto& e : partial) {
    if (e.value > best.value) best = e;
  }
  return best;
}

// Min over candidates of f(c) where f is a max over `others`; first minimizer wins.
Extremum min_of_max(const FiniteMetricSpace& space, const std::vector<std::size_t>& candidates,
                    const std::vector<std::size_t>& others, unsigned threads) {
  const std::size_t chunk = (candidates.size() + kChunks - 1) / kChunks;
  std::vector<Extremum> partial(kChunks, Extremum{kInf, 0});
  detail::parallel_for(kChunks, threads, [&](std::size_t k) {
    const std::size_t begin = k * chunk;
    const std::size_t end = std::min(candidates.size(), begin + chunk);
    Extremum best{kInf, 0};
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t c = candidates[idx];
      double value = 0.0;
      for (auto y : others) {
        value = std::max(value, space(c, y));
        if (value >= best.value) break;
      }
      if (value < best.value) best = {value, c};
    }
    partial[k] = best;
  });
  Extremum best{kInf, 0};
  for (const auto& e : partial) {
    if (e.value < best.value) best = e;
  }
  return best;
}

struct InnerOuter {
  BallSpec inner;
  BallSpec outer;
};

InnerOuter extremal_balls(const FiniteMetricSpace& space, const Region& region,
                          unsigned threads) {
  const auto complement = complement_of(region);
  InnerOuter out;
  if (complement.empty()) {
    out.inner = {region.members().front(), kInf};
  } else {
    const auto e = max_of_min(space, region.members(), complement, threads);
    out.inner = {e.index, e.value};
  }
  std::vector<std::size_t> all(space.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto e = min_of_max(space, all, region.members(), threads);
  out.outer = {e.index, e.value};
  return out;
}

}  // namespace

Region intersect_balls(const FiniteMetricSpace& space, const BallSpec& b1, const BallSpec& b2) {
  if (!(b1.radius >= 0.0) || !(b2.radius >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "ball radius must be >= 0");
  }
  if (b1.center >= space.size() || b2.center >= space.size()) {
    throw Error(ErrorCode::invalid_argument, "ball center out of range");
  }
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space(i, b1.center) <= b1.radius && space(i, b2.center) <= b2.radius) {
      members.push_back(i);
    }
  }
  return Region(space.size(), std::move(members));
}

double inradius_at(const FiniteMetricSpace& space, std::size_t center, const Region& region) {
  require_same_space(space, region);
  if (!region.contains(center)) throw Error(ErrorCode::invalid_argument, "center outside region");
  double nearest = kInf;
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (!region.contains(y)) nearest = std::min(nearest, space(center, y));
  }
  return nearest;
}

double covering_radius(const FiniteMetricSpace& space, std::size_t center,
                       const Region& region) {
  require_same_space(space, region);
  if (region.empty()) throw Error(ErrorCode::empty_region, "empty region");
  if (center >= space.size()) throw Error(ErrorCode::invalid_argument, "center out of range");
  double farthest = 0.0;
  for (auto y : region.members()) farthest = std::max(farthest, space(center, y));
  return farthest;
}

EccReport eccentricity(const FiniteMetricSpace& space, const Region& region,
                       BallGeometryOptions options) {
  require_same_space(space, region);
  EccReport report;
  if (region.empty()) return report;
  const auto balls = extremal_balls(space, region, options.threads);
  report.inner = balls.inner;
  report.outer = balls.outer;
  report.ecc = std::isinf(balls.inner.radius)
                   ? 0.0
                   : std::max(0.0, balls.outer.radius - balls.inner.radius);
  return report;
}

double weak_ecc_defect(const FiniteMetricSpace& space, const Region& region, double lambda,
                       BallGeometryOptions options) {
  require_same_space(space, region);
  if (!(lambda >= 1.0)) throw Error(ErrorCode::invalid_argument, "lambda must be >= 1");
  if (region.empty()) return 0.0;
  const auto balls = extremal_balls(space, region, options.threads);
  if (std::isinf(balls.inner.radius)) return 0.0;
  return std::max(0.0, balls.outer.radius - lambda * balls.inner.radius);
}

QuasiBallReport quasi_ball_defect(const FiniteMetricSpace& space, const Region& region,
                                  BallGeometryOptions options) {
  require_same_space(space, region);
  if (region.empty()) throw Error(ErrorCode::empty_region, "empty region");
  const std::size_t n = space.size();
  const auto& members = region.members();

  // d(b, S) for every point b.
  std::vector<double> to_region(n, 0.0);
  for (std::size_t b = 0; b < n; ++b) {
    if (region.contains(b)) continue;
    double nearest = kInf;
    for (auto a : members) nearest = std::min(nearest, space(a, b));
    to_region[b] = nearest;
  }

  struct Candidate {
    double defect = kInf;
    BallSpec ball;
  };

  // For a fixed center the ball grows through the realized radii. The
  // directed distance from S to the ball is non-increasing and the one from
  // the ball to S is non-decreasing, so the scan stops at their crossing.
  auto scan_center = [&](std::size_t c, std::vector<double>& row,
                         std::vector<std::size_t>& order, std::vector<double>& nearest,
                         Candidate& best) {
    space.fill_row(c, row);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return row[a] < row[b] || (row[a] == row[b] && a < b);
    });
    std::fill(nearest.begin(), nearest.end(), kInf);
    double to_s = 0.0;
    std::size_t pos = 0;
    while (pos < n) {
      const double radius = row[order[pos]];
      for (; pos < n && row[order[pos]] == radius; ++pos) {
        const std::size_t b = order[pos];
        to_s = std::max(to_s, to_region[b]);
        for (std::size_t k = 0; k < members.size(); ++k) {
          nearest[k] = std::min(nearest[k], space(members[k], b));
        }
      }
      const double from_s = *std::max_element(nearest.begin(), nearest.end());
      const double value = std::max(from_s, to_s);
      if (value < best.defect) best = {value, BallSpec{c, radius}};
      if (from_s <= to_s || to_s >= best.defect) break;
    }
  };

  const std::size_t chunk = (n + kChunks - 1) / kChunks;
  std::vector<Candidate> partial(kChunks);
  detail::parallel_for(kChunks, options.threads, [&](std::size_t k) {
    std::vector<double> row(n);
    std::vector<std::size_t> order(n);
    std::vector<double> nearest(members.size());
    Candidate best;
    const std::size_t end = std::min(n, (k + 1) * chunk);
    for (std::size_t c = k * chunk; c < end; ++c) {
      // Every ball contains c, so d_H >= d(c, S).
      if (to_region[c] >= best.defect) continue;
      scan_center(c, row, order, nearest, best);
    }
    partial[k] = best;
  });

  Candidate best;
  for (const auto& p : partial) {
    if (p.defect < best.defect) best = p;
  }
  return QuasiBallReport{best.defect, best.ball};
}

}  // namespace hypmetric
