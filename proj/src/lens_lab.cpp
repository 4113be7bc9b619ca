#include "hypmetric/lens_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "hypmetric/hyperbolicity.hpp"
#include "parallel.hpp"

namespace hypmetric {

namespace {

using i64 = std::int64_t;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr i64 kNoSite = std::numeric_limits<i64>::max();

i64 isqrt(i64 v) {
  if (v <= 0) return 0;
  auto r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool near_integer(double value, i64& rounded) {
  rounded = std::llround(value);
  return std::abs(value - static_cast<double>(rounded)) <= 1e-9 * std::max(1.0, std::abs(value));
}

// Exact squared Euclidean distance transform on a W x R lattice: for every
// cell the squared distance to the nearest cell with site[idx] != 0.
std::vector<i64> squared_edt(const std::vector<std::uint8_t>& site, i64 W, i64 R) {
  const double big = 1e30;
  std::vector<double> g(static_cast<std::size_t>(W * R), big);
  for (i64 x = 0; x < W; ++x) {
    double run = big;
    for (i64 y = 0; y < R; ++y) {
      run = site[static_cast<std::size_t>(y * W + x)] ? 0.0 : run + 1.0;
      g[static_cast<std::size_t>(y * W + x)] = run;
    }
    run = big;
    for (i64 y = R - 1; y >= 0; --y) {
      auto& cell = g[static_cast<std::size_t>(y * W + x)];
      run = site[static_cast<std::size_t>(y * W + x)] ? 0.0 : run + 1.0;
      cell = std::min(cell, run);
    }
  }
  std::vector<i64> out(static_cast<std::size_t>(W * R), kNoSite);
  std::vector<double> f(static_cast<std::size_t>(W));
  std::vector<i64> v(static_cast<std::size_t>(W));
  std::vector<double> z(static_cast<std::size_t>(W + 1));
  for (i64 y = 0; y < R; ++y) {
    for (i64 x = 0; x < W; ++x) {
      const double d = g[static_cast<std::size_t>(y * W + x)];
      f[static_cast<std::size_t>(x)] = d >= big * 0.5 ? kInf : d * d;
    }
    // Lower envelope of the parabolas x -> (x - q)^2 + f[q].
    i64 k = -1;
    for (i64 q = 0; q < W; ++q) {
      const double fq = f[static_cast<std::size_t>(q)];
      if (std::isinf(fq)) continue;
      if (k < 0) {
        k = 0;
        v[0] = q;
        z[0] = -kInf;
        z[1] = kInf;
        continue;
      }
      double s = 0.0;
      for (;;) {
        const i64 p = v[static_cast<std::size_t>(k)];
        s = ((fq + static_cast<double>(q * q)) -
             (f[static_cast<std::size_t>(p)] + static_cast<double>(p * p))) /
            static_cast<double>(2 * (q - p));
        if (s <= z[static_cast<std::size_t>(k)] && k > 0) {
          --k;
        } else {
          break;
        }
      }
      ++k;
      v[static_cast<std::size_t>(k)] = q;
      z[static_cast<std::size_t>(k)] = s;
      z[static_cast<std::size_t>(k + 1)] = kInf;
    }
    if (k < 0) continue;
    i64 j = 0;
    for (i64 x = 0; x < W; ++x) {
      while (z[static_cast<std::size_t>(j + 1)] < static_cast<double>(x)) ++j;
      const i64 p = v[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(y * W + x)] =
          (x - p) * (x - p) + static_cast<i64>(f[static_cast<std::size_t>(p)]);
    }
  }
  return out;
}

struct Cell {
  i64 x;
  i64 y;
};

inline i64 sq(const Cell& a, const Cell& b) {
  const i64 dx = a.x - b.x;
  const i64 dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Strict convex hull (no collinear vertices) by the monotone chain.
std::vector<Cell> convex_hull(std::vector<Cell> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Cell& a, const Cell& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Cell& a, const Cell& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Cell& o, const Cell& a, const Cell& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Cell> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

class LatticeLens {
 public:
  explicit LatticeLens(const LensSample& sample)
      : W_(sample.cols()), R_(sample.rows()), in_(static_cast<std::size_t>(W_ * R_), 0) {
    if (sample.cloud.size() != static_cast<std::size_t>(W_ * R_) ||
        sample.region.universe() != sample.cloud.size()) {
      throw Error(ErrorCode::invalid_argument, "lens sample does not match its lattice");
    }
    if (sample.region.empty()) throw Error(ErrorCode::empty_region, "empty lens region");
    for (auto idx : sample.region.members()) {
      in_[idx] = 1;
      members_.push_back(cell(idx));
    }
    std::vector<Cell> extremes;
    for (i64 x = 0; x < W_; ++x) {
      i64 lo = -1, hi = -1;
      for (i64 y = 0; y < R_; ++y) {
        if (inside(x, y)) {
          if (lo < 0) lo = y;
          hi = y;
        }
      }
      if (lo >= 0) {
        extremes.push_back({x, lo});
        extremes.push_back({x, hi});
      }
    }
    hull_ = convex_hull(std::move(extremes));
  }

  i64 size() const noexcept { return W_ * R_; }
  Cell cell(std::size_t idx) const noexcept {
    return {static_cast<i64>(idx) % W_, static_cast<i64>(idx) / W_};
  }
  std::size_t index(const Cell& c) const noexcept {
    return static_cast<std::size_t>(c.y * W_ + c.x);
  }
  bool inside(i64 x, i64 y) const noexcept {
    return in_[static_cast<std::size_t>(y * W_ + x)] != 0;
  }

  // Farthest region point from c, squared.
  i64 cover(const Cell& c) const noexcept {
    i64 best = 0;
    for (const auto& v : hull_) best = std::max(best, sq(c, v));
    return best;
  }

  // Largest inradius over region points; first maximizer in index order.
  std::pair<i64, std::size_t> max_inradius() const {
    std::vector<std::uint8_t> outside(in_.size());
    for (std::size_t i = 0; i < in_.size(); ++i) outside[i] = in_[i] ? 0 : 1;
    const auto dist = squared_edt(outside, W_, R_);
    std::pair<i64, std::size_t> best{-1, 0};
    for (const auto& m : members_) {
      const auto idx = index(m);
      if (dist[idx] > best.first) best = {dist[idx], idx};
    }
    return best;
  }

  // Smallest covering radius over all lattice points; first minimizer.
  std::pair<i64, std::size_t> min_covering() const {
    std::pair<i64, std::size_t> best{kNoSite, 0};
    for (i64 idx = 0; idx < size(); ++idx) {
      const Cell c = cell(static_cast<std::size_t>(idx));
      i64 value = 0;
      for (const auto& v : hull_) {
        value = std::max(value, sq(c, v));
        if (value >= best.first) break;
      }
      if (value < best.first) best = {value, static_cast<std::size_t>(idx)};
    }
    return best;
  }

  struct QuasiBall {
    i64 defect;
    std::size_t center;
    i64 radius;
  };

  QuasiBall quasi_ball(std::size_t start) const {
    to_region_ = squared_edt(in_, W_, R_);
    QuasiBall best{0, start, 0};
    {
      const auto r = evaluate(cell(start));
      best = {r.first, start, r.second};
    }

    struct Candidate {
      double bound;
      std::size_t idx;
    };
    std::vector<Candidate> candidates;
    for (i64 idx = 0; idx < size(); ++idx) {
      if (to_region_[static_cast<std::size_t>(idx)] > best.defect) continue;
      const Cell c = cell(static_cast<std::size_t>(idx));
      candidates.push_back({lower_bound(c), static_cast<std::size_t>(idx)});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return a.bound < b.bound || (a.bound == b.bound && a.idx < b.idx);
    });
    for (const auto& cand : candidates) {
      if (cand.bound > std::sqrt(static_cast<double>(best.defect)) + 1e-9) break;
      if (cand.idx == start) continue;
      const auto r = evaluate(cell(cand.idx));
      if (r.first < best.defect || (r.first == best.defect && cand.idx < best.center)) {
        best = {r.first, cand.idx, r.second};
      }
    }
    return best;
  }

 private:
  // Lower bound, in lattice units, on d_H(S, B(c, r)) over all radii: the
  // ball contains c and, for r < k + 1, misses the farthest region point by
  // more than cover - (k + 1) while containing the axis points at offset <= k.
  double lower_bound(const Cell& c) const {
    const double own = std::sqrt(static_cast<double>(to_region_[index(c)]));
    const double far = std::sqrt(static_cast<double>(cover(c)));
    double reach = 0.0;
    double best = kInf;
    for (i64 k = 0;; ++k) {
      const Cell axis[4] = {{c.x + k, c.y}, {c.x - k, c.y}, {c.x, c.y + k}, {c.x, c.y - k}};
      for (const auto& p : axis) {
        if (p.x < 0 || p.x >= W_ || p.y < 0 || p.y >= R_) continue;
        reach = std::max(reach, std::sqrt(static_cast<double>(to_region_[index(p)])));
      }
      const double miss = far - static_cast<double>(k + 1);
      best = std::min(best, std::max(miss, reach));
      if (miss <= reach) break;
    }
    return std::max(own, best);
  }

  template <class Fn>
  void for_ball(const Cell& c, i64 m, Fn&& fn) const {
    const i64 r = isqrt(m);
    for (i64 dx = -r; dx <= r; ++dx) {
      const i64 x = c.x + dx;
      if (x < 0 || x >= W_) continue;
      const i64 span = isqrt(m - dx * dx);
      const i64 lo = std::max<i64>(0, c.y - span);
      const i64 hi = std::min<i64>(R_ - 1, c.y + span);
      if (!fn(x, lo, hi)) return;
    }
  }

  // max over the ball of the squared distance to S; stops once >= stop.
  i64 ball_to_region(const Cell& c, i64 m, i64 stop) const {
    i64 worst = 0;
    for_ball(c, m, [&](i64 x, i64 lo, i64 hi) {
      for (i64 y = lo; y <= hi; ++y) {
        worst = std::max(worst, to_region_[static_cast<std::size_t>(y * W_ + x)]);
      }
      return worst < stop;
    });
    return worst;
  }

  // max over S of the squared distance to the ball. Only ball points with a
  // 4-neighbour outside the ball can be nearest to an outside point, and
  // those are the column and row extremes.
  i64 region_to_ball(const Cell& c, i64 m, const std::vector<std::pair<i64, Cell>>& by_distance,
                     std::vector<Cell>& rim) const {
    if (m == 0) return by_distance.front().first;
    rim.clear();
    for_ball(c, m, [&](i64 x, i64 lo, i64 hi) {
      rim.push_back({x, lo});
      if (hi != lo) rim.push_back({x, hi});
      return true;
    });
    const i64 r = isqrt(m);
    for (i64 dy = -r; dy <= r; ++dy) {
      const i64 y = c.y + dy;
      if (y < 0 || y >= R_) continue;
      const i64 span = isqrt(m - dy * dy);
      rim.push_back({std::max<i64>(0, c.x - span), y});
      rim.push_back({std::min<i64>(W_ - 1, c.x + span), y});
    }
    const double root_m = std::sqrt(static_cast<double>(m));
    i64 worst = 0;
    for (const auto& [ma, a] : by_distance) {
      if (ma <= m) break;
      // Rounding the point at distance sqrt(m) - 1/sqrt2 from c towards a
      // gives a ball point within 1/sqrt2 of it.
      if (std::sqrt(static_cast<double>(worst)) >=
          std::sqrt(static_cast<double>(ma)) - root_m + std::sqrt(2.0) + 1e-9) {
        break;
      }
      i64 nearest = kNoSite;
      for (const auto& g : rim) nearest = std::min(nearest, sq(a, g));
      worst = std::max(worst, nearest);
    }
    return worst;
  }

  // Best (squared defect, squared radius) over balls centered at c.
  std::pair<i64, i64> evaluate(const Cell& c) const {
    std::vector<std::pair<i64, Cell>> by_distance;
    by_distance.reserve(members_.size());
    for (const auto& a : members_) by_distance.push_back({sq(a, c), a});
    std::sort(by_distance.begin(), by_distance.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Cell> rim;
    const i64 top = by_distance.front().first;

    // Smallest m with d(S, B_m) <= d(B_m, S); the first term falls and the
    // second grows with m.
    i64 lo = 0, hi = top;
    while (lo < hi) {
      const i64 mid = lo + (hi - lo) / 2;
      const i64 a = region_to_ball(c, mid, by_distance, rim);
      if (ball_to_region(c, mid, a) >= a) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    const i64 at = ball_to_region(c, lo, kNoSite);
    if (lo == 0) return {at, 0};
    const i64 before = region_to_ball(c, lo - 1, by_distance, rim);
    if (before > at) return {at, lo};
    i64 first = 0, last = lo - 1;
    while (first < last) {
      const i64 mid = first + (last - first) / 2;
      if (region_to_ball(c, mid, by_distance, rim) <= before) {
        last = mid;
      } else {
        first = mid + 1;
      }
    }
    return {before, first};
  }

  i64 W_;
  i64 R_;
  std::vector<std::uint8_t> in_;
  std::vector<Cell> members_;
  std::vector<Cell> hull_;
  mutable std::vector<i64> to_region_;
};

}  // namespace

double LensFamily::half_height() const noexcept { return std::sqrt(2.0 * n + 1.0); }

bool LensFamily::contains(Point2 p) const noexcept {
  const double r2 = radius() * radius();
  const double dx = p.x - 2.0 * n;
  return p.x * p.x + p.y * p.y <= r2 && dx * dx + p.y * p.y <= r2;
}

LensStats lens_exact_stats(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "lens index n must be >= 1");
  const LensFamily lens{n};
  LensStats s;
  s.source = LensSource::analytic;
  s.inradius = 1.0;
  s.inradius_center = lens.middle();
  s.diameter = 2.0 * lens.half_height();
  s.ecc_d = s.diameter / 2.0 - s.inradius;
  s.ecc_dprime = std::log1p(s.diameter / 2.0) - std::log1p(s.inradius);
  return s;
}

LensSample sample_lens(int n, double h) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "lens index n must be >= 1");
  if (!(h > 0.0 && h <= 1.0)) throw Error(ErrorCode::invalid_argument, "spacing h must be in (0, 1]");
  LensSample s;
  s.n = n;
  s.h = h;
  if (!near_integer(n / h, s.offset)) {
    throw Error(ErrorCode::invalid_argument,
                "n / h must be an integer so the disk centers are lattice points");
  }
  const LensFamily lens{n};
  const double margin = 2.0 * lens.half_height();
  s.half_cols = static_cast<i64>(std::ceil((1.0 + margin) / h - 1e-9));
  s.half_rows = static_cast<i64>(std::ceil((lens.half_height() + margin) / h - 1e-9));

  i64 k_int = 0;
  const double k = (n + 1.0) / h;
  const bool exact = near_integer(k, k_int);
  const double k2 = k * k;
  auto inside = [&](i64 i, i64 j) {
    const i64 l = (i + s.offset) * (i + s.offset) + j * j;
    const i64 r = (i - s.offset) * (i - s.offset) + j * j;
    if (exact) return l <= k_int * k_int && r <= k_int * k_int;
    const double slack = 1e-9 * k2;
    return static_cast<double>(l) <= k2 + slack && static_cast<double>(r) <= k2 + slack;
  };

  const auto total = static_cast<std::size_t>(s.cols() * s.rows());
  std::vector<double> coords;
  coords.reserve(2 * total);
  std::vector<std::size_t> members;
  for (i64 j = -s.half_rows; j <= s.half_rows; ++j) {
    for (i64 i = -s.half_cols; i <= s.half_cols; ++i) {
      if (inside(i, j)) members.push_back(coords.size() / 2);
      coords.push_back(n + static_cast<double>(i) * h);
      coords.push_back(static_cast<double>(j) * h);
    }
  }
  s.cloud = PointCloud(2, std::move(coords));
  s.region = Region(total, std::move(members));
  return s;
}

LensMeasurement measure_lens(const LensSample& sample, LensOptions options) {
  if (!(options.lambda >= 1.0)) throw Error(ErrorCode::invalid_argument, "lambda must be >= 1");
  const LatticeLens lattice(sample);
  const double h = sample.h;
  auto dist = [h](i64 m) { return h * std::sqrt(static_cast<double>(m)); };

  LensMeasurement out;
  out.points = sample.cloud.size();
  out.region_size = sample.region.size();
  out.lambda = options.lambda;

  const auto inner = lattice.max_inradius();
  const auto outer = lattice.min_covering();
  const double R = inner.first == kNoSite ? kInf : dist(inner.first);
  const double C = dist(outer.first);
  out.max_inradius = R;
  out.inradius_center = inner.second;
  out.min_covering_radius = C;
  out.covering_center = outer.second;
  if (std::isinf(R)) {
    out.ecc_d = out.ecc_dprime = out.weak_ecc_d = out.weak_ecc_dprime = 0.0;
  } else {
    out.ecc_d = std::max(0.0, C - R);
    out.ecc_dprime = std::max(0.0, std::log1p(C) - std::log1p(R));
    out.weak_ecc_d = std::max(0.0, C - options.lambda * R);
    out.weak_ecc_dprime = std::max(0.0, std::log1p(C) - options.lambda * std::log1p(R));
  }

  if (options.quasi_ball) {
    const auto qb = lattice.quasi_ball(sample.middle_index());
    out.quasi_ball_d = dist(qb.defect);
    out.quasi_ball_dprime = std::log1p(out.quasi_ball_d);
    out.quasi_ball = {qb.center, dist(qb.radius)};
  }
  return out;
}

std::vector<LensRow> ecc_growth_experiment(const std::vector<int>& n_list, double h,
                                           LensOptions options) {
  for (int n : n_list) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "lens index n must be >= 1");
  }
  std::vector<LensRow> rows(n_list.size());
  LensOptions inner = options;
  inner.threads = 1;
  detail::parallel_for(n_list.size(), options.threads, [&](std::size_t k) {
    const auto sample = sample_lens(n_list[k], h);
    rows[k] = {n_list[k], h, measure_lens(sample, inner), lens_exact_stats(n_list[k])};
  });
  return rows;
}

Table lens_table(const std::vector<LensRow>& rows) {
  Table t({"n", "h", "points", "region_size", "ecc_d", "ecc_d_analytic", "ecc_dprime",
           "ecc_dprime_analytic", "max_inradius", "inradius_cap", "min_covering_radius",
           "quasi_ball_d", "quasi_ball_dprime", "lambda", "weak_ecc_d", "weak_ecc_dprime"});
  for (const auto& r : rows) {
    const auto& m = r.measured;
    t.add_row({std::int64_t{r.n}, r.h, static_cast<std::int64_t>(m.points),
               static_cast<std::int64_t>(m.region_size), m.ecc_d, r.analytic.ecc_d,
               m.ecc_dprime, r.analytic.ecc_dprime, m.max_inradius, 1.0 + 2.0 * r.h,
               m.min_covering_radius, m.quasi_ball_d, m.quasi_ball_dprime, m.lambda,
               m.weak_ecc_d, m.weak_ecc_dprime});
  }
  return t;
}

PointCloud square_grid(int side, double spacing) {
  if (side < 1) throw Error(ErrorCode::invalid_argument, "grid side must be >= 1");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw Error(ErrorCode::invalid_argument, "grid spacing must be positive");
  }
  std::vector<double> coords;
  coords.reserve(2 * static_cast<std::size_t>(side) * side);
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      coords.push_back(c * spacing);
      coords.push_back(r * spacing);
    }
  }
  return PointCloud(2, std::move(coords));
}

std::vector<GridRow> grid_experiment(const std::vector<int>& sides, double spacing,
                                     GridOptions options) {
  for (int s : sides) {
    if (s < 1) throw Error(ErrorCode::invalid_argument, "grid side must be >= 1");
    const auto points = static_cast<std::size_t>(s) * static_cast<std::size_t>(s);
    if (!options.fixed_base && !options.force && points > kFullScanLimit) {
      throw Error(ErrorCode::guard,
                  "side " + std::to_string(s) + " gives " + std::to_string(points) +
                      " points, above the full-scan limit of " + std::to_string(kFullScanLimit) +
                      "; use the fixed-base variant or force the full scan");
    }
  }
  std::vector<GridRow> rows;
  for (int s : sides) {
    const auto space = FiniteMetricSpace::from_cloud(square_grid(s, spacing));
    const auto logged = log_transform(space);
    const ScanOptions scan{options.threads};
    GridRow row;
    row.side = s;
    row.spacing = spacing;
    row.points = space.size();
    row.fixed_base = options.fixed_base;
    const auto d = options.fixed_base ? four_point_delta_fixed_base(space, 0, scan)
                                      : four_point_delta(space, scan);
    const auto dp = options.fixed_base ? four_point_delta_fixed_base(logged, 0, scan)
                                       : four_point_delta(logged, scan);
    row.delta_d = d.delta;
    row.witness_d = d.witness;
    row.delta_dprime = dp.delta;
    row.witness_dprime = dp.witness;
    const auto side = static_cast<std::size_t>(s);
    row.corner_bound =
        quadruple_defect(space, Quadruple{0, side - 1, (side - 1) * side, side * side - 1});
    row.corner_analytic = (std::sqrt(2.0) - 1.0) * (s - 1) * spacing;
    rows.push_back(row);
  }
  return rows;
}

Table grid_table(const std::vector<GridRow>& rows) {
  Table t({"side", "spacing", "points", "method", "delta_d", "corner_bound", "corner_analytic",
           "delta_dprime"});
  for (const auto& r : rows) {
    t.add_row({std::int64_t{r.side}, r.spacing, static_cast<std::int64_t>(r.points),
               std::string(r.fixed_base ? "fixed-base" : "full"), r.delta_d, r.corner_bound,
               r.corner_analytic, r.delta_dprime});
  }
  return t;
}

LineUltraResult line_ultrametric_experiment(int N, unsigned threads) {
  if (N < 2) throw Error(ErrorCode::invalid_argument, "N must be >= 2");
  std::vector<double> coords(static_cast<std::size_t>(N) + 1);
  std::iota(coords.begin(), coords.end(), 0.0);
  const auto space =
      FiniteMetricSpace::from_cloud(PointCloud(1, std::move(coords), MetricMode::log_euclidean));
  const auto report = ultrametric_delta(space, ScanOptions{threads});
  LineUltraResult out;
  out.N = N;
  out.delta_u = report.delta_u;
  out.gap_to_ln2 = std::log(2.0) - report.delta_u;
  out.witness = report.witness;
  return out;
}

Table line_ultra_table(const std::vector<LineUltraResult>& rows) {
  Table t({"N", "delta_u", "gap_to_ln2", "witness_x", "witness_y", "witness_z"});
  for (const auto& r : rows) {
    t.add_row({std::int64_t{r.N}, r.delta_u, r.gap_to_ln2,
               static_cast<std::int64_t>(r.witness[0]), static_cast<std::int64_t>(r.witness[1]),
               static_cast<std::int64_t>(r.witness[2])});
  }
  return t;
}

}  // namespace hypmetric
