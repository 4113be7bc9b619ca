#include "hypmetric/hyperbolicity.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "parallel.hpp"

namespace hypmetric {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Row access that works for dense and lazy spaces alike.
class RowSource {
 public:
  explicit RowSource(const FiniteMetricSpace& space) : space_(space) {}

  const double* get(std::size_t i, std::vector<double>& buffer) const {
    if (space_.dense()) return space_.row(i).data();
    buffer.resize(space_.size());
    space_.fill_row(i, buffer);
    return buffer.data();
  }

 private:
  const FiniteMetricSpace& space_;
};

// max over z of (sxy + rp[z]) - max(rx[z] + dyp, ry[z] + dxp)
inline double row_max(const double* rp, const double* rx, const double* ry, double sxy,
                      double dxp, double dyp, std::size_t n) {
  double m0 = kNegInf, m1 = kNegInf, m2 = kNegInf, m3 = kNegInf;
  std::size_t z = 0;
  for (; z + 4 <= n; z += 4) {
    const double v0 = (sxy + rp[z]) - std::max(rx[z] + dyp, ry[z] + dxp);
    const double v1 = (sxy + rp[z + 1]) - std::max(rx[z + 1] + dyp, ry[z + 1] + dxp);
    const double v2 = (sxy + rp[z + 2]) - std::max(rx[z + 2] + dyp, ry[z + 2] + dxp);
    const double v3 = (sxy + rp[z + 3]) - std::max(rx[z + 3] + dyp, ry[z + 3] + dxp);
    m0 = v0 > m0 ? v0 : m0;
    m1 = v1 > m1 ? v1 : m1;
    m2 = v2 > m2 ? v2 : m2;
    m3 = v3 > m3 ? v3 : m3;
  }
  for (; z < n; ++z) {
    const double v = (sxy + rp[z]) - std::max(rx[z] + dyp, ry[z] + dxp);
    m0 = v > m0 ? v : m0;
  }
  return std::max(std::max(m0, m1), std::max(m2, m3));
}

struct BaseResult {
  double twice_defect = 0.0;
  Quadruple witness;
};

BaseResult scan_base(const FiniteMetricSpace& space, std::size_t p) {
  const std::size_t n = space.size();
  RowSource rows(space);
  std::vector<double> bp, bx, by;
  const double* rp = rows.get(p, bp);

  // Clamped at zero: (p, 0, 0, 0) has defect exactly 0 and is the smallest
  // quadruple with this basepoint.
  BaseResult best{0.0, Quadruple{p, 0, 0, 0}};
  for (std::size_t x = 0; x < n; ++x) {
    const double* rx = rows.get(x, bx);
    const double dxp = rp[x];
    for (std::size_t y = x; y < n; ++y) {
      const double* ry = rows.get(y, by);
      const double sxy = rx[y];
      const double dyp = rp[y];
      const double m = row_max(rp, rx, ry, sxy, dxp, dyp, n);
      if (m > best.twice_defect) {
        for (std::size_t z = 0; z < n; ++z) {
          const double v = (sxy + rp[z]) - std::max(rx[z] + dyp, ry[z] + dxp);
          if (v == m) {
            best = {m, Quadruple{p, x, y, z}};
            break;
          }
        }
      }
    }
  }
  return best;
}

std::uint64_t quadruples_per_base(std::size_t n) {
  const auto m = static_cast<std::uint64_t>(n);
  return m * (m * (m + 1) / 2);
}

}  // namespace

double quadruple_defect(const FiniteMetricSpace& space, const Quadruple& q) {
  const double s1 = space(q.x, q.y) + space(q.p, q.z);
  const double s2 = space(q.x, q.z) + space(q.p, q.y);
  const double s3 = space(q.y, q.z) + space(q.p, q.x);
  return 0.5 * (s1 - std::max(s2, s3));
}

double triple_defect(const FiniteMetricSpace& space, std::size_t x, std::size_t y,
                     std::size_t z) {
  return space(x, y) - std::max(space(x, z), space(y, z));
}

DeltaReport four_point_delta(const FiniteMetricSpace& space, ScanOptions options) {
  const std::size_t n = space.size();
  DeltaReport report;
  if (n == 0) return report;
  std::vector<BaseResult> per_base(n);
  detail::parallel_for(n, options.threads,
                       [&](std::size_t p) { per_base[p] = scan_base(space, p); });
  BaseResult best = per_base[0];
  for (std::size_t p = 1; p < n; ++p) {
    if (per_base[p].twice_defect > best.twice_defect) best = per_base[p];
  }
  report.delta = 0.5 * best.twice_defect;
  report.witness = best.witness;
  report.quadruples_scanned = quadruples_per_base(n) * n;
  return report;
}

DeltaReport four_point_delta_fixed_base(const FiniteMetricSpace& space, std::size_t base,
                                        ScanOptions /*options*/) {
  if (base >= space.size()) throw Error(ErrorCode::invalid_argument, "basepoint out of range");
  const auto best = scan_base(space, base);
  DeltaReport report;
  report.delta = 0.5 * best.twice_defect;
  report.witness = best.witness;
  report.quadruples_scanned = quadruples_per_base(space.size());
  return report;
}

UltraReport ultrametric_delta(const FiniteMetricSpace& space, ScanOptions options) {
  const std::size_t n = space.size();
  UltraReport report;
  if (n == 0) return report;

  struct RowResult {
    double defect = 0.0;
    std::array<std::size_t, 3> witness{0, 0, 0};
  };
  std::vector<RowResult> per_x(n);
  const RowSource rows(space);
  detail::parallel_for(n, options.threads, [&](std::size_t x) {
    std::vector<double> bx, by;
    const double* rx = rows.get(x, bx);
    RowResult best{0.0, {x, 0, 0}};
    // A zero result never wins the strict reduction below, so the global
    // witness stays (0, 0, 0) when the space is an ultrametric.
    for (std::size_t y = x; y < n; ++y) {
      const double* ry = rows.get(y, by);
      const double dxy = rx[y];
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t z = 0; z < n; ++z) {
        const double v = std::max(rx[z], ry[z]);
        nearest = v < nearest ? v : nearest;
      }
      const double m = dxy - nearest;
      if (m > best.defect) {
        for (std::size_t z = 0; z < n; ++z) {
          if (dxy - std::max(rx[z], ry[z]) == m) {
            best = {m, {x, y, z}};
            break;
          }
        }
      }
    }
    per_x[x] = best;
  });

  RowResult best{0.0, {0, 0, 0}};
  for (const auto& r : per_x) {
    if (r.defect > best.defect) best = r;
  }
  report.delta_u = best.defect;
  report.witness = best.witness;
  const auto m = static_cast<std::uint64_t>(n);
  report.triples_scanned = m * (m + 1) / 2 * m;
  return report;
}

}  // namespace hypmetric
