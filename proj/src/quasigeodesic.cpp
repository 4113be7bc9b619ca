#include "hypmetric/quasigeodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hypmetric {

namespace {

double euclid(Point2 a, Point2 b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

void require_increasing(const std::vector<double>& params) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!std::isfinite(params[i])) {
      throw Error(ErrorCode::invalid_argument, "path parameters must be finite");
    }
    if (i > 0 && !(params[i - 1] < params[i])) {
      throw Error(ErrorCode::invalid_argument, "path parameters must be strictly increasing");
    }
  }
}

template <class DistFn>
QGDefect qg_defect_impl(const std::vector<double>& params, double L, DistFn&& dist) {
  if (!(L >= 1.0)) throw Error(ErrorCode::invalid_argument, "L must be >= 1");
  QGDefect worst;
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = i + 1; j < params.size(); ++j) {
      const double span = params[j] - params[i];
      const double d = dist(i, j);
      const double excess = std::max(span / L - d, d - L * span);
      if (excess > worst.defect) worst = {excess, i, j};
    }
  }
  return worst;
}

}  // namespace

double plane_distance(Point2 a, Point2 b, MetricMode mode) noexcept {
  const double d = euclid(a, b);
  return mode == MetricMode::euclidean ? d : std::log1p(d);
}

void QGParams::validate() const {
  if (!(L >= 1.0) || !std::isfinite(L)) throw Error(ErrorCode::invalid_argument, "L must be >= 1");
  if (!(C >= 0.0) || !std::isfinite(C)) throw Error(ErrorCode::invalid_argument, "C must be >= 0");
}

TameConstants TameConstants::from(const QGParams& params) {
  params.validate();
  const double sum = params.L + params.C;
  TameConstants k;
  k.c_prime = 3.0 * sum;
  k.k1 = params.L * sum;
  k.k2 = (params.L * k.c_prime + 4.0) * sum;
  return k;
}

SampledPath::SampledPath(std::vector<double> params_in, std::vector<Point2> points_in)
    : params(std::move(params_in)), points(std::move(points_in)) {
  if (params.size() != points.size()) {
    throw Error(ErrorCode::invalid_argument, "path needs one parameter per point");
  }
  require_increasing(params);
}

PLPath::PLPath(std::vector<double> params, std::vector<Point2> breakpoints)
    : params_(std::move(params)), breakpoints_(std::move(breakpoints)) {
  if (params_.size() != breakpoints_.size() || params_.empty()) {
    throw Error(ErrorCode::invalid_argument, "path needs one parameter per breakpoint");
  }
  require_increasing(params_);
}

Point2 PLPath::at(double t) const {
  if (t <= params_.front()) return breakpoints_.front();
  if (t >= params_.back()) return breakpoints_.back();
  const auto it = std::upper_bound(params_.begin(), params_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - params_.begin()) - 1;
  const double frac = (t - params_[i]) / (params_[i + 1] - params_[i]);
  const Point2 p = breakpoints_[i];
  const Point2 q = breakpoints_[i + 1];
  return {p.x + frac * (q.x - p.x), p.y + frac * (q.y - p.y)};
}

double PLPath::euclidean_length(double t0, double t1) const {
  if (t1 < t0) std::swap(t0, t1);
  t0 = std::clamp(t0, start(), end());
  t1 = std::clamp(t1, start(), end());
  double total = 0.0;
  Point2 current = at(t0);
  auto it = std::upper_bound(params_.begin(), params_.end(), t0);
  for (; it != params_.end() && *it < t1; ++it) {
    const Point2 next = breakpoints_[static_cast<std::size_t>(it - params_.begin())];
    total += euclid(current, next);
    current = next;
  }
  return total + euclid(current, at(t1));
}

QGDefect qg_defect(const SampledPath& path, double L, MetricMode mode) {
  return qg_defect_impl(path.params, L, [&](std::size_t i, std::size_t j) {
    return plane_distance(path.points[i], path.points[j], mode);
  });
}

QGDefect qg_defect(const PLPath& path, double L, MetricMode mode) {
  return qg_defect_impl(path.params(), L, [&](std::size_t i, std::size_t j) {
    return plane_distance(path.breakpoints()[i], path.breakpoints()[j], mode);
  });
}

QGDefect qg_defect(const FiniteMetricSpace& space, const Chain& chain, double L) {
  for (auto i : chain.points) {
    if (i >= space.size()) throw Error(ErrorCode::invalid_argument, "chain point out of range");
  }
  return qg_defect_impl(chain.params, L, [&](std::size_t i, std::size_t j) {
    return space(chain.points[i], chain.points[j]);
  });
}

double log_segment_length(double length, double tolerance) {
  if (!(length >= 0.0)) throw Error(ErrorCode::invalid_argument, "length must be >= 0");
  if (length == 0.0) return 0.0;
  double pieces = 1.0;
  double previous = std::log1p(length);
  // 2^60 pieces is far past the point where the sums stop changing in double.
  for (int level = 1; level <= 60; ++level) {
    pieces *= 2.0;
    const double current = pieces * std::log1p(length / pieces);
    if (std::abs(current - previous) < tolerance) return current;
    previous = current;
  }
  return previous;
}

double pl_length(const PLPath& path, MetricMode mode, double tolerance) {
  const auto& pts = path.breakpoints();
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double seg = euclid(pts[i - 1], pts[i]);
    total += mode == MetricMode::euclidean ? seg : log_segment_length(seg, tolerance);
  }
  return total;
}

std::vector<double> tame_skeleton(double a, double b) {
  if (!(a < b)) throw Error(ErrorCode::invalid_argument, "path needs a < b");
  std::vector<double> skeleton{a};
  for (double k = std::floor(a) + 1.0; k < b; k += 1.0) {
    if (k > a) skeleton.push_back(k);
  }
  skeleton.push_back(b);
  return skeleton;
}

TameResult tame(const SampledPath& input, const QGParams& params, TameOptions options) {
  params.validate();
  if (input.size() < 2) throw Error(ErrorCode::invalid_argument, "path needs at least two samples");
  if (!(options.probe_spacing > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "probe spacing must be positive");
  }
  const double a = input.params.front();
  const double b = input.params.back();

  const auto admission = qg_defect(input, params.L, MetricMode::log_euclidean);
  if (admission.defect > params.C + options.admission_slack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "input is not (" << params.L << "," << params.C
        << ")-quasi-geodesic w.r.t. d': worst pair t=" << input.params[admission.i]
        << ", t'=" << input.params[admission.j] << " needs C=" << admission.defect;
    throw Error(ErrorCode::not_quasi_geodesic, msg.str());
  }

  const auto skeleton = tame_skeleton(a, b);
  std::vector<Point2> skeleton_points;
  skeleton_points.reserve(skeleton.size());
  for (double s : skeleton) {
    const auto it = std::lower_bound(input.params.begin(), input.params.end(), s);
    if (it == input.params.end() || *it != s) {
      std::ostringstream msg;
      msg << "input has no sample at skeleton parameter " << s;
      throw Error(ErrorCode::invalid_argument, msg.str());
    }
    skeleton_points.push_back(input.points[static_cast<std::size_t>(it - input.params.begin())]);
  }

  TameResult result{PLPath(skeleton, std::move(skeleton_points)), TameConstants::from(params),
                    {}};
  const PLPath& path = result.path;
  TameReport& report = result.report;
  report.constants = result.constants;
  report.probe_spacing = options.probe_spacing;
  report.hausdorff_bound = params.L + params.C;

  std::vector<double> probes = skeleton;
  for (std::size_t k = 0;; ++k) {
    const double t = a + static_cast<double>(k) * options.probe_spacing;
    if (t >= b) break;
    probes.push_back(t);
  }
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  std::vector<Point2> probe_points;
  probe_points.reserve(probes.size());
  for (double t : probes) probe_points.push_back(path.at(t));
  report.probe_count = probes.size();

  report.endpoints_preserved =
      path.at(a) == input.points.front() && path.at(b) == input.points.back();

  const SampledPath probed(probes, probe_points);
  report.qg_defect_probe = qg_defect(probed, params.L, MetricMode::log_euclidean).defect;

  // Probes include every breakpoint, so consecutive probes bound straight pieces.
  std::vector<double> arc(probes.size(), 0.0);
  std::vector<double> arc_log(probes.size(), 0.0);
  for (std::size_t k = 1; k < probes.size(); ++k) {
    const double piece = euclid(probe_points[k - 1], probe_points[k]);
    arc[k] = arc[k - 1] + piece;
    arc_log[k] = arc_log[k - 1] + log_segment_length(piece, options.refine_tolerance);
  }
  const auto& k = result.constants;
  report.chord_arc_excess = -std::numeric_limits<double>::infinity();
  report.chord_arc_excess_euclidean = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t j = i; j < probes.size(); ++j) {
      const double bound =
          k.k1 * plane_distance(probe_points[i], probe_points[j], MetricMode::log_euclidean) +
          k.k2;
      const double excess = (arc_log[j] - arc_log[i]) - bound;
      if (excess > report.chord_arc_excess) {
        report.chord_arc_excess = excess;
        report.chord_arc_worst_i = i;
        report.chord_arc_worst_j = j;
      }
      report.chord_arc_excess_euclidean =
          std::max(report.chord_arc_excess_euclidean, (arc[j] - arc[i]) - bound);
    }
  }

  auto directed = [](const std::vector<Point2>& from, const std::vector<Point2>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& q : to) {
        nearest = std::min(nearest, plane_distance(p, q, MetricMode::log_euclidean));
      }
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  report.hausdorff =
      std::max(directed(input.points, probe_points), directed(probe_points, input.points));
  return result;
}

double horizon(const QGParams& params, double tolerance) {
  const auto k = TameConstants::from(params);
  auto gap = [&](double d) { return std::expm1(d) - (k.k1 * d + k.k2); };
  double lo = 0.0;
  double hi = std::max(10.0, std::log(k.k1 * 100.0 + k.k2 + 1.0));
  while (gap(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (gap(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace hypmetric
