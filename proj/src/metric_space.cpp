#include "hypmetric/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hypmetric {

const char* to_string(MetricMode mode) noexcept {
  return mode == MetricMode::euclidean ? "euclidean" : "log-euclidean";
}

const char* to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::none: return "none";
    case Axiom::non_finite: return "non_finite";
    case Axiom::negative: return "negative";
    case Axiom::diagonal: return "diagonal";
    case Axiom::symmetry: return "symmetry";
    case Axiom::triangle: return "triangle";
  }
  return "unknown";
}

DistanceMatrix::DistanceMatrix(std::size_t size, std::vector<double> data)
    : n(size), values(std::move(data)) {
  if (values.size() != n * n) {
    throw Error(ErrorCode::invalid_argument, "distance matrix must hold n*n entries");
  }
}

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords, MetricMode mode)
    : dim_(dim), coords_(std::move(coords)), mode_(mode) {
  if (dim_ == 0) throw Error(ErrorCode::invalid_argument, "point dimension must be positive");
  if (coords_.size() % dim_ != 0) {
    throw Error(ErrorCode::invalid_argument, "coordinate count is not a multiple of dim");
  }
  for (double v : coords_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::invalid_argument, "non-finite coordinate");
  }
}

double PointCloud::euclidean(std::size_t i, std::size_t j) const noexcept {
  const double* a = coords_.data() + i * dim_;
  const double* b = coords_.data() + j * dim_;
  double sum = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double PointCloud::distance(std::size_t i, std::size_t j) const noexcept {
  const double d = euclidean(i, j);
  return mode_ == MetricMode::euclidean ? d : std::log1p(d);
}

PointCloud PointCloud::with_mode(MetricMode mode) const {
  PointCloud copy = *this;
  copy.mode_ = mode;
  return copy;
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  if (ok()) {
    out << "pass";
  } else {
    out << to_string(violated) << " failure at (" << witness[0] << "," << witness[1];
    if (violated == Axiom::triangle) out << "," << witness[2];
    out << ") excess=" << excess;
  }
  if (pseudometric()) {
    out << "; warning: " << coincident_pairs << " coincident pair(s), first ("
        << first_coincident[0] << "," << first_coincident[1] << ")";
  }
  return out.str();
}

namespace {

template <class Dist>
ValidationReport validate_impl(std::size_t n, Dist&& d, double tolerance) {
  ValidationReport report;
  auto fail = [&](Axiom axiom, std::size_t i, std::size_t j, std::size_t k, double excess) {
    report.violated = axiom;
    report.witness = {i, j, k};
    report.excess = excess;
    return report;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = d(i, j);
      if (!std::isfinite(v)) return fail(Axiom::non_finite, i, j, 0, v);
      if (v < 0.0) return fail(Axiom::negative, i, j, 0, -v);
    }
    if (d(i, i) != 0.0) return fail(Axiom::diagonal, i, i, 0, d(i, i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = d(i, j);
      const double b = d(j, i);
      if (a != b) return fail(Axiom::symmetry, i, j, 0, std::abs(a - b));
      if (a == 0.0) {
        if (report.coincident_pairs == 0) report.first_coincident = {i, j};
        ++report.coincident_pairs;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double dij = d(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const double excess = dij - (d(i, k) + d(k, j));
        if (excess > tolerance) return fail(Axiom::triangle, i, j, k, excess);
      }
    }
  }
  return report;
}

}  // namespace

ValidationReport validate_metric(const DistanceMatrix& matrix, double tolerance) {
  return validate_impl(
      matrix.n, [&](std::size_t i, std::size_t j) { return matrix.at(i, j); }, tolerance);
}

ValidationReport validate_metric(const FiniteMetricSpace& space, double tolerance) {
  if (space.dense()) {
    const auto* data = space.row(0).data();
    const std::size_t n = space.size();
    return validate_impl(
        n, [&](std::size_t i, std::size_t j) { return data[i * n + j]; }, tolerance);
  }
  return validate_impl(
      space.size(), [&](std::size_t i, std::size_t j) { return space.distance(i, j); },
      tolerance);
}

FiniteMetricSpace FiniteMetricSpace::from_matrix(DistanceMatrix matrix,
                                                 std::vector<std::string> labels,
                                                 double tolerance) {
  const auto report = validate_metric(matrix, tolerance);
  if (!report.ok()) throw Error(ErrorCode::metric, report.describe());
  if (!labels.empty() && labels.size() != matrix.n) {
    throw Error(ErrorCode::invalid_argument, "label count does not match point count");
  }
  FiniteMetricSpace space;
  space.n_ = matrix.n;
  space.matrix_ = std::make_shared<const std::vector<double>>(std::move(matrix.values));
  if (!labels.empty()) {
    space.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  }
  return space;
}

FiniteMetricSpace FiniteMetricSpace::from_cloud(PointCloud cloud, std::size_t dense_limit) {
  FiniteMetricSpace space;
  space.n_ = cloud.size();
  if (space.n_ <= dense_limit) {
    std::vector<double> values(space.n_ * space.n_);
    for (std::size_t i = 0; i < space.n_; ++i) {
      values[i * space.n_ + i] = 0.0;
      for (std::size_t j = i + 1; j < space.n_; ++j) {
        const double d = cloud.distance(i, j);
        values[i * space.n_ + j] = d;
        values[j * space.n_ + i] = d;
      }
    }
    space.matrix_ = std::make_shared<const std::vector<double>>(std::move(values));
  }
  space.cloud_ = std::make_shared<const PointCloud>(std::move(cloud));
  return space;
}

std::span<const double> FiniteMetricSpace::row(std::size_t i) const noexcept {
  if (!matrix_) return {};
  return {matrix_->data() + i * n_, n_};
}

void FiniteMetricSpace::fill_row(std::size_t i, std::span<double> out) const noexcept {
  if (matrix_) {
    std::copy_n(matrix_->data() + i * n_, n_, out.begin());
    return;
  }
  for (std::size_t j = 0; j < n_; ++j) out[j] = lazy_distance(i, j);
}

double FiniteMetricSpace::lazy_distance(std::size_t i, std::size_t j) const noexcept {
  double d = cloud_->distance(i, j);
  for (int k = 0; k < log_depth_; ++k) d = std::log1p(d);
  return d;
}

std::string FiniteMetricSpace::label(std::size_t i) const {
  if (labels_) return (*labels_)[i];
  return std::to_string(i);
}

DistanceMatrix FiniteMetricSpace::to_matrix() const {
  DistanceMatrix out(n_, std::vector<double>(n_ * n_));
  for (std::size_t i = 0; i < n_; ++i) {
    fill_row(i, std::span<double>(out.values.data() + i * n_, n_));
  }
  return out;
}

FiniteMetricSpace FiniteMetricSpace::subspace(const Region& region) const {
  if (region.universe() != n_) {
    throw Error(ErrorCode::invalid_argument, "region belongs to a different space");
  }
  const auto& members = region.members();
  const std::size_t m = members.size();
  std::vector<double> values(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) values[a * m + b] = distance(members[a], members[b]);
  }
  FiniteMetricSpace sub;
  sub.n_ = m;
  sub.matrix_ = std::make_shared<const std::vector<double>>(std::move(values));
  if (labels_) {
    std::vector<std::string> labels;
    labels.reserve(m);
    for (auto i : members) labels.push_back((*labels_)[i]);
    sub.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  }
  return sub;
}

FiniteMetricSpace log_transform(const FiniteMetricSpace& space) {
  FiniteMetricSpace out = space;
  if (space.matrix_) {
    auto values = *space.matrix_;
    for (double& v : values) v = std::log1p(v);
    out.matrix_ = std::make_shared<const std::vector<double>>(std::move(values));
  }
  ++out.log_depth_;
  return out;
}

Region::Region(std::size_t universe, std::vector<std::size_t> members)
    : universe_(universe), members_(std::move(members)), mask_(universe, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= universe_) {
    throw Error(ErrorCode::invalid_argument,
                "region index " + std::to_string(members_.back()) + " out of range");
  }
  for (auto i : members_) mask_[i] = 1;
}

Region Region::all(std::size_t universe) {
  std::vector<std::size_t> members(universe);
  for (std::size_t i = 0; i < universe; ++i) members[i] = i;
  return Region(universe, std::move(members));
}

double gromov_product(const FiniteMetricSpace& space, std::size_t p, std::size_t x,
                      std::size_t y) {
  return 0.5 * (space(x, p) + space(y, p) - space(x, y));
}

Region ball(const FiniteMetricSpace& space, std::size_t center, double radius) {
  if (!(radius >= 0.0)) throw Error(ErrorCode::invalid_argument, "ball radius must be >= 0");
  if (center >= space.size()) throw Error(ErrorCode::invalid_argument, "ball center out of range");
  std::vector<std::size_t> members;
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (space(center, y) <= radius) members.push_back(y);
  }
  return Region(space.size(), std::move(members));
}

double directed_hausdorff(const FiniteMetricSpace& space, const Region& from,
                          const Region& to) {
  if (from.empty()) return 0.0;
  if (to.empty()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (auto a : from.members()) {
    double nearest = std::numeric_limits<double>::infinity();
    for (auto b : to.members()) {
      nearest = std::min(nearest, space(a, b));
      if (nearest <= worst) break;
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

double hausdorff_distance(const FiniteMetricSpace& space, const Region& a, const Region& b) {
  if (a.universe() != space.size() || b.universe() != space.size()) {
    throw Error(ErrorCode::invalid_argument, "regions must belong to the given space");
  }
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed_hausdorff(space, a, b), directed_hausdorff(space, b, a));
}

Chain::Chain(std::vector<double> params_in, std::vector<std::size_t> points_in)
    : params(std::move(params_in)), points(std::move(points_in)) {
  if (params.size() != points.size()) {
    throw Error(ErrorCode::invalid_argument, "chain needs one parameter per point");
  }
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (!(params[i - 1] < params[i])) {
      throw Error(ErrorCode::invalid_argument, "chain parameters must be strictly increasing");
    }
  }
}

double chain_length(const FiniteMetricSpace& space, const Chain& chain) {
  for (auto i : chain.points) {
    if (i >= space.size()) throw Error(ErrorCode::invalid_argument, "chain point out of range");
  }
  double total = 0.0;
  for (std::size_t i = 1; i < chain.points.size(); ++i) {
    total += space(chain.points[i - 1], chain.points[i]);
  }
  return total;
}

}  // namespace hypmetric
