#include <cmath>
#include <random>

#include "doctest.h"
#include "hypmetric/ball_geometry.hpp"
#include "hypmetric/hyperbolicity.hpp"
#include "hypmetric/lens_lab.hpp"
#include "hypmetric/quasigeodesic.hpp"
#include "oracles.hpp"

using namespace hypmetric;

namespace {

FiniteMetricSpace random_space(std::mt19937_64& rng, std::size_t max_points = 24) {
  std::uniform_int_distribution<std::size_t> count(2, max_points);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  if (rng() % 3 == 0) return FiniteMetricSpace::from_matrix(oracle::random_metric(rng, count(rng)));
  return FiniteMetricSpace::from_cloud(oracle::random_cloud(rng, count(rng), dim(rng)));
}

Region random_region(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < n; ++i)
    if (rng() % 2) members.push_back(i);
  if (members.empty()) members.push_back(rng() % n);
  return Region(n, std::move(members));
}

FiniteMetricSpace scaled(const FiniteMetricSpace& space, double factor) {
  auto m = space.to_matrix();
  for (double& v : m.values) v *= factor;
  return FiniteMetricSpace::from_matrix(std::move(m));
}

}  // namespace

TEST_CASE("log transform keeps the metric axioms and shrinks distances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto space = random_space(rng);
    const auto logged = log_transform(space);
    CHECK(validate_metric(logged).ok());
    for (std::size_t i = 0; i < space.size(); ++i)
      for (std::size_t j = 0; j < space.size(); ++j) CHECK(logged(i, j) <= space(i, j));
  }
}

TEST_CASE("log metric has ultrametric defect at most ln 2") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto logged = log_transform(random_space(rng, 40));
    CHECK(ultrametric_delta(logged).delta_u <= std::log(2.0) + 1e-9);
  }
}

TEST_CASE("four-point delta: duplicates, scaling and subspaces") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto space = random_space(rng, 16);
    const double delta = four_point_delta(space).delta;

    auto m = space.to_matrix();
    const std::size_t n = m.n;
    const std::size_t dup = rng() % n;
    std::vector<double> grown((n + 1) * (n + 1), 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j)
        grown[i * (n + 1) + j] = m.at(i == n ? dup : i, j == n ? dup : j);
    const auto with_dup = FiniteMetricSpace::from_matrix(DistanceMatrix(n + 1, grown));
    CHECK(four_point_delta(with_dup).delta == delta);

    for (double factor : {0.25, 3.0}) {
      CHECK(four_point_delta(scaled(space, factor)).delta ==
            doctest::Approx(factor * delta).epsilon(1e-12));
    }

    const auto sub = space.subspace(random_region(rng, n));
    CHECK(four_point_delta(sub).delta <= delta);

    // delta <= min of the two Gromov products it compares, so <= half the diameter.
    double diameter = 0.0;
    for (double v : m.values) diameter = std::max(diameter, v);
    CHECK(delta <= 0.5 * diameter + 1e-12);
  }
}

TEST_CASE("gromov product bounds") {
  std::mt19937_64 rng(14);
  const auto space = random_space(rng, 12);
  const std::size_t n = space.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const double g = gromov_product(space, p, x, y);
        CHECK(g >= -1e-12);
        CHECK(g <= std::min(space(x, p), space(y, p)) + 1e-12);
        CHECK(g == gromov_product(space, p, y, x));
      }
}

TEST_CASE("hausdorff distance is a metric on regions") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const auto space = random_space(rng, 20);
    const auto a = random_region(rng, space.size());
    const auto b = random_region(rng, space.size());
    const auto c = random_region(rng, space.size());
    CHECK(hausdorff_distance(space, a, a) == 0.0);
    CHECK(hausdorff_distance(space, a, b) == hausdorff_distance(space, b, a));
    CHECK(hausdorff_distance(space, a, c) <=
          hausdorff_distance(space, a, b) + hausdorff_distance(space, b, c) + 1e-12);
  }
}

TEST_CASE("transfer from d to d' on ball intersections") {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> radius(0.5, 8.0);
  for (int trial = 0; trial < 60; ++trial) {
    const auto cloud = oracle::random_cloud(rng, 10 + rng() % 40, 1 + rng() % 3);
    const auto space = FiniteMetricSpace::from_cloud(cloud);
    const auto logged = log_transform(space);
    const BallSpec b1{rng() % space.size(), radius(rng)};
    const BallSpec b2{rng() % space.size(), radius(rng)};
    const auto region = intersect_balls(space, b1, b2);
    const auto region_log = intersect_balls(logged, {b1.center, std::log1p(b1.radius)},
                                            {b2.center, std::log1p(b2.radius)});
    CHECK(region == region_log);

    const double ecc = eccentricity(space, region).ecc;
    const double ecc_log = eccentricity(logged, region).ecc;
    CHECK(ecc_log <= ecc + 1e-9);

    const double weak1 = weak_ecc_defect(space, region, 1.0);
    const double weak2 = weak_ecc_defect(space, region, 2.0);
    CHECK(weak1 == ecc);
    CHECK(weak2 <= weak1);
  }
}

TEST_CASE("sampled lens inradius stays under 1 + 2h") {
  for (int n = 1; n <= 6; ++n) {
    for (double h : {1.0, 0.5, 0.25, 0.2, 0.125, 0.1}) {
      const auto sample = sample_lens(n, h);
      const auto m = measure_lens(sample, {2.0, false, 1});
      CHECK(m.max_inradius <= 1.0 + 2.0 * h);
      CHECK(m.ecc_dprime <= m.ecc_d + 1e-9);
    }
  }
}

TEST_CASE("segment length under d' approaches the Euclidean length from below") {
  for (double length : {0.01, 0.5, 10.0, 1e4}) {
    double previous = 0.0;
    for (double tol : {1e-1, 1e-3, 1e-5, 1e-7}) {
      const double l = log_segment_length(length, tol);
      CHECK(l <= length);
      CHECK(l >= previous);
      previous = l;
    }
    CHECK(length - previous <= 1e-5 * std::max(1.0, length));
  }
  const PLPath path({0, 1, 2, 3}, {{0, 0}, {3, 4}, {3, 10}, {0, 0}});
  CHECK(pl_length(path, MetricMode::euclidean) == doctest::Approx(5 + 6 + std::hypot(3, 10)));
  CHECK(pl_length(path, MetricMode::log_euclidean) <= pl_length(path, MetricMode::euclidean));
}

TEST_CASE("taming short random admissible paths") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> step(1.0, 4.0);
  std::uniform_real_distribution<double> turn(-0.3, 0.3);
  const QGParams params{2.0, 1.0};
  int accepted = 0;
  for (int attempt = 0; attempt < 400 && accepted < 40; ++attempt) {
    std::vector<double> ts;
    std::vector<Point2> pts;
    Point2 p{0, 0};
    double heading = 0.0;
    for (int t = 0; t <= 5; ++t) {
      ts.push_back(t);
      pts.push_back(p);
      heading += turn(rng);
      const double s = step(rng);
      p = {p.x + s * std::cos(heading), p.y + s * std::sin(heading)};
    }
    const SampledPath input(ts, pts);
    if (qg_defect(input, params.L, MetricMode::log_euclidean).defect > params.C) continue;
    ++accepted;
    const auto report = tame(input, params).report;
    CHECK(report.conclusion1());
    CHECK(report.conclusion2());
    CHECK(report.conclusion4());
  }
  CHECK(accepted >= 20);
}
