// Acceptance run: one PASS/FAIL line per criterion; exits 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypmetric/ball_geometry.hpp"
#include "hypmetric/hyperbolicity.hpp"
#include "hypmetric/lens_lab.hpp"
#include "hypmetric/quasigeodesic.hpp"
#include "oracles.hpp"

using namespace hypmetric;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%s] C%d %s (%.2fs / %.0fs)%s: %s\n", pass ? "PASS" : "FAIL", id, name, secs,
              budget_s, in_time ? "" : " over budget", o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) { return format_number(v); }

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return true;
}

Outcome c1_ultrametric() {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  std::uniform_int_distribution<std::size_t> count(2, 64);
  const double ln2 = std::log(2.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto cloud = oracle::random_cloud(rng, count(rng), dim(rng));
    const auto logged = log_transform(FiniteMetricSpace::from_cloud(cloud));
    worst = std::max(worst, ultrametric_delta(logged).delta_u);
  }
  for (int i = 0; i < 50; ++i) {
    const auto m = oracle::random_metric(rng, count(rng));
    const auto logged = log_transform(FiniteMetricSpace::from_matrix(m));
    worst = std::max(worst, ultrametric_delta(logged).delta_u);
  }
  const auto line = line_ultrametric_experiment(1000);
  const double expected = std::log(1001.0 / 501.0);
  const bool ok = worst <= ln2 + 1e-9 && std::abs(line.delta_u - expected) <= 1e-9 &&
                  line.gap_to_ln2 < 0.0011;
  return {ok, "max random delta_u=" + fmt(worst) + " line delta_u=" + fmt(line.delta_u) +
                  " expected=" + fmt(expected) + " gap=" + fmt(line.gap_to_ln2)};
}

std::vector<LensRow> lens_rows;

Outcome c2_lens() {
  lens_rows = ecc_growth_experiment({4, 12, 40}, 0.05);
  const double target_d[] = {2.0, 4.0, 8.0};
  const double target_p[] = {std::log(2.0), std::log(3.0), std::log(5.0)};
  bool ok = true;
  std::vector<double> ed, ep;
  std::ostringstream detail;
  for (std::size_t i = 0; i < lens_rows.size(); ++i) {
    const auto& m = lens_rows[i].measured;
    ok = ok && std::abs(m.ecc_d - target_d[i]) <= 0.15 &&
         std::abs(m.ecc_dprime - target_p[i]) <= 0.15;
    ed.push_back(m.ecc_d);
    ep.push_back(m.ecc_dprime);
    detail << "n=" << lens_rows[i].n << " ecc_d=" << fmt(m.ecc_d)
           << " ecc_dprime=" << fmt(m.ecc_dprime) << "; ";
  }
  ok = ok && strictly_increasing(ed) && strictly_increasing(ep);
  return {ok, detail.str()};
}

Outcome c3_inradius() {
  bool ok = lens_rows.size() == 3;
  std::ostringstream detail;
  for (const auto& r : lens_rows) {
    ok = ok && r.measured.max_inradius <= 1.0 + 2.0 * r.h;
    detail << "n=" << r.n << " inradius=" << fmt(r.measured.max_inradius) << "; ";
  }
  return {ok, detail.str() + "cap=" + fmt(1.0 + 2.0 * 0.05)};
}

Outcome c4_quasi_ball() {
  std::vector<double> qd, qp;
  std::ostringstream detail;
  for (const auto& r : lens_rows) {
    qd.push_back(r.measured.quasi_ball_d);
    qp.push_back(r.measured.quasi_ball_dprime);
    detail << "n=" << r.n << " qb_d=" << fmt(r.measured.quasi_ball_d)
           << " qb_dprime=" << fmt(r.measured.quasi_ball_dprime) << "; ";
  }
  return {lens_rows.size() == 3 && strictly_increasing(qd) && strictly_increasing(qp),
          detail.str()};
}

Outcome c5_kernel() {
  const auto square =
      FiniteMetricSpace::from_cloud(PointCloud(2, {0, 0, 1, 0, 0, 1, 1, 1}));
  const double sq = four_point_delta(square).delta;
  bool ok = std::abs(sq - (std::sqrt(2.0) - 1.0)) <= 1e-12;

  std::mt19937_64 rng(1005);
  bool small_zero = true;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = rng() % 4;
    const auto space = i % 2 ? FiniteMetricSpace::from_cloud(oracle::random_cloud(rng, n, 2))
                             : FiniteMetricSpace::from_matrix(oracle::random_metric(rng, n));
    small_zero = small_zero && four_point_delta(space).delta == 0.0;
  }

  // Star tree: center 0 with leaves at random edge lengths.
  double star_worst = 0.0;
  std::uniform_real_distribution<double> edge(0.1, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t leaves = 3 + rng() % 10;
    const std::size_t n = leaves + 1;
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) w[i] = edge(rng);
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = i == j ? 0.0 : w[i] + w[j];
    star_worst = std::max(
        star_worst, four_point_delta(FiniteMetricSpace::from_matrix(DistanceMatrix(n, d))).delta);
  }

  int monotone = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 4 + rng() % 21;
    const auto space = i % 2 ? FiniteMetricSpace::from_cloud(oracle::random_cloud(rng, n, 2))
                             : FiniteMetricSpace::from_matrix(oracle::random_metric(rng, n));
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < n; ++k)
      if (rng() % 2) members.push_back(k);
    const auto sub = space.subspace(Region(n, members));
    monotone += four_point_delta(sub).delta <= four_point_delta(space).delta;
  }
  ok = ok && small_zero && star_worst <= 1e-12 && monotone == 100;
  return {ok, "square=" + fmt(sq) + " small_spaces_zero=" + (small_zero ? "yes" : "no") +
                  " star_max=" + fmt(star_worst) + " monotone=" + std::to_string(monotone) +
                  "/100"};
}

Outcome c6_grid() {
  const auto rows = grid_experiment({4, 8, 16}, 1.0);
  GridOptions fixed;
  fixed.fixed_base = true;
  const auto corner = grid_experiment({16}, 1.0, fixed).front();
  // Brute-force oracle values (full scans, tests/oracles/grid_delta.py).
  const double oracle_dprime[] = {0.2705309581974783, 0.30927491039103994, 0.3280981391963429};
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    ok = ok && r.delta_d >= r.corner_bound && std::abs(r.corner_bound - r.corner_analytic) <= 1e-12;
    ok = ok && std::abs(r.delta_dprime - oracle_dprime[i]) <= 1e-12;
    if (i > 0) ok = ok && std::abs(r.delta_dprime - rows[i - 1].delta_dprime) < 0.05;
    detail << "s=" << r.side << " delta_d=" << fmt(r.delta_d) << " bound=" << fmt(r.corner_bound)
           << " delta_dprime=" << fmt(r.delta_dprime) << "; ";
  }
  ok = ok && corner.delta_d >= corner.corner_bound;
  detail << "s=16 fixed-base delta_d=" << fmt(corner.delta_d)
         << " delta_dprime=" << fmt(corner.delta_dprime);
  return {ok, detail.str()};
}

Outcome c7_length() {
  double previous = 0.0;
  bool monotone = true;
  for (int k = 0; k <= 30; ++k) {
    const double pieces = std::ldexp(1.0, k);
    const double v = pieces * std::log1p(10.0 / pieces);
    monotone = monotone && v >= previous;
    previous = v;
  }
  const double estimate = log_segment_length(10.0);
  const double fixed = 1000.0 * std::log1p(10.0 / 1000.0);
  const bool ok = monotone && estimate >= 10.0 - 1e-3 && estimate <= 10.0 &&
                  std::abs(fixed - 9.95033) <= 1e-6 &&
                  std::abs(fixed - 1000.0 * std::log(1.01)) <= 1e-9;
  return {ok, "estimate=" + fmt(estimate) + " monotone=" + (monotone ? "yes" : "no") +
                  " k1000=" + fmt(fixed)};
}

Outcome c8_taming() {
  const QGParams params{2.0, 1.0};
  const auto k = TameConstants::from(params);
  const bool constants = k.c_prime == 9.0 && k.k1 == 6.0 && k.k2 == 66.0;

  // Random inputs with 50 integer samples: headings drift slowly, steps are
  // drawn up to the largest value the upper quasi-geodesic bound allows.
  std::mt19937_64 rng(1008);
  const double max_step = std::expm1(params.L * 1.0 + params.C);
  std::uniform_real_distribution<double> step(0.0, max_step);
  std::uniform_real_distribution<double> turn(-0.1, 0.1);
  int admissible = 0, passed = 0;
  const int attempts = 2000;
  double best_defect = INFINITY;
  for (int a = 0; a < attempts && admissible < 100; ++a) {
    std::vector<double> ts;
    std::vector<Point2> pts;
    Point2 p{0, 0};
    double heading = 0.0;
    for (int t = 0; t < 50; ++t) {
      ts.push_back(t);
      pts.push_back(p);
      heading += turn(rng);
      const double s = a % 2 ? max_step : step(rng);
      p = {p.x + s * std::cos(heading), p.y + s * std::sin(heading)};
    }
    const SampledPath input(ts, pts);
    const double defect = qg_defect(input, params.L, MetricMode::log_euclidean).defect;
    best_defect = std::min(best_defect, defect);
    if (defect > params.C) continue;
    ++admissible;
    passed += tame(input, params).report.passed();
  }
  // Consecutive samples are at most e^3 - 1 apart, so 49 steps reach d' of at
  // most ln(1 + 49(e^3 - 1)), while the lower bound needs 49/2 - 1 = 23.5.
  const double reach = std::log1p(49.0 * max_step);
  const double needed = 49.0 / params.L - params.C;
  std::ostringstream detail;
  detail << "admissible=" << admissible << "/" << attempts << " passed=" << passed
         << " least_defect=" << fmt(best_defect) << " (C=1); max reachable d'(0,49)="
         << fmt(reach) << " < required " << fmt(needed)
         << ": no 50-sample integer input is admissible";
  return {constants && admissible == 100 && passed == 100, detail.str()};
}

Outcome c9_horizon() {
  const double d = horizon({1.0, 0.0});
  const double independent =
      oracle::bisect([](double x) { return std::exp(x) - x - 8.0; }, 0.0, 10.0);
  const auto k = TameConstants::from({1.0, 0.0});
  const double probe = d + 1e-6;
  const bool violated = std::expm1(probe) > k.k1 * probe + k.k2;
  const bool ok = std::abs(d - 2.3356) <= 1e-3 && std::abs(independent - 2.3356) <= 1e-3 &&
                  std::abs(d - independent) <= 1e-6 && violated;
  return {ok, "D_star=" + fmt(d) + " independent=" + fmt(independent) +
                  " violated_at_plus_1e-6=" + (violated ? "yes" : "no")};
}

Outcome c10_transfer() {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> radius(0.5, 8.0);
  int ecc_ok = 0, sets_ok = 0;
  double worst = -INFINITY;
  for (int i = 0; i < 200; ++i) {
    const auto cloud = oracle::random_cloud(rng, 10 + rng() % 55, 1 + rng() % 3);
    const auto space = FiniteMetricSpace::from_cloud(cloud);
    const auto logged = log_transform(space);
    const BallSpec b1{rng() % space.size(), radius(rng)};
    const BallSpec b2{rng() % space.size(), radius(rng)};
    const auto region = intersect_balls(space, b1, b2);
    const auto region_log = intersect_balls(logged, {b1.center, std::log1p(b1.radius)},
                                            {b2.center, std::log1p(b2.radius)});
    sets_ok += region == region_log;
    const double e = eccentricity(space, region).ecc;
    const double e_log = eccentricity(logged, region).ecc;
    worst = std::max(worst, e_log - e);
    ecc_ok += e_log <= e + 1e-9;
  }
  return {ecc_ok == 200 && sets_ok == 200,
          "ecc'<=ecc " + std::to_string(ecc_ok) + "/200, index sets equal " +
              std::to_string(sets_ok) + "/200, max(ecc'-ecc)=" + fmt(worst)};
}

}  // namespace

int main() {
  criterion(1, "ln 2 ultrametric bound", 30, c1_ultrametric);
  criterion(2, "lens eccentricity regression", 120, c2_lens);
  criterion(3, "inradius cap", 120, c3_inradius);
  criterion(4, "quasi-ball growth", 120, c4_quasi_ball);
  criterion(5, "4-point kernel exactness", 10, c5_kernel);
  criterion(6, "grid saturation", 60, c6_grid);
  criterion(7, "length preservation", 1, c7_length);
  criterion(8, "taming", 60, c8_taming);
  criterion(9, "horizon", 1, c9_horizon);
  criterion(10, "d to d' transfer", 30, c10_transfer);
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
