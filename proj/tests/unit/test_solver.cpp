// Copyright 2026 The mdmin Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdmin/solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mdmin/bounds.hpp"
#include "mdmin/constructions.hpp"
#include "mdmin/energy.hpp"
#include "mdmin/regularity.hpp"

namespace mdmin {
namespace {

const double kSqrt3 = std::sqrt(3.0);

SolverOptions circle_options() {
  SolverOptions o;
  o.schedule = {0.02, 0.004};
  return o;
}

TEST(OptimizeFixedTopology, EquilateralStar) {
  const Topology star{3, 1, {{0, 3}, {1, 3}, {2, 3}}};
  const double r = 0.05;
  const auto res = optimize_fixed_topology(
      star, std::vector<Ball>{{{0, 0}, r}, {{1, 0}, r}, {{0.5, kSqrt3 / 2}, r}});
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(res.length, kSqrt3 - 3 * r, 1e-8);
}

TEST(OptimizeFixedTopology, ZeroRadiusPinsTerminals) {
  const Topology star{3, 1, {{0, 3}, {1, 3}, {2, 3}}};
  const auto res = optimize_fixed_topology(
      star, std::vector<Ball>{{{0, 0}, 0}, {{1, 0}, 0}, {{0.5, kSqrt3 / 2}, 0}});
  EXPECT_NEAR(res.length, kSqrt3, 1e-8);
  EXPECT_EQ(res.network.vertex(0), (Point{0, 0}));
}

TEST(OptimizeFixedTopology, RestartIndependence) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  const std::vector<Ball> balls{{{0, 0}, 0.1}, {{2, 0.2}, 0.1}, {{1.7, 1.9}, 0.1}, {{-0.2, 1.5}, 0.1}};
  for (const auto& t : full_topologies(4)) {
    double lo = 1e300, hi = -1e300;
    for (int k = 0; k < 20; ++k) {
      std::vector<Point> init;
      for (std::size_t v = 0; v < t.num_vertices(); ++v) init.push_back({u(rng), u(rng)});
      const double len = optimize_fixed_topology(t, balls, init).length;
      lo = std::min(lo, len);
      hi = std::max(hi, len);
    }
    EXPECT_LE(hi - lo, 1e-8);
  }
}

TEST(OptimizeFixedTopology, RejectsMismatchedBalls) {
  const Topology star{3, 1, {{0, 3}, {1, 3}, {2, 3}}};
  EXPECT_THROW(optimize_fixed_topology(star, std::vector<Ball>{{{0, 0}, 1}}), std::invalid_argument);
}

TEST(ClusterTerminals, NearbyPointsShareACluster) {
  const auto c = cluster_terminals({{0, 0}, {0.1, 0}, {5, 0}, {5, 0.05}, {10, 0}}, 0.2);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c[1], (std::vector<std::size_t>{2, 3}));
}

TEST(ClusterTerminals, BallsWithoutCommonInteriorStaySeparate) {
  // Pairwise within 2r but no common interior point.
  const double r = 1.0;
  const auto c = cluster_terminals({{0, 0}, {2, 0}}, r);
  EXPECT_EQ(c.size(), 2u);
}

TEST(SolveFinite, CollinearPath) {
  const double d = 1.0, r = 0.1;
  const auto rep = solve_finite({{0, 0}, {d, 0}, {2 * d, 0}}, r);
  EXPECT_NEAR(rep.length, 2 * d - 2 * r, 1e-8);
  EXPECT_TRUE(rep.checks.passed());
  EXPECT_TRUE(covered(SampleNet{{{0, 0}, {d, 0}, {2 * d, 0}}, 0.0}, rep.network, r));
}

TEST(SolveFinite, EquilateralTripodBeatsPaths) {
  const double r = 0.05;
  const auto rep = solve_finite({{0, 0}, {1, 0}, {0.5, kSqrt3 / 2}}, r);
  EXPECT_NEAR(rep.length, kSqrt3 - 3 * r, 1e-8);
  EXPECT_LT(rep.length, 2 - 2 * r);
  EXPECT_EQ(rep.network.max_degree(), 3u);
  EXPECT_TRUE(check_branching(rep.network).passed());
}

TEST(SolveFinite, UnitSquareHasTwoCoOptimalNetworks) {
  const double r = 0.02;
  const auto rep = solve_finite({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, r);
  EXPECT_NEAR(rep.length, 1 + kSqrt3 - 4 * r, 1e-8);
  ASSERT_EQ(rep.co_optimal.size(), 2u);
  EXPECT_NEAR(length(rep.co_optimal[0]), length(rep.co_optimal[1]), 1e-9);
  EXPECT_GT(hausdorff_distance(rep.co_optimal[0], rep.co_optimal[1]), 0.1);
}

TEST(SolveFinite, SegmentBetweenTwoBalls) {
  const auto rep = solve_finite({{0, 0}, {4, 0}}, 1.0);
  EXPECT_NEAR(rep.length, 2.0, 1e-9);
  const auto seg = segment_two_balls({0, 0}, {4, 0}, 1.0);
  EXPECT_LE(hausdorff_distance(rep.network, seg.network), 1e-6);
}

TEST(SolveFinite, CoincidentBallsGiveAPoint) {
  const auto rep = solve_finite({{0, 0}, {0.1, 0}, {0.05, 0.05}}, 0.5);
  EXPECT_EQ(rep.network.num_vertices(), 1u);
  EXPECT_EQ(rep.length, 0.0);
}

TEST(SolveFinite, RandomTrianglesMatchTripodConstruction) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    const double r = 0.05;
    if (std::min({dist(a, b), dist(b, c), dist(a, c)}) < 4 * r) continue;
    const auto rep = solve_finite({a, b, c}, r);
    EXPECT_NEAR(rep.length, length(tripod(a, b, c, r).network), 1e-7) << "trial " << trial;
  }
}

TEST(SolveFinite, Preconditions) {
  EXPECT_THROW(solve_finite({}, 0.1), std::invalid_argument);
  EXPECT_THROW(solve_finite({{0, 0}}, -1.0), std::invalid_argument);
}

TEST(SolveDual, TwoPoints) {
  const auto rep = solve_dual(CompactSetModel::finite({{0, 0}, {4, 0}}), 1.0);
  EXPECT_NEAR(rep.length, 2.0, 1e-6);
  EXPECT_EQ(rep.mode, "dual");
}

TEST(SolveDual, SinglePoint) {
  const auto rep = solve_dual(CompactSetModel::finite({{3, 4}}), 0.5);
  EXPECT_EQ(rep.network.num_vertices(), 1u);
  EXPECT_EQ(rep.length, 0.0);
}

TEST(SolveDual, SmallSetCollapsesToOneCenter) {
  const auto rep = solve_dual(CompactSetModel::circle({1, 1}, 0.5), 0.6);
  EXPECT_EQ(rep.network.num_vertices(), 1u);
  EXPECT_NEAR(dist(rep.network.vertex(0), {1, 1}), 0.0, 1e-6);
}

TEST(SolveDual, CircleMatchesHorseshoe) {
  const auto m = CompactSetModel::circle({0, 0}, 1.0);
  const double r = 0.2;
  const auto rep = solve_dual(m, r, circle_options());
  const double hs = length(horseshoe(m, r).network);
  EXPECT_NEAR(rep.length, hs, 1e-2);
  EXPECT_GT(rep.length, hs - 1e-3);
  EXPECT_TRUE(rep.converged);
  EXPECT_TRUE(rep.checks.passed());
  EXPECT_TRUE(covered(sample(m, 0.004), rep.network, r));
  EXPECT_EQ(rep.schedule, (std::vector<double>{0.02, 0.004}));
}

TEST(SolveDual, CircleFromSpanningSeed) {
  const auto m = CompactSetModel::circle({0, 0}, 1.0);
  SolverOptions o = circle_options();
  o.oracle_seed = false;
  o.seed = 3;
  const auto rep = solve_dual(m, 0.2, o);
  EXPECT_EQ(rep.seed_kind, "spanning-polyline");
  EXPECT_EQ(rep.seed, 3u);
  EXPECT_NEAR(rep.length, length(horseshoe(m, 0.2).network), 1e-2);
  EXPECT_TRUE(rep.checks.passed());
}

TEST(SolveDual, SameSeedSameResult) {
  const auto m = CompactSetModel::polyline({{0, 0}, {1, 0.5}, {2, 0}, {3, 1}}, false);
  SolverOptions o;
  o.seed = 9;
  const auto a = solve_dual(m, 0.1, o);
  const auto b = solve_dual(m, 0.1, o);
  EXPECT_EQ(a.network, b.network);
}

TEST(SolveDual, LengthDecreasesWithR) {
  const auto m = CompactSetModel::circle({0, 0}, 1.0);
  double prev = 1e300;
  for (double r : {0.15, 0.2, 0.3}) {
    SolverOptions o;
    o.schedule = {0.1 * r, 0.02 * r};
    const double len = solve_dual(m, r, o).length;
    EXPECT_LE(len, prev + 1e-6);
    prev = len;
  }
}

TEST(SolveDual, BoundsAreRespected) {
  const auto m = CompactSetModel::circle({0, 0}, 1.0);
  const auto rep = solve_dual(m, 0.2, circle_options());
  ASSERT_FALSE(rep.bounds.empty());
  for (const auto& b : rep.bounds) EXPECT_GE(rep.length, b.value);
  EXPECT_GT(rep.length, lower_bound_perimeter(2 * kPi, 0.2).value);
  EXPECT_GT(rep.lower_bound_gap, 0.0);
}

TEST(SolveDual, Preconditions) {
  const auto m = CompactSetModel::circle({0, 0}, 1.0);
  SolverOptions o;
  EXPECT_THROW(solve_dual(m, 0.0, o), std::invalid_argument);
  o.schedule = {0.01, 0.02};
  EXPECT_THROW(solve_dual(m, 0.2, o), std::invalid_argument);
  o.schedule = {0.3, 0.01};
  EXPECT_THROW(solve_dual(m, 0.2, o), std::invalid_argument);
}

TEST(SolvePrimal, TwoPointsInvertsDual) {
  const auto m = CompactSetModel::finite({{0, 0}, {4, 0}});
  const auto rep = solve_primal(m, 2.0);
  EXPECT_NEAR(rep.r, 1.0, 4e-6 + 1e-9);
  EXPECT_LE(rep.length, 2.0);
  EXPECT_EQ(rep.mode, "primal");
}

TEST(SolvePrimal, ZeroLengthGivesOneCenter) {
  const auto rep = solve_primal(CompactSetModel::circle({2, 0}, 1.0), 0.0);
  EXPECT_EQ(rep.network.num_vertices(), 1u);
  EXPECT_NEAR(rep.r, 1.0, 1e-9);
  EXPECT_NEAR(dist(rep.network.vertex(0), {2, 0}), 0.0, 1e-9);
}

TEST(SolvePrimal, CircleRoundTrip) {
  const auto m = CompactSetModel::circle({0, 0}, 1.0);
  const double l = length(horseshoe(m, 0.2).network);
  const auto rep = solve_primal(m, l, circle_options());
  EXPECT_NEAR(rep.r, 0.2, 1e-3);
  EXPECT_LE(rep.length, l);
}

TEST(PenalizedObjective, Arithmetic) {
  const Network n = Network::polyline({{0, 0}, {2, 0}});
  const SampleNet s{{{1, 0.3}}, 0.0};
  EXPECT_NEAR(penalized_objective(n, s, 0.1, {}), 0.5, 1e-12);
  EXPECT_NEAR(penalized_objective(n, s, 5.0, {PenaltyMode::kHinge, 3.0}), 0.3, 1e-12);
  EXPECT_NEAR(penalized_objective(n, s, 5.0, {PenaltyMode::kHinge, 1.5}), 0.3 + 2.5, 1e-12);
  EXPECT_THROW(penalized_objective(n, s, 0.0, {}), std::invalid_argument);
  EXPECT_THROW(penalized_objective(n, s, 1.0, {PenaltyMode::kHinge, -1.0}), std::invalid_argument);
}

TEST(SolvePenalized, LargeLambdaGivesOneCenter) {
  const auto m = CompactSetModel::circle({0, 0}, 1.0);
  const auto rep = solve_penalized(m, 1e3, {}, 0.02);
  EXPECT_EQ(rep.network.num_vertices(), 1u);
  EXPECT_NEAR(rep.objective, 1.0, 1e-6);
  EXPECT_NEAR(rep.r, rep.energy.value, 0.0);
}

TEST(SolvePenalized, SmallLambdaHugsM) {
  const auto m = CompactSetModel::circle({0, 0}, 1.0);
  const double eps = 0.02;
  const auto rep = solve_penalized(m, 1e-4, {}, eps);
  EXPECT_LE(rep.energy.value, 2 * eps);
}

TEST(SolvePenalized, HingeRecoversHorseshoe) {
  const auto m = CompactSetModel::circle({0, 0}, 1.0);
  const double l = length(horseshoe(m, 0.2).network);
  const auto rep = solve_penalized(m, 2.0, {PenaltyMode::kHinge, l}, 0.004);
  EXPECT_LE(rep.length, l + 1e-6);
  EXPECT_NEAR(rep.r, 0.2, 5e-3);
  EXPECT_NEAR(rep.length, l, 2e-2);
}

}  // namespace
}  // namespace mdmin
