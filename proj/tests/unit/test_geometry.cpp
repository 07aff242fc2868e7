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

#include "mdmin/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace mdmin {
namespace {

TEST(DistPointSegment, PerpendicularFootInside) {
  EXPECT_DOUBLE_EQ(dist_point_segment({0, 1}, {-1, 0}, {1, 0}), 1.0);
}

TEST(DistPointSegment, NearestIsEndpoint) {
  EXPECT_DOUBLE_EQ(dist_point_segment({2, 0}, {-1, 0}, {1, 0}), 1.0);
}

TEST(DistPointSegment, DegenerateSegment) {
  EXPECT_DOUBLE_EQ(dist_point_segment({3, 4}, {0, 0}, {0, 0}), 5.0);
}

TEST(DistPointSegment, AgreesWithDenseSamplingOracle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const Point p{u(rng), u(rng)}, a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const int k = 4000;
    double best = 1e300;
    for (int i = 0; i <= k; ++i) best = std::min(best, dist(p, lerp(a, b, double(i) / k)));
    const double d = dist_point_segment(p, a, b);
    EXPECT_LE(d, best + 1e-12);
    EXPECT_GE(d, best - dist(a, b) / k);
    EXPECT_LE(d, std::min(dist(p, a), dist(p, b)) + 1e-15);
    EXPECT_GE(d, 0.0);
  }
}

TEST(AngleBetween, Examples) {
  const Point o{0, 0};
  EXPECT_NEAR(angle_between(Ray{o, {1, 0}}, Ray{o, {0, 1}}), kPi / 2, 1e-15);
  EXPECT_NEAR(angle_between(Ray{o, {1, 0}}, Ray{o, {-1, 0}}), kPi, 1e-15);
  EXPECT_NEAR(angle_between(Ray{o, {1, 0}}, Ray{o, polar(kTwoPiOverThree)}), kTwoPiOverThree, 1e-15);
}

TEST(SignedTurn, Examples) {
  EXPECT_NEAR(signed_turn(Point{1, 0}, Point{0, 1}), kPi / 2, 1e-15);
  EXPECT_NEAR(signed_turn(Point{1, 0}, Point{0, -1}), -kPi / 2, 1e-15);
  EXPECT_EQ(signed_turn(Point{1, 0}, Point{1, 0}), 0.0);
}

TEST(SignedTurn, AntisymmetricExceptAtBranch) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    const Point a = polar(u(rng)), b = polar(u(rng));
    EXPECT_NEAR(signed_turn(a, b), -signed_turn(b, a), 1e-14);
    EXPECT_NEAR(angle_between(a, b), angle_between(b, a), 0.0);
  }
  EXPECT_EQ(signed_turn(Point{1, 0}, Point{-1, 0}), kPi);
  EXPECT_EQ(signed_turn(Point{-1, 0}, Point{1, 0}), kPi);
  EXPECT_EQ(signed_turn(Point{0, 1}, Point{0, -1}), kPi);
  EXPECT_EQ(signed_turn(Point{0, -1}, Point{0, 1}), kPi);
}

TEST(WrapAngle, Range) {
  EXPECT_NEAR(wrap_angle(3 * kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(-kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(0.5), 0.5, 0);
}

TEST(LineCircle, Crossings) {
  double t[2];
  ASSERT_EQ(line_circle_params({-2, 0}, {2, 0}, {0, 0}, 1.0, t), 2);
  EXPECT_NEAR(t[0], 0.25, 1e-15);
  EXPECT_NEAR(t[1], 0.75, 1e-15);
  EXPECT_EQ(line_circle_params({-2, 2}, {2, 2}, {0, 0}, 1.0, t), 0);
}

}  // namespace
}  // namespace mdmin
