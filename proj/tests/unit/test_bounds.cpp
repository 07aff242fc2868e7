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

#include "mdmin/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "mdmin/geometry.hpp"

namespace mdmin {
namespace {

TEST(UnitBall, Volumes) {
  EXPECT_DOUBLE_EQ(unit_ball_volume(1), 2.0);
  EXPECT_DOUBLE_EQ(unit_ball_volume(2), kPi);
  EXPECT_DOUBLE_EQ(unit_ball_volume(3), 4.0 * kPi / 3.0);
  EXPECT_THROW(unit_ball_volume(4), std::invalid_argument);
}

TEST(Minkowski, Examples) {
  EXPECT_NEAR(minkowski_volume_upper(0, 1, 2).value, kPi, 1e-15);
  EXPECT_NEAR(minkowski_volume_upper(3, 0.5, 2).value, 3 + kPi / 4, 1e-15);
  EXPECT_NEAR(minkowski_volume_upper(1, 1, 3).value, kPi + 4 * kPi / 3, 1e-14);
  EXPECT_THROW(minkowski_volume_upper(1, 0, 2), std::invalid_argument);
  EXPECT_THROW(minkowski_volume_upper(1, 1, 1), std::invalid_argument);
}

TEST(Minkowski, SegmentNeighbourhoodIsExact) {
  // The t-neighbourhood of a segment is a stadium of area 2 L t + pi t^2.
  for (double L : {0.5, 1.0, 4.0}) {
    EXPECT_NEAR(minkowski_volume_upper(L, 0.3, 2).value, 2 * L * 0.3 + kPi * 0.09, 1e-14);
  }
}

TEST(VolumeBound, Examples) {
  EXPECT_EQ(lower_bound_volume(kPi * 0.01, 0.1, 2).value, 0.0);
  EXPECT_NEAR(lower_bound_volume(4, 0.1, 2).value, (4 - 0.01 * kPi) / 0.2, 1e-12);
  EXPECT_EQ(lower_bound_volume(0.001, 1.0, 2).value, 0.0);
  EXPECT_THROW(lower_bound_volume(1, 0, 2), std::invalid_argument);
  const auto b = lower_bound_volume(4, 0.1, 2);
  EXPECT_FALSE(b.formula.empty());
  EXPECT_EQ(b.inputs.at("V"), 4.0);
}

TEST(PerimeterBound, Examples) {
  EXPECT_NEAR(lower_bound_perimeter(2 * kPi, 0.2).value, 0.8 * kPi, 1e-14);
  EXPECT_EQ(lower_bound_perimeter(2 * kPi * 0.3, 0.3).value, 0.0);
  EXPECT_NEAR(lower_bound_perimeter(6, 0.01).value, (6 - 0.02 * kPi) / 2, 1e-14);
  EXPECT_THROW(lower_bound_perimeter(-1, 0.1), std::invalid_argument);
}

TEST(Bounds, MonotoneInR) {
  double prev_v = 1e300, prev_p = 1e300;
  for (double r = 0.01; r < 1.0; r += 0.01) {
    const double v = lower_bound_volume(kPi, r, 2).value;
    const double p = lower_bound_perimeter(2 * kPi, r).value;
    EXPECT_LE(v, prev_v);
    EXPECT_LE(p, prev_p);
    prev_v = v;
    prev_p = p;
  }
}

}  // namespace
}  // namespace mdmin
