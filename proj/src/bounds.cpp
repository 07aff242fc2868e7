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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mdmin/geometry.hpp"

namespace mdmin {

double unit_ball_volume(int k) {
  switch (k) {
    case 1: return 2.0;
    case 2: return kPi;
    case 3: return 4.0 * kPi / 3.0;
    default: throw std::invalid_argument("unit_ball_volume: unsupported dimension");
  }
}

BoundReport minkowski_volume_upper(double length, double t, int d) {
  if (d != 2 && d != 3) throw std::invalid_argument("minkowski_volume_upper: d must be 2 or 3");
  if (!(length >= 0.0) || !(t > 0.0)) throw std::invalid_argument("minkowski_volume_upper: bad input");
  BoundReport b;
  b.value = length * unit_ball_volume(d - 1) * std::pow(t, d - 1) + unit_ball_volume(d) * std::pow(t, d);
  b.formula = "H(gamma) w_{d-1} t^{d-1} + w_d t^d";
  b.inputs = {{"length", length}, {"t", t}, {"d", d}};
  return b;
}

BoundReport lower_bound_volume(double V, double r, int d) {
  if (d != 2 && d != 3) throw std::invalid_argument("lower_bound_volume: d must be 2 or 3");
  if (!(V >= 0.0) || !(r > 0.0)) throw std::invalid_argument("lower_bound_volume: bad input");
  BoundReport b;
  b.value = std::max(0.0, (V - unit_ball_volume(d) * std::pow(r, d)) /
                              (unit_ball_volume(d - 1) * std::pow(r, d - 1)));
  b.formula = "max(0, (V - w_d r^d) / (w_{d-1} r^{d-1}))";
  b.inputs = {{"V", V}, {"r", r}, {"d", d}};
  return b;
}

BoundReport lower_bound_perimeter(double P, double r) {
  if (!(P >= 0.0) || !(r > 0.0)) throw std::invalid_argument("lower_bound_perimeter: bad input");
  BoundReport b;
  b.value = std::max(0.0, (P - 2.0 * kPi * r) / 2.0);
  b.formula = "max(0, (P - 2 pi r) / 2)";
  b.inputs = {{"P", P}, {"r", r}};
  return b;
}

}  // namespace mdmin
