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

#ifndef MDMIN_BOUNDS_HPP_
#define MDMIN_BOUNDS_HPP_

#include <map>
#include <string>

namespace mdmin {

struct BoundReport {
  double value = 0.0;
  std::string formula;
  std::map<std::string, double> inputs;
};

// Volume of the unit k-ball for k in {1, 2, 3}.
double unit_ball_volume(int k);

// H^d of the t-neighbourhood of a curve of the given length, upper bound.
BoundReport minkowski_volume_upper(double length, double t, int d);

// Length lower bound for a minimiser whose M has d-volume V.
BoundReport lower_bound_volume(double V, double r, int d);

// Length lower bound for convex M with boundary length P.
BoundReport lower_bound_perimeter(double P, double r);

}  // namespace mdmin

#endif  // MDMIN_BOUNDS_HPP_
