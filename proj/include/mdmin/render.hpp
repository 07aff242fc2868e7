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

#ifndef MDMIN_RENDER_HPP_
#define MDMIN_RENDER_HPP_

#include <optional>
#include <string>

#include "mdmin/energy.hpp"
#include "mdmin/mset.hpp"
#include "mdmin/network.hpp"

namespace mdmin {

struct RenderSpec {
  double width = 800.0;
  double height = 800.0;
  double margin = 20.0;
  double network_stroke = 2.0;
  double model_stroke = 1.0;
  bool show_model = true;
  bool show_network = true;
  bool show_balls = true;
  bool show_energetic = true;
  bool show_correspondences = true;

  // Throws std::invalid_argument for non-positive dimensions.
  void validate() const;
};

struct RenderInput {
  const Network* network = nullptr;
  const CompactSetModel* m = nullptr;
  // Radius of the drawn balls; balls are drawn about finite M, or about the
  // correspondence witnesses for curves.
  std::optional<double> r;
  const EnergeticClassification* energetic = nullptr;
};

// SVG 1.1 document with one <g> per layer and one <path> per network edge.
// Coordinates use a fixed decimal format so output is byte-stable.
std::string render_svg(const RenderInput& in, const RenderSpec& spec = {});

}  // namespace mdmin

#endif  // MDMIN_RENDER_HPP_
