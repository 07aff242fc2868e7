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

#ifndef MDMIN_IO_HPP_
#define MDMIN_IO_HPP_

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>
#include "mdmin/constructions.hpp"
#include "mdmin/solver.hpp"

namespace mdmin {

using Json = nlohmann::json;

// Malformed or out-of-range input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SolveMode { kDual, kPrimal, kPenalized };

struct ProblemFile {
  CompactSetModel m;
  SolveMode mode = SolveMode::kDual;
  double r = 0.0;
  double l = 0.0;
  double lambda = 0.0;
  Penalty penalty;
  // Net resolution for the penalized mode.
  double eps = 0.0;
  SolverOptions options;
  std::string report_path;
  std::string svg_path;
};

Json to_json(Point p);
Json to_json(const Network& n);
Json to_json(const CompactSetModel& m);
Json to_json(const EnergyReport& e);
Json to_json(const CheckReport& c);
Json to_json(const BoundReport& b);
Json to_json(const EnergeticClassification& c);
Json to_json(const SolveReport& r);
Json to_json(const ConstructionResult& c);
Json to_json(const SolverOptions& o);
Json to_json(const ProblemFile& p);

// The readers throw InputError with a path-qualified message.
Point point_from_json(const Json& j);
Network network_from_json(const Json& j);
CompactSetModel model_from_json(const Json& j);
SolverOptions options_from_json(const Json& j);
ProblemFile problem_from_json(const Json& j);

// Serialises with shortest round-trip doubles (at most 17 significant
// digits) and two-space indentation.
std::string dump(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mdmin

#endif  // MDMIN_IO_HPP_
