// Copyright 2026 The ambistl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ambistl/error.hpp"
#include "ambistl/pipeline.hpp"
#include "ambistl/robustness.hpp"
#include "ambistl/trajectory.hpp"

namespace ambistl {

struct RobustnessRow {
  std::string formula;
  double probability = 0.0;
  std::optional<double> robustness;  // empty when evaluation failed
  bool satisfied = false;            // robustness > 0
  std::optional<ErrorKind> error;
  std::string error_message;
};

struct RobustnessReport {
  std::vector<RobustnessRow> rows;  // same order as the candidate set

  bool has_error(ErrorKind kind) const {
    for (const auto& r : rows) {
      if (r.error == kind) return true;
    }
    return false;
  }
};

// Robustness of every candidate at t = 0. Failures are recorded on the row
// instead of aborting the report.
inline RobustnessReport evaluate_candidates(const CandidateSet& set, const Trajectory& x, const RegionMap& regions) {
  RobustnessReport report;
  for (const auto& c : set.candidates) {
    RobustnessRow row{c.text, c.probability, std::nullopt, false, std::nullopt, {}};
    try {
      double r = robustness(c.formula, x, regions, 0);
      row.robustness = r;
      row.satisfied = r > 0.0;
    } catch (const Error& e) {
      row.error = e.kind();
      row.error_message = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ambistl
