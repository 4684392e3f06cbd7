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

// Structured output. Keys keep insertion order so that output is
// byte-stable:
//
//   {"sentence", "n_derivations", "n_discarded",
//    "candidates": [{"formula", "score", "probability", "support_count"
//                    [, "robustness", "satisfied"[, "error"]]}]}

#pragma once

#include <nlohmann/json.hpp>

#include "ambistl/evaluate.hpp"
#include "ambistl/pipeline.hpp"

namespace ambistl {

using ordered_json = nlohmann::ordered_json;

inline ordered_json candidate_set_json(const CandidateSet& set, const RobustnessReport* report = nullptr) {
  ordered_json out;
  out["sentence"] = set.sentence;
  out["n_derivations"] = set.n_derivations;
  out["n_discarded"] = set.n_discarded;
  out["candidates"] = ordered_json::array();
  for (std::size_t i = 0; i < set.candidates.size(); ++i) {
    const auto& c = set.candidates[i];
    ordered_json j;
    j["formula"] = c.text;
    j["score"] = c.score;
    j["probability"] = c.probability;
    j["support_count"] = c.support_count;
    if (report != nullptr) {
      const auto& row = report->rows.at(i);
      j["robustness"] = row.robustness ? ordered_json(*row.robustness) : ordered_json(nullptr);
      j["satisfied"] = row.satisfied;
      if (row.error) j["error"] = error_kind_name(*row.error);
    }
    out["candidates"].push_back(std::move(j));
  }
  return out;
}

}  // namespace ambistl
