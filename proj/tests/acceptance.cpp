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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ambistl/ambistl.hpp"
#include "oracle.hpp"

namespace {

using ambistl::CandidateSet;
using ambistl::stl::Formula;

const std::vector<std::pair<std::string, std::string>> kCorpus = {
    {"S1", "Reach B within 10 seconds."},
    {"S2", "Reach B within 10 seconds while avoiding A."},
    {"S3", "Within 10 seconds, reach B while avoiding A."},
    {"S4", "Reach  B or C within 10 seconds."},
    {"S5", "Reach B within 10 seconds or reach C within 15 seconds."},
    {"S6", "Reach B within 10 seconds and then reach C within 15 seconds."},
    {"S7", "Reach B within 10 seconds and then reach C within 15 seconds and then reach D within 5 seconds."},
    {"S8", "Within 10 seconds, reach B or reach C while avoiding A."},
    {"S9", "Reach B within 10 seconds or reach C within 15 seconds while avoiding A."},
    {"S10", "Reach B within 10 seconds and then reach C within 15 seconds while avoiding A."},
    {"S11",
     "Reach B within 10 seconds and then reach C within 15 seconds and then reach D within 5 seconds while avoiding "
     "A."},
    {"S12",
     "Reach B within 10 seconds and then reach C within 15 seconds or reach D within 5 seconds while avoiding A."},
};

const std::vector<std::size_t> kExpectedCounts = {1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 5};

// Generated formula sets, listed in published rank order.
const std::vector<std::pair<std::string, std::vector<std::string>>> kFormulaSets = {
    {"S8",
     {"(F[0,10] phi_B | (F[0,10] phi_C & G[0,10] !phi_A))", "(F[0,10](phi_B | phi_C) & G[0,10] !phi_A)"}},
    {"S9",
     {"(F[0,10] phi_B | (F[0,15] phi_C & G[0,15] !phi_A))", "((F[0,10] phi_B | F[0,15] phi_C) & G[0,15] !phi_A)"}},
    {"S10",
     {"F[0,10](phi_B & F[0,15] phi_C & G[0,15] !phi_A)", "(F[0,10](phi_B & F[0,15] phi_C) & G[0,25] !phi_A)"}},
    {"S11",
     {"F[0,10](phi_B & F[0,15](phi_C & F[0,5] phi_D & G[0,5] !phi_A))",
      "F[0,10](phi_B & F[0,15](phi_C & F[0,5] phi_D) & G[0,20] !phi_A)",
      "(F[0,10](phi_B & F[0,15](phi_C & F[0,5] phi_D)) & G[0,30] !phi_A)"}},
    {"S12",
     {"F[0,10](phi_B & ((F[0,15] phi_C | F[0,5] phi_D) & G[0,15] !phi_A))",
      "F[0,10](phi_B & (F[0,15] phi_C | (F[0,5] phi_D & G[0,5] !phi_A)))",
      "(F[0,10](phi_B & (F[0,15] phi_C | F[0,5] phi_D)) & G[0,25] !phi_A)",
      "(F[0,10](phi_B & F[0,15] phi_C) | (F[0,5] phi_D & G[0,5] !phi_A))",
      "((F[0,10](phi_B & F[0,15] phi_C) | F[0,5] phi_D) & G[0,25] !phi_A)"}},
};

const std::string kLocal = "(F[0,10] phi_B | (F[0,10] phi_C & G[0,10] !phi_A))";
const std::string kGlobal = "(F[0,10](phi_B | phi_C) & G[0,10] !phi_A)";

std::string canon(const std::string& text) {
  return ambistl::stl::format(ambistl::stl::canonicalize(ambistl::stl::parse_formula(text)));
}

const std::string& sentence(const std::string& id) {
  for (const auto& [k, s] : kCorpus) {
    if (k == id) return s;
  }
  throw std::runtime_error("no sentence " + id);
}

CandidateSet translate(const std::string& id) {
  return ambistl::translate(sentence(id), ambistl::default_lexicon(), ambistl::kDefaultNBest);
}

std::set<std::string> candidate_texts(const CandidateSet& set) {
  std::set<std::string> out;
  for (const auto& c : set.candidates) out.insert(c.text);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome table_counts() {
  auto start = std::chrono::steady_clock::now();
  std::string got;
  bool ok = true;
  for (std::size_t i = 0; i < kCorpus.size(); ++i) {
    std::size_t n = translate(kCorpus[i].first).candidates.size();
    got += (i ? "," : "") + std::to_string(n);
    ok = ok && n == kExpectedCounts[i];
  }
  double secs = seconds_since(start);
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.3f s", secs);
  return {ok && secs < 5.0, "counts (" + got + ")" + buf};
}

Outcome table_formula_sets() {
  std::string detail;
  bool ok = true;
  for (const auto& [id, formulas] : kFormulaSets) {
    std::set<std::string> expected;
    for (const auto& f : formulas) expected.insert(canon(f));
    bool match = candidate_texts(translate(id)) == expected;
    ok = ok && match;
    detail += id + (match ? " ok " : " differs ");
  }
  return {ok, detail};
}

Outcome reading_pair() {
  auto set = translate("S8");
  bool ok = candidate_texts(set) == std::set<std::string>{canon(kLocal), canon(kGlobal)};
  return {ok, "S8 candidates: " + set.candidates[0].text + " ; " +
                  (set.candidates.size() > 1 ? set.candidates[1].text : std::string("<none>"))};
}

Outcome ranking_and_probabilities() {
  bool ok = true;
  std::string detail;
  for (const auto& [id, formulas] : kFormulaSets) {
    auto set = translate(id);
    double sum = 0;
    for (const auto& c : set.candidates) sum += c.probability;
    if (std::fabs(sum - 1.0) > 1e-9) {
      ok = false;
      detail += id + " sums to " + std::to_string(sum) + " ";
    }
    if (id == "S12") {
      bool positive = set.candidates.size() == 5;
      for (const auto& c : set.candidates) positive = positive && c.probability > 0.0;
      ok = ok && positive;
      detail += std::string("S12 five positive ") + (positive ? "yes " : "no ");
    } else {
      bool first = !set.candidates.empty() && set.candidates[0].text == canon(formulas[0]);
      ok = ok && first;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s local p=%.4f%s ", id.c_str(), set.candidates[0].probability,
                    first ? "" : " NOT FIRST");
      detail += buf;
    }
  }
  return {ok, detail};
}

Outcome robustness_oracle_suite() {
  using ambistl::robustness;
  auto start = std::chrono::steady_clock::now();
  ambistl::testing::FormulaGen gen(20260416);
  auto regions = ambistl::testing::standard_regions();
  int agree = 0, dual = 0, until = 0;
  const int kCases = 200;
  double worst = 0;
  for (int i = 0; i < kCases; ++i) {
    Formula f = gen.formula(3);
    int len = gen.pick(static_cast<int>(ambistl::testing::brute_extent(f)) + 1, 10);
    auto pts = gen.trajectory(static_cast<std::size_t>(len));
    ambistl::Trajectory x(pts);
    double expected = ambistl::testing::brute_robustness(f, pts, regions, 0);
    double got = robustness(f, x, regions);
    if (ambistl::testing::close(got, expected)) ++agree;
    if (std::isfinite(got) && std::isfinite(expected)) worst = std::max(worst, std::fabs(got - expected));

    Formula sub = gen.formula(2);
    auto iv = gen.interval();
    Formula g = Formula::always(iv, sub);
    int glen = gen.pick(static_cast<int>(ambistl::testing::brute_extent(g)) + 1, 10);
    ambistl::Trajectory y(gen.trajectory(static_cast<std::size_t>(glen)));
    if (ambistl::testing::close(robustness(g, y, regions), -robustness(Formula::eventually(iv, Formula::negation(sub)), y, regions))) {
      ++dual;
    }
    if (ambistl::testing::close(robustness(Formula::eventually(iv, sub), y, regions),
                                robustness(Formula::until(iv, Formula::top(), sub), y, regions))) {
      ++until;
    }
  }
  double secs = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf, "oracle %d/%d, duality %d/%d, until %d/%d, max |diff| %.1e, %.3f s", agree, kCases,
                dual, kCases, until, kCases, worst, secs);
  return {agree == kCases && dual == kCases && until == kCases && secs < 10.0, buf};
}

Outcome deduplication() {
  auto t = ambistl::translate_detailed(sentence("S7"), ambistl::default_lexicon(), ambistl::kDefaultNBest);
  const auto& set = t.candidates;
  std::size_t well_formed = set.n_derivations - set.n_discarded;
  bool ok = set.candidates.size() == 1 && set.candidates[0].support_count >= 1 &&
            set.candidates[0].support_count == well_formed;
  // Every well-formed derivation, whatever its bracketing, lands on one formula.
  std::set<std::string> forms;
  for (const auto& a : t.analyses) {
    if (a.conversion.ok()) forms.insert(ambistl::stl::format(ambistl::stl::canonicalize(*a.conversion.formula)));
  }
  ok = ok && forms.size() == 1;
  return {ok, "1 candidate from " + std::to_string(set.candidates[0].support_count) + " of " +
                  std::to_string(set.n_derivations) + " derivations"};
}

Outcome behavioral_discrimination() {
  std::ifstream rin(std::string(AMBISTL_DATA_DIR) + "/regions.txt");
  std::ifstream tin(std::string(AMBISTL_DATA_DIR) + "/through_a_to_b.csv");
  auto regions = ambistl::load_regions(rin);
  auto x = ambistl::load_trajectory(tin);
  auto set = translate("S8");
  auto report = ambistl::evaluate_candidates(set, x, regions);
  double local = NAN, global = NAN;
  bool oracle_ok = true;
  for (const auto& row : report.rows) {
    if (!row.robustness) return {false, "row failed: " + row.error_message};
    double oracle = ambistl::testing::brute_robustness(ambistl::stl::parse_formula(row.formula), x.states(), regions, 0);
    oracle_ok = oracle_ok && ambistl::testing::close(oracle, *row.robustness) &&
                ((oracle > 0) == (*row.robustness > 0));
    if (row.formula == canon(kLocal)) local = *row.robustness;
    if (row.formula == canon(kGlobal)) global = *row.robustness;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "local %+.4f, global %+.4f", local, global);
  return {oracle_ok && local > 0 && global < 0, buf};
}

Outcome canonicalization_suite() {
  ambistl::testing::FormulaGen gen(500);
  int idem = 0, perm = 0;
  const int kCases = 500;
  for (int i = 0; i < kCases; ++i) {
    Formula f = gen.formula(4);
    Formula c = ambistl::stl::canonicalize(f);
    if (ambistl::stl::canonicalize(c) == c) ++idem;
    if (ambistl::stl::canonicalize(gen.shuffle(f)) == c) ++perm;
  }
  return {idem == kCases && perm == kCases, "idempotent " + std::to_string(idem) + "/" + std::to_string(kCases) +
                                                ", permutation invariant " + std::to_string(perm) + "/" +
                                                std::to_string(kCases)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"candidate counts S1-S12", table_counts},
      {"formula sets S8-S12", table_formula_sets},
      {"S8 local/global reading pair", reading_pair},
      {"local reading first, probabilities normalized", ranking_and_probabilities},
      {"robustness oracle suite", robustness_oracle_suite},
      {"S7 deduplication", deduplication},
      {"behavioral discrimination on S8", behavioral_discrimination},
      {"canonicalization property suite", canonicalization_suite},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
