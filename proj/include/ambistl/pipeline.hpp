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

// Sentence -> ranked set of candidate STL formulas.
//
//   tokenize -> parse_nbest -> compose -> to_stl -> canonicalize -> aggregate
//
// Meanings that do not convert to a well-formed formula are discarded and
// counted. Derivations landing on the same canonical formula pool their
// support: s = sum(exp(score)), p = s / sum over candidates.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ambistl/compose.hpp"
#include "ambistl/error.hpp"
#include "ambistl/lexicon.hpp"
#include "ambistl/meaning.hpp"
#include "ambistl/parser.hpp"
#include "ambistl/stl.hpp"

namespace ambistl {

struct Conversion {
  std::optional<stl::Formula> formula;
  std::string reason;  // why the meaning is ill-formed; empty on success

  bool ok() const { return formula.has_value(); }
};

namespace detail {

struct IllFormed {
  std::string reason;
};

inline stl::Interval to_interval(const Term& t) {
  if (t.kind() != TermKind::kInterval || t.child(0).kind() != TermKind::kInt ||
      t.child(1).kind() != TermKind::kInt) {
    throw IllFormed{"interval slot holds " + format(t)};
  }
  auto lo = t.child(0).value();
  auto hi = t.child(1).value();
  if (lo < 0 || hi < lo) throw IllFormed{"empty or negative interval " + format(t)};
  return stl::Interval(lo, hi);
}

// Conjoins `tail` at the innermost end of a sequence: into the single
// eventuality conjunct of `body` if there is exactly one, else onto `body`.
inline stl::Formula insert_tail(const stl::Formula& body, const stl::Formula& tail) {
  using stl::Formula;
  using stl::Op;
  std::vector<Formula> conjuncts;
  if (body.op() == Op::kAnd) {
    conjuncts.assign(body.children().begin(), body.children().end());
  } else {
    conjuncts.push_back(body);
  }
  std::size_t hits = 0, at = 0;
  for (std::size_t i = 0; i < conjuncts.size(); ++i) {
    if (conjuncts[i].op() == Op::kEventually) {
      ++hits;
      at = i;
    }
  }
  if (hits != 1) return Formula::conjunction({body, tail});
  conjuncts[at] = Formula::eventually(conjuncts[at].interval(), insert_tail(conjuncts[at].child(), tail));
  return conjuncts.size() == 1 ? conjuncts.front() : Formula::conjunction(std::move(conjuncts));
}

inline stl::Formula convert(const Term& t) {
  using stl::Formula;
  switch (t.kind()) {
    case TermKind::kAtom:
      return Formula::atom(t.name());
    case TermKind::kNot:
      return Formula::negation(convert(t.child()));
    case TermKind::kAnd:
      return Formula::conjunction({convert(t.child(0)), convert(t.child(1))});
    case TermKind::kOr: {
      Formula l = convert(t.child(0));
      Formula r = convert(t.child(1));
      // Two deadlines shared through one coordination: F_I a | F_I b is
      // read as F_I (a | b).
      if (l.op() == stl::Op::kEventually && r.op() == stl::Op::kEventually && l.interval() == r.interval()) {
        return Formula::eventually(l.interval(), Formula::disjunction({l.child(), r.child()}));
      }
      return Formula::disjunction({std::move(l), std::move(r)});
    }
    case TermKind::kEventually:
      return Formula::eventually(to_interval(t.child(0)), convert(t.child(1)));
    case TermKind::kAlways:
      return Formula::always(to_interval(t.child(0)), convert(t.child(1)));
    case TermKind::kSeq: {
      Formula first = convert(t.child(0));
      if (first.op() != stl::Op::kEventually) throw IllFormed{"SEQ needs an eventuality first, got " + stl::format(first)};
      Formula second = convert(t.child(1));
      return Formula::eventually(first.interval(), insert_tail(first.child(), second));
    }
    case TermKind::kExtG: {
      Formula anchor = convert(t.child(1));
      Term guard = beta_reduce(Term::app(t.child(0), Term::interval(0, stl::extent(anchor))));
      return convert(guard);
    }
    case TermKind::kVar:
    case TermKind::kLam:
    case TermKind::kApp:
      throw IllFormed{"unresolved lambda term " + format(t)};
    case TermKind::kInt:
    case TermKind::kInterval:
      throw IllFormed{"stray literal " + format(t)};
  }
  throw IllFormed{"unknown term"};
}

}  // namespace detail

// Converts a beta-normal meaning to STL, or reports it ill-formed.
inline Conversion to_stl(const Term& meaning) {
  try {
    return {detail::convert(meaning), {}};
  } catch (const detail::IllFormed& e) {
    return {std::nullopt, e.reason};
  }
}

struct ScoredFormula {
  stl::Formula formula;
  double score = 0.0;
  std::size_t derivation_id = 0;
};

struct Candidate {
  stl::Formula formula;  // canonical
  std::string text;      // canonical rendering
  double score = 0.0;    // aggregated support, sum of exp(derivation score)
  double probability = 0.0;
  std::size_t support_count = 0;
  std::vector<std::size_t> derivation_ids;
};

struct CandidateSet {
  std::string sentence;
  std::size_t n_derivations = 0;
  std::size_t n_discarded = 0;
  std::vector<Candidate> candidates;  // probability descending, text ascending on ties

  const Candidate* find(const std::string& canonical_text) const {
    for (const auto& c : candidates) {
      if (c.text == canonical_text) return &c;
    }
    return nullptr;
  }
};

inline CandidateSet aggregate(std::span<const ScoredFormula> scored) {
  if (scored.empty()) throw Error(ErrorKind::kNoCandidates, "no well-formed candidate formula");
  std::map<std::string, Candidate> groups;
  for (const auto& s : scored) {
    stl::Formula canon = stl::canonicalize(s.formula);
    std::string key = stl::format(canon);
    auto [it, fresh] = groups.try_emplace(key, Candidate{canon, key, 0.0, 0.0, 0, {}});
    it->second.score += std::exp(s.score);
    it->second.support_count += 1;
    it->second.derivation_ids.push_back(s.derivation_id);
  }
  double total = 0.0;
  for (const auto& [_, c] : groups) total += c.score;
  CandidateSet out;
  for (auto& [_, c] : groups) {
    c.probability = c.score / total;
    out.candidates.push_back(std::move(c));
  }
  std::stable_sort(out.candidates.begin(), out.candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    return a.text < b.text;
  });
  return out;
}

// Per-derivation trace kept for inspection.
struct Analysis {
  Derivation derivation;
  Term meaning;
  Conversion conversion;
};

struct Translation {
  CandidateSet candidates;
  std::vector<Analysis> analyses;  // one per retained derivation, parse order
  std::size_t total_derivations = 0;
};

inline Translation translate_detailed(std::string_view sentence, const Lexicon& lex, std::size_t n = kDefaultNBest) {
  auto tokens = tokenize(sentence);
  ParseResult parsed = parse_nbest(tokens, lex, n);
  Translation out;
  out.total_derivations = parsed.total;
  std::vector<ScoredFormula> scored;
  std::size_t discarded = 0;
  for (std::size_t i = 0; i < parsed.derivations.size(); ++i) {
    const auto& d = parsed.derivations[i];
    Term m = compose(d);
    Conversion conv = to_stl(m);
    if (conv.ok()) {
      scored.push_back({stl::canonicalize(*conv.formula), d.score(), i});
    } else {
      ++discarded;
    }
    out.analyses.push_back({d, std::move(m), std::move(conv)});
  }
  if (scored.empty()) {
    throw Error(ErrorKind::kNoCandidates, "all " + std::to_string(parsed.derivations.size()) +
                                              " derivations were ill-formed as STL");
  }
  out.candidates = aggregate(scored);
  out.candidates.sentence = std::string(sentence);
  out.candidates.n_derivations = parsed.derivations.size();
  out.candidates.n_discarded = discarded;
  return out;
}

inline CandidateSet translate(std::string_view sentence, const Lexicon& lex, std::size_t n = kDefaultNBest) {
  return translate_detailed(sentence, lex, n).candidates;
}

}  // namespace ambistl
