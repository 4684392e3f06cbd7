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

// CCG lexicon: surface forms paired with categories, weights and semantic
// templates, plus the scoring parameters of the parser.
//
// File format (UTF-8, one item per line, `#` starts a comment):
//
//   surface tokens | category | weight | template
//   @rule <name> <weight>        combinatory rule weight (fa, ba, coord)
//   @modifier <surface>          head of a post-modifier subject to the
//                                locality penalty (e.g. while, within)
//   @locality <penalty>          penalty per skipped task constituent
//
// Any token made only of digits is a numeral and needs no entry: it is read
// as category NUM carrying its integer value.

#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ambistl/category.hpp"
#include "ambistl/error.hpp"
#include "ambistl/meaning.hpp"
#include "ambistl/text.hpp"

namespace ambistl {

inline constexpr std::string_view kRuleForward = "fa";
inline constexpr std::string_view kRuleBackward = "ba";
inline constexpr std::string_view kRuleCoordination = "coord";
inline constexpr double kDefaultLocalityPenalty = 0.7;

struct LexEntry {
  static constexpr std::size_t kNumeral = static_cast<std::size_t>(-1);

  std::vector<std::string> surface;
  Category category;
  double weight = 0.0;
  Term meaning;
  // Position in the owning lexicon, or kNumeral for synthesized numerals.
  std::size_t id = kNumeral;

  std::string surface_text() const {
    std::string s;
    for (const auto& tok : surface) {
      if (!s.empty()) s += ' ';
      s += tok;
    }
    return s;
  }

  bool same_content(const LexEntry& o) const {
    return surface == o.surface && category == o.category && weight == o.weight &&
           alpha_equivalent(meaning, o.meaning);
  }
};

class Lexicon {
 public:
  // Validates and appends. Returns false (and does not add) when an
  // identical entry already exists.
  bool add(LexEntry entry) {
    if (entry.surface.empty() || entry.surface.size() > 3) {
      throw Error(ErrorKind::kInvalidArgument, "surface must have 1-3 tokens");
    }
    for (const auto& tok : entry.surface) {
      if (tok.empty() || tok != detail::to_lower(tok) || tok.find_first_of(" \t|#") != std::string::npos) {
        throw Error(ErrorKind::kInvalidArgument, "surface token '" + tok + "' must be lowercase without spaces");
      }
    }
    auto fv = free_vars(entry.meaning);
    if (!fv.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "template of '" + entry.surface_text() +
                                                   "' has free variable '" + *fv.begin() + "'");
    }
    for (std::size_t i : by_first_token(entry.surface.front())) {
      if (entries_[i].same_content(entry)) return false;
    }
    entry.id = entries_.size();
    index_[entry.surface.front()].push_back(entry.id);
    entries_.push_back(std::move(entry));
    return true;
  }

  const std::vector<LexEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  const std::vector<std::size_t>& by_first_token(const std::string& token) const {
    static const std::vector<std::size_t> kNone;
    auto it = index_.find(token);
    return it == index_.end() ? kNone : it->second;
  }

  void set_rule_weight(std::string rule, double w) { rule_weights_[std::move(rule)] = w; }
  const std::map<std::string, double>& rule_weights() const { return rule_weights_; }
  double rule_weight(std::string_view rule) const {
    auto it = rule_weights_.find(std::string(rule));
    return it == rule_weights_.end() ? 0.0 : it->second;
  }

  void add_modifier(std::string surface) {
    if (!is_modifier(surface)) modifiers_.push_back(std::move(surface));
  }
  const std::vector<std::string>& modifiers() const { return modifiers_; }
  bool is_modifier(std::string_view surface) const {
    return std::find(modifiers_.begin(), modifiers_.end(), surface) != modifiers_.end();
  }

  void set_locality_penalty(double p) { locality_penalty_ = p; }
  double locality_penalty() const { return locality_penalty_; }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (!a.entries_[i].same_content(b.entries_[i])) return false;
    }
    return a.rule_weights_ == b.rule_weights_ && a.modifiers_ == b.modifiers_ &&
           a.locality_penalty_ == b.locality_penalty_;
  }

 private:
  std::vector<LexEntry> entries_;
  std::map<std::string, std::vector<std::size_t>> index_;
  std::map<std::string, double> rule_weights_;
  std::vector<std::string> modifiers_;
  double locality_penalty_ = kDefaultLocalityPenalty;
};

namespace detail {

inline std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace detail

// Parses the line format described at the top of this header. Identical
// duplicate entries are dropped with a warning.
inline Lexicon load_lexicon(std::istream& in, std::vector<std::string>* warnings = nullptr) {
  Lexicon lex;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = detail::trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    auto where = "lexicon line " + std::to_string(lineno) + ": ";
    try {
      if (body.front() == '@') {
        auto words = detail::split_ws(body.substr(1));
        if (words.empty()) throw Error(ErrorKind::kSyntax, "empty directive");
        const auto& kw = words.front();
        if (kw == "rule") {
          std::optional<double> w;
          if (words.size() == 3) w = detail::parse_double(words[2]);
          if (!w) throw Error(ErrorKind::kSyntax, "expected '@rule <name> <weight>'");
          lex.set_rule_weight(words[1], *w);
        } else if (kw == "modifier") {
          if (words.size() < 2) throw Error(ErrorKind::kSyntax, "expected '@modifier <surface>'");
          std::string s;
          for (std::size_t i = 1; i < words.size(); ++i) s += (i > 1 ? " " : "") + detail::to_lower(words[i]);
          lex.add_modifier(s);
        } else if (kw == "locality") {
          std::optional<double> p;
          if (words.size() == 2) p = detail::parse_double(words[1]);
          if (!p || *p < 0) throw Error(ErrorKind::kSyntax, "expected '@locality <nonnegative penalty>'");
          lex.set_locality_penalty(*p);
        } else {
          throw Error(ErrorKind::kSyntax, "unknown directive '@" + kw + "'");
        }
        continue;
      }
      auto fields = detail::split(body, '|');
      if (fields.size() != 4) {
        throw Error(ErrorKind::kSyntax, "expected 'surface | category | weight | template'");
      }
      LexEntry e{detail::split_ws(fields[0]), parse_category(detail::trim(fields[1])), 0.0,
                 parse_term(detail::trim(fields[3]))};
      auto w = detail::parse_double(fields[2]);
      if (!w) throw Error(ErrorKind::kSyntax, "bad weight '" + std::string(detail::trim(fields[2])) + "'");
      e.weight = *w;
      std::string shown = e.surface_text();
      if (!lex.add(std::move(e)) && warnings != nullptr) {
        warnings->push_back(where + "duplicate identical entry for '" + shown + "' ignored");
      }
    } catch (const Error& err) {
      throw Error(ErrorKind::kSyntax, where + err.what());
    }
  }
  if (lex.empty()) throw Error(ErrorKind::kEmptyInput, "empty lexicon");
  return lex;
}

inline Lexicon load_lexicon_string(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  std::istringstream in{std::string(text)};
  return load_lexicon(in, warnings);
}

// Writes a lexicon in the same line format load_lexicon reads.
inline void write_lexicon(std::ostream& out, const Lexicon& lex) {
  for (const auto& [rule, w] : lex.rule_weights()) out << "@rule " << rule << ' ' << detail::format_number(w) << '\n';
  out << "@locality " << detail::format_number(lex.locality_penalty()) << '\n';
  for (const auto& m : lex.modifiers()) out << "@modifier " << m << '\n';
  for (const auto& e : lex.entries()) {
    out << e.surface_text() << " | " << e.category.str() << " | " << detail::format_number(e.weight) << " | "
        << format(e.meaning) << '\n';
  }
}

inline std::string format_lexicon(const Lexicon& lex) {
  std::ostringstream out;
  write_lexicon(out, lex);
  return out.str();
}

struct LexMatch {
  std::size_t span;
  LexEntry entry;
};

inline LexEntry numeral_entry(const std::string& token) {
  auto v = detail::parse_int(token);
  if (!v) throw Error(ErrorKind::kInvalidArgument, "numeral out of range: " + token);
  return LexEntry{{token}, Category::basic("NUM"), 0.0, Term::integer(*v), LexEntry::kNumeral};
}

// All entries whose surface matches tokens[position...], longest first.
inline std::vector<LexMatch> lookup(const Lexicon& lex, const std::vector<std::string>& tokens,
                                    std::size_t position) {
  std::vector<LexMatch> out;
  if (position >= tokens.size()) return out;
  for (std::size_t i : lex.by_first_token(tokens[position])) {
    const auto& e = lex.entries()[i];
    if (position + e.surface.size() > tokens.size()) continue;
    if (std::equal(e.surface.begin(), e.surface.end(), tokens.begin() + static_cast<std::ptrdiff_t>(position))) {
      out.push_back({e.surface.size(), e});
    }
  }
  if (detail::is_digits(tokens[position])) out.push_back({1, numeral_entry(tokens[position])});
  std::stable_sort(out.begin(), out.end(), [](const LexMatch& a, const LexMatch& b) { return a.span > b.span; });
  return out;
}

namespace detail {

inline bool contains_category(const std::vector<Category>& v, const Category& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

// Categories reachable from the lexicon (plus NUM) by repeated application.
inline std::vector<Category> derivable_categories(const Lexicon& lex) {
  std::vector<Category> cats{Category::basic("NUM")};
  for (const auto& e : lex.entries()) {
    if (!contains_category(cats, e.category)) cats.push_back(e.category);
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < cats.size(); ++i) {
      Category c = cats[i];
      if (c.is_functor() && contains_category(cats, c.argument()) && !contains_category(cats, c.result())) {
        cats.push_back(c.result());
        grew = true;
      }
    }
  }
  return cats;
}

}  // namespace detail

// Reports dead entries (whose category can never take part in a complete
// derivation) and rule weights that fall back to 0.
inline std::vector<std::string> validate_lexicon(const Lexicon& lex) {
  std::vector<std::string> diags;
  auto cats = detail::derivable_categories(lex);
  auto consumed = [&](const Category& c) {
    return std::any_of(cats.begin(), cats.end(),
                       [&](const Category& f) { return f.is_functor() && f.argument() == c; });
  };
  for (const auto& e : lex.entries()) {
    std::string problem;
    Category c = e.category;
    while (c.is_functor() && problem.empty()) {
      if (!detail::contains_category(cats, c.argument())) {
        problem = "needs an argument of category " + c.argument().str() + " that no entry provides";
      }
      c = c.result();
    }
    if (problem.empty() && e.category.is_basic() && !e.category.is("S") && !consumed(e.category)) {
      problem = "category " + e.category.str() + " is never taken as an argument";
    }
    if (!problem.empty()) {
      diags.push_back("dead entry '" + e.surface_text() + "' (" + e.category.str() + "): " + problem);
    }
  }
  for (auto rule : {kRuleForward, kRuleBackward, kRuleCoordination}) {
    if (!lex.rule_weights().count(std::string(rule))) {
      diags.push_back("rule weight for '" + std::string(rule) + "' missing; defaulted to 0.0");
    }
  }
  return diags;
}

}  // namespace ambistl
