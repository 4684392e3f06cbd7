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

// Tokenizer and exhaustive CKY parser for the application-only CCG used by
// the lexicon.
//
// The chart is a packed forest: each cell maps a category to the list of ways
// it was built. Complete derivations are then unpacked, scored and sorted.
// Nothing is pruned during chart construction, so every attachment the
// grammar licenses survives to semantic composition.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ambistl/category.hpp"
#include "ambistl/error.hpp"
#include "ambistl/lexicon.hpp"
#include "ambistl/text.hpp"

namespace ambistl {

struct Token {
  std::string text;
  std::size_t position = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Lowercases, drops commas and a terminal period, splits on whitespace.
inline std::vector<Token> tokenize(std::string_view sentence) {
  std::string s = detail::to_lower(detail::trim(sentence));
  while (!s.empty() && s.back() == '.') {
    s.pop_back();
  }
  s.erase(std::remove(s.begin(), s.end(), ','), s.end());
  std::vector<Token> out;
  for (auto& w : detail::split_ws(s)) out.push_back({std::move(w), out.size()});
  if (out.empty()) throw Error(ErrorKind::kEmptyInput, "empty sentence");
  return out;
}

inline std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

// Half-open token range [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

// A binary CCG derivation tree. Every node caches the score of its subtree.
class Derivation {
 public:
  static Derivation leaf(LexEntry entry, Span span) {
    double s = entry.weight;
    Category cat = entry.category;
    return Derivation(std::make_shared<const Node>(
        Node{std::move(entry), {}, nullptr, nullptr, std::move(cat), span, s, 0.0}));
  }

  static Derivation combine(std::string rule, const Derivation& left, const Derivation& right, Category category,
                            double local_score) {
    return Derivation(std::make_shared<const Node>(
        Node{std::nullopt, std::move(rule), left.node_, right.node_, std::move(category),
             Span{left.span().begin, right.span().end}, left.score() + right.score() + local_score,
             local_score}));
  }

  bool is_leaf() const { return node_->entry.has_value(); }
  const LexEntry& entry() const { return *node_->entry; }
  const std::string& rule() const { return node_->rule; }
  Derivation left() const { return Derivation(node_->left); }
  Derivation right() const { return Derivation(node_->right); }
  const Category& category() const { return node_->category; }
  Span span() const { return node_->span; }
  double score() const { return node_->score; }
  // Rule weight plus attachment penalty contributed by this node alone.
  double local_score() const { return node_->local; }

  // Leftmost lexical leaf: the head of a functor phrase such as
  // "while avoiding a" or "within 10 seconds".
  const LexEntry& head() const {
    const Node* n = node_.get();
    while (!n->entry) n = n->left.get();
    return *n->entry;
  }

  template <typename Fn>
  void for_each_leaf(Fn&& fn) const {
    if (is_leaf()) {
      fn(*this);
      return;
    }
    left().for_each_leaf(fn);
    right().for_each_leaf(fn);
  }

 private:
  struct Node {
    std::optional<LexEntry> entry;
    std::string rule;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    Category category;
    Span span;
    double score;
    double local;
  };

  explicit Derivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline bool is_task_predicate(const Category& c) {
  return c.is_functor() && c.slash() == Slash::kForward && c.result().is("S") && c.argument().is("NP");
}

inline bool is_coordinator_shape(const Category& c) {
  // (X\X)/X
  return c.is_functor() && c.slash() == Slash::kForward && c.result().is_functor() &&
         c.result().slash() == Slash::kBackward && c.result().result() == c.argument() &&
         c.result().argument() == c.argument();
}

inline int count_tasks(const Derivation& d) {
  int n = 0;
  d.for_each_leaf([&](const Derivation& leaf) {
    if (is_task_predicate(leaf.category())) ++n;
  });
  return n;
}

inline std::string rule_for_forward(const Derivation& fn, const Lexicon& lex) {
  if (fn.is_leaf() && is_coordinator_shape(fn.category()) && !lex.is_modifier(fn.entry().surface_text())) {
    return std::string(kRuleCoordination);
  }
  return std::string(kRuleForward);
}

// Rule weight plus, for a post-modifier attached by backward application,
// the locality penalty: one unit per complete task in the attachment site
// that lies before the task nearest to the modifier.
inline double node_score(std::string_view rule, const Derivation& left, const Derivation& right,
                         const Lexicon& lex) {
  double s = lex.rule_weight(rule);
  if (rule == kRuleBackward && lex.is_modifier(right.head().surface_text())) {
    int skipped = std::max(0, count_tasks(left) - 1);
    s -= lex.locality_penalty() * skipped;
  }
  return s;
}

inline void format_derivation_into(std::string& out, const Derivation& d) {
  if (d.is_leaf()) {
    out += '[';
    out += d.entry().surface_text();
    out += " :: ";
    out += d.category().str();
    if (d.entry().id != LexEntry::kNumeral) {
      out += " #";
      out += std::to_string(d.entry().id);
    }
    out += ']';
    return;
  }
  out += '(';
  out += d.rule();
  out += ' ';
  out += d.category().str();
  out += ' ';
  format_derivation_into(out, d.left());
  out += ' ';
  format_derivation_into(out, d.right());
  out += ')';
}

}  // namespace detail

// One-line bracketed rendering; lexical entries are identified by their
// position in the lexicon so that template variants stay distinguishable.
inline std::string format_derivation(const Derivation& d) {
  std::string out;
  detail::format_derivation_into(out, d);
  return out;
}

// Recomputes the score of a derivation from scratch.
inline double score(const Derivation& d, const Lexicon& lex) {
  if (d.is_leaf()) return d.entry().weight;
  return score(d.left(), lex) + score(d.right(), lex) + detail::node_score(d.rule(), d.left(), d.right(), lex);
}

inline constexpr std::size_t kDefaultNBest = 40;
inline constexpr std::size_t kMaxDerivations = 200000;

struct ParseResult {
  std::vector<Derivation> derivations;  // retained, best first
  std::size_t total = 0;                // complete derivations before truncation
};

namespace detail {

class Chart {
 public:
  Chart(const std::vector<std::string>& tokens, const Lexicon& lex) : tokens_(tokens), lex_(lex), n_(tokens.size()) {
    cells_.resize(n_ * (n_ + 1));
  }

  void fill() {
    for (std::size_t i = 0; i < n_; ++i) {
      for (auto& m : lookup(lex_, tokens_, i)) {
        Span sp{i, i + m.span};
        auto& item = item_for(sp, m.entry.category);
        item.options.push_back(Backpointer{leaves_.size(), {}, 0, 0, 0});
        leaves_.push_back(std::move(m.entry));
      }
    }
    for (std::size_t len = 2; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        std::size_t j = i + len;
        for (std::size_t k = i + 1; k < j; ++k) {
          const auto& lcell = cell({i, k});
          const auto& rcell = cell({k, j});
          for (std::size_t li = 0; li < lcell.size(); ++li) {
            for (std::size_t ri = 0; ri < rcell.size(); ++ri) {
              const Category& lc = lcell[li].category;
              const Category& rc = rcell[ri].category;
              if (can_apply_forward(lc, rc)) add_binary({i, j}, lc.result(), /*forward=*/true, k, li, ri);
              if (can_apply_backward(lc, rc)) add_binary({i, j}, rc.result(), /*forward=*/false, k, li, ri);
            }
          }
        }
      }
    }
  }

  std::vector<Derivation> complete() {
    std::vector<Derivation> out;
    const auto& root = cell({0, n_});
    for (std::size_t idx = 0; idx < root.size(); ++idx) {
      if (root[idx].category.is("S")) {
        const auto& ds = unpack({0, n_}, idx);
        out.insert(out.end(), ds.begin(), ds.end());
      }
    }
    return out;
  }

 private:
  struct Backpointer {
    std::size_t leaf;  // valid when split == 0
    bool forward;
    std::size_t split;
    std::size_t left_item;
    std::size_t right_item;
  };

  struct Item {
    Category category;
    std::vector<Backpointer> options;
    bool unpacked = false;
    std::vector<Derivation> derivations;
  };

  std::vector<Item>& cell(Span sp) { return cells_[sp.begin * (n_ + 1) + sp.end]; }

  Item& item_for(Span sp, const Category& c) {
    auto& items = cell(sp);
    for (auto& it : items) {
      if (it.category == c) return it;
    }
    items.push_back(Item{c, {}, false, {}});
    return items.back();
  }

  void add_binary(Span sp, const Category& result, bool forward, std::size_t split, std::size_t li, std::size_t ri) {
    auto& item = item_for(sp, result);
    item.options.push_back(Backpointer{0, forward, split, li, ri});
  }

  const std::vector<Derivation>& unpack(Span sp, std::size_t idx) {
    if (cell(sp)[idx].unpacked) return cell(sp)[idx].derivations;
    std::vector<Derivation> out;
    // Copy: recursive unpacking may not reallocate this cell, but keep the
    // loop independent of references into the chart anyway.
    const auto options = cell(sp)[idx].options;
    const Category category = cell(sp)[idx].category;
    for (const auto& bp : options) {
      if (bp.split == 0) {
        out.push_back(Derivation::leaf(leaves_[bp.leaf], sp));
        continue;
      }
      const auto& ls = unpack({sp.begin, bp.split}, bp.left_item);
      const auto& rs = unpack({bp.split, sp.end}, bp.right_item);
      for (const auto& l : ls) {
        for (const auto& r : rs) {
          std::string rule = bp.forward ? rule_for_forward(l, lex_) : std::string(kRuleBackward);
          out.push_back(Derivation::combine(rule, l, r, category, node_score(rule, l, r, lex_)));
          if (out.size() > kMaxDerivations) {
            throw Error(ErrorKind::kInvalidArgument, "sentence is too ambiguous to enumerate exhaustively");
          }
        }
      }
    }
    auto& item = cell(sp)[idx];
    item.derivations = std::move(out);
    item.unpacked = true;
    return item.derivations;
  }

  const std::vector<std::string>& tokens_;
  const Lexicon& lex_;
  std::size_t n_;
  std::vector<std::vector<Item>> cells_;
  std::vector<LexEntry> leaves_;
};

inline void check_coverage(const std::vector<std::string>& tokens, const Lexicon& lex) {
  std::vector<bool> covered(tokens.size(), false);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (const auto& m : lookup(lex, tokens, i)) {
      for (std::size_t k = i; k < i + m.span; ++k) covered[k] = true;
    }
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!covered[i]) {
      throw Error(ErrorKind::kCoverage,
                  "no lexical entry covers token '" + tokens[i] + "' at position " + std::to_string(i));
    }
  }
}

}  // namespace detail

// Every complete derivation, best first, cut to the first n. Equal scores
// are ordered by the derivation rendering.
inline ParseResult parse_nbest(const std::vector<Token>& tokens, const Lexicon& lex, std::size_t n = kDefaultNBest) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "n-best must be at least 1");
  if (tokens.empty()) throw Error(ErrorKind::kEmptyInput, "empty sentence");
  auto texts = token_texts(tokens);
  detail::check_coverage(texts, lex);
  detail::Chart chart(texts, lex);
  chart.fill();
  std::vector<Derivation> all = chart.complete();
  if (all.empty()) throw Error(ErrorKind::kNoParse, "no complete parse for '" + [&] {
    std::string s;
    for (const auto& t : texts) s += (s.empty() ? "" : " ") + t;
    return s;
  }() + "'");

  std::vector<std::pair<std::string, Derivation>> keyed;
  keyed.reserve(all.size());
  for (auto& d : all) keyed.emplace_back(format_derivation(d), std::move(d));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.score() != b.second.score()) return a.second.score() > b.second.score();
    return a.first < b.first;
  });
  ParseResult result;
  result.total = keyed.size();
  for (std::size_t i = 0; i < keyed.size() && i < n; ++i) result.derivations.push_back(std::move(keyed[i].second));
  return result;
}

}  // namespace ambistl
