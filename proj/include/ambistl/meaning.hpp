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

// Lambda terms over STL-oriented constructors.
//
// Text syntax (used by lexicon templates):
//
//   term ::= lam v. term | app
//   app  ::= primary ( '(' term, ... ')' )*      f(a, b) == (f a) b
//   primary ::= '(' term ')' | v | phi_<name> | integer
//            | F(i, x) | G(i, x) | NOT(x) | AND(x, y) | OR(x, y)
//            | SEQ(x, y) | I(lo, hi) | EXTG(guard, anchor)
//
// Constructor names are reserved and cannot be used as variables.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ambistl/error.hpp"
#include "ambistl/text.hpp"

namespace ambistl {

enum class TermKind {
  kVar,
  kLam,
  kApp,
  kAtom,
  kInt,
  kInterval,  // I(lo, hi)
  kEventually,
  kAlways,
  kNot,
  kAnd,
  kOr,
  kSeq,
  kExtG,  // extent-anchored guard: EXTG(guard, anchor)
};

class Term {
 public:
  static Term var(std::string name) { return Term(make(TermKind::kVar, std::move(name), 0, {})); }
  static Term lam(std::string var, Term body) {
    return Term(make(TermKind::kLam, std::move(var), 0, {std::move(body)}));
  }
  static Term app(Term fn, Term arg) { return Term(make(TermKind::kApp, {}, 0, {std::move(fn), std::move(arg)})); }
  static Term atom(std::string name) { return Term(make(TermKind::kAtom, std::move(name), 0, {})); }
  static Term integer(std::int64_t v) { return Term(make(TermKind::kInt, {}, v, {})); }
  static Term interval(Term lo, Term hi) { return node(TermKind::kInterval, {std::move(lo), std::move(hi)}); }
  static Term interval(std::int64_t lo, std::int64_t hi) { return interval(integer(lo), integer(hi)); }
  static Term eventually(Term i, Term body) { return node(TermKind::kEventually, {std::move(i), std::move(body)}); }
  static Term always(Term i, Term body) { return node(TermKind::kAlways, {std::move(i), std::move(body)}); }
  static Term negation(Term body) { return node(TermKind::kNot, {std::move(body)}); }
  static Term conj(Term l, Term r) { return node(TermKind::kAnd, {std::move(l), std::move(r)}); }
  static Term disj(Term l, Term r) { return node(TermKind::kOr, {std::move(l), std::move(r)}); }
  static Term seq(Term first, Term second) { return node(TermKind::kSeq, {std::move(first), std::move(second)}); }
  static Term extg(Term guard, Term anchor) { return node(TermKind::kExtG, {std::move(guard), std::move(anchor)}); }

  static Term node(TermKind kind, std::vector<Term> children) {
    return Term(make(kind, {}, 0, std::move(children)));
  }

  TermKind kind() const { return node_->kind; }
  // Variable name (Var, Lam) or proposition name (Atom).
  const std::string& name() const { return node_->name; }
  std::int64_t value() const { return node_->value; }
  std::span<const Term> children() const { return node_->children; }
  const Term& child(std::size_t i = 0) const { return node_->children.at(i); }
  const Term& body() const { return child(0); }
  const Term& fn() const { return child(0); }
  const Term& arg() const { return child(1); }

  Term with_children(std::vector<Term> children) const {
    return Term(make(kind(), name(), value(), std::move(children)));
  }

  // Exact structural equality (bound names must match too; see
  // alpha_equivalent for the modulo-renaming comparison).
  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.name() != b.name() || a.value() != b.value() ||
        a.children().size() != b.children().size()) {
      return false;
    }
    return std::equal(a.children().begin(), a.children().end(), b.children().begin());
  }

 private:
  struct Node {
    TermKind kind;
    std::string name;
    std::int64_t value;
    std::vector<Term> children;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::shared_ptr<const Node> make(TermKind kind, std::string name, std::int64_t value,
                                          std::vector<Term> children) {
    return std::make_shared<const Node>(Node{kind, std::move(name), value, std::move(children)});
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

struct ConstructorInfo {
  std::string_view name;
  TermKind kind;
  std::size_t arity;
};

inline constexpr std::array<ConstructorInfo, 8> kConstructors{{
    {"F", TermKind::kEventually, 2},
    {"G", TermKind::kAlways, 2},
    {"NOT", TermKind::kNot, 1},
    {"AND", TermKind::kAnd, 2},
    {"OR", TermKind::kOr, 2},
    {"SEQ", TermKind::kSeq, 2},
    {"I", TermKind::kInterval, 2},
    {"EXTG", TermKind::kExtG, 2},
}};

inline const ConstructorInfo* constructor_by_name(std::string_view name) {
  for (const auto& c : kConstructors) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

inline const ConstructorInfo* constructor_by_kind(TermKind kind) {
  for (const auto& c : kConstructors) {
    if (c.kind == kind) return &c;
  }
  return nullptr;
}

inline void format_term_into(std::string& out, const Term& t);

inline void format_primary(std::string& out, const Term& t) {
  if (t.kind() == TermKind::kLam) {
    out += '(';
    format_term_into(out, t);
    out += ')';
  } else {
    format_term_into(out, t);
  }
}

inline void format_term_into(std::string& out, const Term& t) {
  switch (t.kind()) {
    case TermKind::kVar:
      out += t.name();
      return;
    case TermKind::kLam:
      out += "lam ";
      out += t.name();
      out += ". ";
      format_term_into(out, t.body());
      return;
    case TermKind::kApp: {
      // Collect the application spine f a1 a2 ... into f(a1, a2, ...).
      std::vector<const Term*> args;
      const Term* head = &t;
      while (head->kind() == TermKind::kApp) {
        args.push_back(&head->arg());
        head = &head->fn();
      }
      format_primary(out, *head);
      out += '(';
      for (auto it = args.rbegin(); it != args.rend(); ++it) {
        if (it != args.rbegin()) out += ", ";
        format_term_into(out, **it);
      }
      out += ')';
      return;
    }
    case TermKind::kAtom:
      out += "phi_";
      out += t.name();
      return;
    case TermKind::kInt:
      out += std::to_string(t.value());
      return;
    default: {
      const auto* info = constructor_by_kind(t.kind());
      out += info->name;
      out += '(';
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += ", ";
        format_term_into(out, t.child(i));
      }
      out += ')';
      return;
    }
  }
}

class TermReader {
 public:
  explicit TermReader(std::string_view text) : scan_(text, "template") {}

  Term read() {
    Term t = term();
    if (!scan_.at_end()) scan_.fail("trailing input");
    return t;
  }

 private:
  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  Term term() {
    if (scan_.consume("lam ")) {
      std::string v = scan_.identifier();
      check_variable(v);
      scan_.expect('.');
      return Term::lam(std::move(v), term());
    }
    return app();
  }

  std::vector<Term> args() {
    std::vector<Term> out;
    scan_.expect('(');
    out.push_back(term());
    while (scan_.consume(',')) out.push_back(term());
    scan_.expect(')');
    return out;
  }

  Term app() {
    Term t = primary();
    while (scan_.peek() == '(') {
      for (auto& a : args()) t = Term::app(std::move(t), std::move(a));
    }
    return t;
  }

  void check_variable(const std::string& v) {
    if (constructor_by_name(v) != nullptr || v == "lam" || v.rfind("phi_", 0) == 0) {
      scan_.fail("'" + v + "' is reserved and cannot be a variable");
    }
  }

  Term primary() {
    char c = scan_.peek();
    if (c == '(') {
      scan_.consume('(');
      Term t = term();
      scan_.expect(')');
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return Term::integer(scan_.integer());
    if (!is_ident_start(c)) scan_.fail("expected a term");
    std::string id = scan_.identifier();
    if (id.rfind("phi_", 0) == 0) {
      if (id.size() == 4) scan_.fail("empty proposition name");
      return Term::atom(id.substr(4));
    }
    if (id == "lam") scan_.fail("expected 'lam v. body'");
    if (const auto* info = constructor_by_name(id)) {
      if (scan_.peek() != '(') scan_.fail(std::string(info->name) + " needs arguments");
      auto a = args();
      if (a.size() != info->arity) {
        scan_.fail(std::string(info->name) + " takes " + std::to_string(info->arity) + " argument(s)");
      }
      return Term::node(info->kind, std::move(a));
    }
    return Term::var(std::move(id));
  }

  Scanner scan_;
};

}  // namespace detail

inline std::string format(const Term& t) {
  std::string out;
  detail::format_term_into(out, t);
  return out;
}

inline Term parse_term(std::string_view text) { return detail::TermReader(text).read(); }

inline void collect_free_vars(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::kVar:
      if (!bound.count(t.name())) out.insert(t.name());
      return;
    case TermKind::kLam: {
      bool fresh = bound.insert(t.name()).second;
      collect_free_vars(t.body(), bound, out);
      if (fresh) bound.erase(t.name());
      return;
    }
    default:
      for (const auto& c : t.children()) collect_free_vars(c, bound, out);
  }
}

inline std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  collect_free_vars(t, bound, out);
  return out;
}

inline bool is_closed(const Term& t) { return free_vars(t).empty(); }

// True when the term still contains lambda machinery (Var, Lam or App).
inline bool has_lambda_residue(const Term& t) {
  if (t.kind() == TermKind::kVar || t.kind() == TermKind::kLam || t.kind() == TermKind::kApp) return true;
  return std::any_of(t.children().begin(), t.children().end(), has_lambda_residue);
}

namespace detail {

inline bool alpha_eq(const Term& a, const Term& b, std::vector<std::string>& env_a,
                     std::vector<std::string>& env_b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::kVar: {
      auto ia = std::find(env_a.rbegin(), env_a.rend(), a.name());
      auto ib = std::find(env_b.rbegin(), env_b.rend(), b.name());
      bool bound_a = ia != env_a.rend();
      bool bound_b = ib != env_b.rend();
      if (bound_a != bound_b) return false;
      if (!bound_a) return a.name() == b.name();
      return (ia - env_a.rbegin()) == (ib - env_b.rbegin());
    }
    case TermKind::kLam: {
      env_a.push_back(a.name());
      env_b.push_back(b.name());
      bool eq = alpha_eq(a.body(), b.body(), env_a, env_b);
      env_a.pop_back();
      env_b.pop_back();
      return eq;
    }
    case TermKind::kAtom:
      return a.name() == b.name();
    case TermKind::kInt:
      return a.value() == b.value();
    default:
      if (a.children().size() != b.children().size()) return false;
      for (std::size_t i = 0; i < a.children().size(); ++i) {
        if (!alpha_eq(a.child(i), b.child(i), env_a, env_b)) return false;
      }
      return true;
  }
}

inline std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  auto stem = base.substr(0, base.find('_'));
  for (int k = 1;; ++k) {
    auto candidate = stem + "_" + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

// t[var := value], renaming binders that would capture free variables of
// `value`.
inline Term substitute(const Term& t, const std::string& var, const Term& value,
                       const std::set<std::string>& value_fv) {
  switch (t.kind()) {
    case TermKind::kVar:
      return t.name() == var ? value : t;
    case TermKind::kLam: {
      if (t.name() == var) return t;
      auto body_fv = free_vars(t.body());
      if (!body_fv.count(var)) return t;
      if (value_fv.count(t.name())) {
        std::set<std::string> avoid = value_fv;
        avoid.insert(body_fv.begin(), body_fv.end());
        avoid.insert(var);
        auto renamed = fresh_name(t.name(), avoid);
        auto body = substitute(t.body(), t.name(), Term::var(renamed), {renamed});
        return Term::lam(renamed, substitute(body, var, value, value_fv));
      }
      return Term::lam(t.name(), substitute(t.body(), var, value, value_fv));
    }
    case TermKind::kAtom:
    case TermKind::kInt:
      return t;
    default: {
      std::vector<Term> cs;
      cs.reserve(t.children().size());
      for (const auto& c : t.children()) cs.push_back(substitute(c, var, value, value_fv));
      return t.with_children(std::move(cs));
    }
  }
}

class Reducer {
 public:
  explicit Reducer(std::size_t budget) : budget_(budget) {}

  Term contract(const Term& lam, const Term& arg) {
    if (++steps_ > budget_) {
      throw Error(ErrorKind::kIllTyped, "beta reduction exceeded " + std::to_string(budget_) +
                                            " steps; the templates are probably ill-typed");
    }
    return substitute(lam.body(), lam.name(), arg, free_vars(arg));
  }

  Term whnf(const Term& t) {
    if (t.kind() != TermKind::kApp) return t;
    Term f = whnf(t.fn());
    if (f.kind() == TermKind::kLam) return whnf(contract(f, t.arg()));
    return Term::app(std::move(f), t.arg());
  }

  Term normal(const Term& t) {
    Term w = whnf(t);
    switch (w.kind()) {
      case TermKind::kLam:
        return Term::lam(w.name(), normal(w.body()));
      case TermKind::kVar:
      case TermKind::kAtom:
      case TermKind::kInt:
        return w;
      default: {
        std::vector<Term> cs;
        for (const auto& c : w.children()) cs.push_back(normal(c));
        return w.with_children(std::move(cs));
      }
    }
  }

  Term applicative(const Term& t) {
    switch (t.kind()) {
      case TermKind::kApp: {
        Term f = applicative(t.fn());
        Term a = applicative(t.arg());
        if (f.kind() == TermKind::kLam) return applicative(contract(f, a));
        return Term::app(std::move(f), std::move(a));
      }
      case TermKind::kLam:
        return Term::lam(t.name(), applicative(t.body()));
      case TermKind::kVar:
      case TermKind::kAtom:
      case TermKind::kInt:
        return t;
      default: {
        std::vector<Term> cs;
        for (const auto& c : t.children()) cs.push_back(applicative(c));
        return t.with_children(std::move(cs));
      }
    }
  }

  std::size_t steps() const { return steps_; }

 private:
  std::size_t budget_;
  std::size_t steps_ = 0;
};

}  // namespace detail

inline bool alpha_equivalent(const Term& a, const Term& b) {
  std::vector<std::string> env_a, env_b;
  return detail::alpha_eq(a, b, env_a, env_b);
}

enum class ReductionOrder { kNormal, kApplicative };

inline constexpr std::size_t kBetaStepBudget = 10000;

// Beta-normal form. Normal order (leftmost-outermost) by default; the
// applicative order is available for cross-checking confluence.
inline Term beta_reduce(const Term& t, ReductionOrder order = ReductionOrder::kNormal,
                        std::size_t budget = kBetaStepBudget) {
  detail::Reducer r(budget);
  return order == ReductionOrder::kNormal ? r.normal(t) : r.applicative(t);
}

}  // namespace ambistl
