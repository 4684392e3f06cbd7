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

// Signal temporal logic formulas over discrete time.
//
// Formulas are immutable trees shared through reference counting. The
// canonical text rendering produced by format() is part of the external
// interface: it is the sort key of canonical And/Or children and the
// deduplication key of candidate sets, so its grammar must stay stable:
//
//   f ::= true | phi_<name> | !f | (f & f & ...) | (f | f | ...)
//       | F[a,b] f | G[a,b] f | U[a,b](f, f)
//
// A space separates an interval from its operand unless the operand starts
// with a parenthesis.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ambistl/error.hpp"
#include "ambistl/text.hpp"

namespace ambistl::stl {

// Closed discrete-time interval [lo, hi] of time steps.
class Interval {
 public:
  Interval() = default;
  Interval(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
    if (lo < 0 || hi < lo) {
      throw Error(ErrorKind::kInvalidArgument,
                  "invalid interval [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
  }

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
};

enum class Op { kTrue, kAtom, kNot, kAnd, kOr, kEventually, kAlways, kUntil };

class Formula {
 public:
  static Formula top() { return Formula(make(Op::kTrue, {}, {}, {})); }

  static Formula atom(std::string name) {
    if (name.empty()) throw Error(ErrorKind::kInvalidArgument, "empty proposition name");
    return Formula(make(Op::kAtom, std::move(name), {}, {}));
  }

  static Formula negation(Formula child) { return Formula(make(Op::kNot, {}, {}, {std::move(child)})); }

  static Formula conjunction(std::vector<Formula> children) {
    return nary(Op::kAnd, std::move(children));
  }

  static Formula disjunction(std::vector<Formula> children) {
    return nary(Op::kOr, std::move(children));
  }

  static Formula eventually(Interval interval, Formula child) {
    return Formula(make(Op::kEventually, {}, interval, {std::move(child)}));
  }

  static Formula always(Interval interval, Formula child) {
    return Formula(make(Op::kAlways, {}, interval, {std::move(child)}));
  }

  static Formula until(Interval interval, Formula left, Formula right) {
    return Formula(make(Op::kUntil, {}, interval, {std::move(left), std::move(right)}));
  }

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const Interval& interval() const { return node_->interval; }
  std::span<const Formula> children() const { return node_->children; }
  const Formula& child(std::size_t i = 0) const { return node_->children.at(i); }

  bool is_temporal() const {
    return op() == Op::kEventually || op() == Op::kAlways || op() == Op::kUntil;
  }

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.name() != b.name() || !(a.interval() == b.interval()) ||
        a.children().size() != b.children().size()) {
      return false;
    }
    return std::equal(a.children().begin(), a.children().end(), b.children().begin());
  }

 private:
  struct Node {
    Op op;
    std::string name;
    Interval interval;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::shared_ptr<const Node> make(Op op, std::string name, Interval interval,
                                          std::vector<Formula> children) {
    return std::make_shared<const Node>(Node{op, std::move(name), interval, std::move(children)});
  }

  static Formula nary(Op op, std::vector<Formula> children) {
    if (children.size() < 2) {
      throw Error(ErrorKind::kInvalidArgument, "And/Or need at least two operands");
    }
    return Formula(make(op, {}, {}, std::move(children)));
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline void format_interval(std::string& out, const Interval& i) {
  out += '[';
  out += std::to_string(i.lo());
  out += ',';
  out += std::to_string(i.hi());
  out += ']';
}

inline void format_into(std::string& out, const Formula& f);

inline void format_operand(std::string& out, const Formula& f) {
  std::string sub;
  format_into(sub, f);
  if (sub.front() != '(') out += ' ';
  out += sub;
}

inline void format_into(std::string& out, const Formula& f) {
  switch (f.op()) {
    case Op::kTrue:
      out += "true";
      return;
    case Op::kAtom:
      out += "phi_";
      out += f.name();
      return;
    case Op::kNot:
      out += '!';
      format_into(out, f.child());
      return;
    case Op::kAnd:
    case Op::kOr: {
      const char* sep = f.op() == Op::kAnd ? " & " : " | ";
      out += '(';
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) out += sep;
        first = false;
        format_into(out, c);
      }
      out += ')';
      return;
    }
    case Op::kEventually:
    case Op::kAlways:
      out += f.op() == Op::kEventually ? 'F' : 'G';
      format_interval(out, f.interval());
      format_operand(out, f.child());
      return;
    case Op::kUntil:
      out += 'U';
      format_interval(out, f.interval());
      out += '(';
      format_into(out, f.child(0));
      out += ", ";
      format_into(out, f.child(1));
      out += ')';
      return;
  }
}

}  // namespace detail

inline std::string format(const Formula& f) {
  std::string out;
  detail::format_into(out, f);
  return out;
}

namespace detail {

class FormulaReader {
 public:
  explicit FormulaReader(std::string_view text) : scan_(text, "formula") {}

  Formula read() {
    Formula f = unit();
    if (!scan_.at_end()) scan_.fail("trailing input");
    return f;
  }

 private:
  Interval interval() {
    scan_.expect('[');
    auto lo = scan_.integer();
    scan_.expect(',');
    auto hi = scan_.integer();
    scan_.expect(']');
    if (lo < 0 || hi < lo) scan_.fail("invalid interval");
    return Interval(lo, hi);
  }

  Formula unit() {
    char c = scan_.peek();
    if (c == '!') {
      scan_.consume('!');
      return Formula::negation(unit());
    }
    if (c == '(') {
      scan_.consume('(');
      std::vector<Formula> items{unit()};
      char sep = scan_.peek();
      if (sep != '&' && sep != '|') scan_.fail("expected '&' or '|'");
      while (scan_.consume(sep)) items.push_back(unit());
      scan_.expect(')');
      return sep == '&' ? Formula::conjunction(std::move(items))
                        : Formula::disjunction(std::move(items));
    }
    if (scan_.consume("true")) return Formula::top();
    if (scan_.consume("phi_")) return Formula::atom(scan_.identifier());
    if (scan_.consume('F')) {
      auto i = interval();
      return Formula::eventually(i, unit());
    }
    if (scan_.consume('G')) {
      auto i = interval();
      return Formula::always(i, unit());
    }
    if (scan_.consume('U')) {
      auto i = interval();
      scan_.expect('(');
      Formula l = unit();
      scan_.expect(',');
      Formula r = unit();
      scan_.expect(')');
      return Formula::until(i, std::move(l), std::move(r));
    }
    scan_.fail("expected a formula");
  }

  ambistl::detail::Scanner scan_;
};

}  // namespace detail

// Reads the canonical text rendering (and any differently ordered variant of
// it) back into a formula.
inline Formula parse_formula(std::string_view text) { return detail::FormulaReader(text).read(); }

// Normal form: double negation removed, nested And/Or flattened, And/Or
// operands sorted by their rendering and deduplicated. Temporal operators are
// never rewritten, so e.g. F(a | b) and (F a | F b) stay distinct.
inline Formula canonicalize(const Formula& f) {
  switch (f.op()) {
    case Op::kTrue:
    case Op::kAtom:
      return f;
    case Op::kNot: {
      Formula c = canonicalize(f.child());
      if (c.op() == Op::kNot) return c.child();
      return Formula::negation(std::move(c));
    }
    case Op::kAnd:
    case Op::kOr: {
      std::vector<std::pair<std::string, Formula>> keyed;
      auto add = [&](const Formula& g) { keyed.emplace_back(format(g), g); };
      for (const auto& c : f.children()) {
        Formula cc = canonicalize(c);
        if (cc.op() == f.op()) {
          for (const auto& gc : cc.children()) add(gc);
        } else {
          add(cc);
        }
      }
      std::sort(keyed.begin(), keyed.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      keyed.erase(std::unique(keyed.begin(), keyed.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  keyed.end());
      if (keyed.size() == 1) return keyed.front().second;
      std::vector<Formula> out;
      out.reserve(keyed.size());
      for (auto& kv : keyed) out.push_back(std::move(kv.second));
      return f.op() == Op::kAnd ? Formula::conjunction(std::move(out))
                                : Formula::disjunction(std::move(out));
    }
    case Op::kEventually:
      return Formula::eventually(f.interval(), canonicalize(f.child()));
    case Op::kAlways:
      return Formula::always(f.interval(), canonicalize(f.child()));
    case Op::kUntil:
      return Formula::until(f.interval(), canonicalize(f.child(0)), canonicalize(f.child(1)));
  }
  return f;
}

// Temporal horizon: how far past the evaluation time the formula looks.
inline std::int64_t extent(const Formula& f) {
  switch (f.op()) {
    case Op::kTrue:
    case Op::kAtom:
      return 0;
    case Op::kNot:
      return extent(f.child());
    case Op::kAnd:
    case Op::kOr: {
      std::int64_t m = 0;
      for (const auto& c : f.children()) m = std::max(m, extent(c));
      return m;
    }
    case Op::kEventually:
    case Op::kAlways:
      return f.interval().hi() + extent(f.child());
    case Op::kUntil:
      return f.interval().hi() + std::max(extent(f.child(0)), extent(f.child(1)));
  }
  return 0;
}

// Proposition names in order of first occurrence.
inline std::vector<std::string> atoms(const Formula& f) {
  std::vector<std::string> out;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    if (g.op() == Op::kAtom && std::find(out.begin(), out.end(), g.name()) == out.end()) {
      out.push_back(g.name());
    }
    for (const auto& c : g.children()) self(self, c);
  };
  walk(walk, f);
  return out;
}

}  // namespace ambistl::stl
