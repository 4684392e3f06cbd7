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

// CCG syntactic categories: S, NP, NUM, UNIT and the slash types built from
// them. `A/B` seeks B to its right, `A\B` seeks B to its left; slashes
// associate to the left, so `A/B/C` is `(A/B)/C`.

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ambistl/error.hpp"
#include "ambistl/text.hpp"

namespace ambistl {

enum class Slash { kForward, kBackward };

class Category {
 public:
  static Category basic(std::string name) {
    if (name != "S" && name != "NP" && name != "NUM" && name != "UNIT") {
      throw Error(ErrorKind::kSyntax, "unknown basic category '" + name + "'");
    }
    return Category(std::make_shared<const Node>(Node{std::move(name), Slash::kForward, {}, {}}));
  }

  static Category functor(Slash slash, Category result, Category argument) {
    return Category(std::make_shared<const Node>(
        Node{{}, slash, std::move(result.node_), std::move(argument.node_)}));
  }

  bool is_basic() const { return node_->result == nullptr; }
  bool is_functor() const { return !is_basic(); }
  const std::string& name() const { return node_->name; }
  Slash slash() const { return node_->slash; }
  Category result() const { return Category(node_->result); }
  Category argument() const { return Category(node_->argument); }

  bool is(std::string_view basic_name) const { return is_basic() && name() == basic_name; }

  friend bool operator==(const Category& a, const Category& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_basic() != b.is_basic()) return false;
    if (a.is_basic()) return a.name() == b.name();
    return a.slash() == b.slash() && a.result() == b.result() && a.argument() == b.argument();
  }

  std::string str() const {
    if (is_basic()) return name();
    auto wrap = [](const Category& c) { return c.is_basic() ? c.str() : "(" + c.str() + ")"; };
    return wrap(result()) + (slash() == Slash::kForward ? "/" : "\\") + wrap(argument());
  }

 private:
  struct Node {
    std::string name;
    Slash slash;
    std::shared_ptr<const Node> result;
    std::shared_ptr<const Node> argument;
  };

  explicit Category(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline Category read_category(Scanner& scan);

inline Category read_category_atom(Scanner& scan) {
  if (scan.consume('(')) {
    Category c = read_category(scan);
    scan.expect(')');
    return c;
  }
  std::string name = scan.identifier();
  if (name != "S" && name != "NP" && name != "NUM" && name != "UNIT") {
    scan.fail("unknown basic category '" + name + "'");
  }
  return Category::basic(name);
}

inline Category read_category(Scanner& scan) {
  Category c = read_category_atom(scan);
  for (;;) {
    if (scan.consume('/')) {
      c = Category::functor(Slash::kForward, c, read_category_atom(scan));
    } else if (scan.consume('\\')) {
      c = Category::functor(Slash::kBackward, c, read_category_atom(scan));
    } else {
      return c;
    }
  }
}

}  // namespace detail

inline Category parse_category(std::string_view text) {
  detail::Scanner scan(text, "category");
  Category c = detail::read_category(scan);
  if (!scan.at_end()) scan.fail("trailing input");
  return c;
}

// Forward application X/Y + Y => X; backward application Y + X\Y => X.
inline bool can_apply_forward(const Category& fn, const Category& arg) {
  return fn.is_functor() && fn.slash() == Slash::kForward && fn.argument() == arg;
}

inline bool can_apply_backward(const Category& arg, const Category& fn) {
  return fn.is_functor() && fn.slash() == Slash::kBackward && fn.argument() == arg;
}

}  // namespace ambistl
