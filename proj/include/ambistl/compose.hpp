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

#include "ambistl/lexicon.hpp"
#include "ambistl/meaning.hpp"
#include "ambistl/parser.hpp"

namespace ambistl {

// Unreduced meaning of a derivation: lexical templates glued by application
// in the order dictated by the combinatory rule at each node.
inline Term application_tree(const Derivation& d) {
  if (d.is_leaf()) return d.entry().meaning;
  Term l = application_tree(d.left());
  Term r = application_tree(d.right());
  if (d.rule() == kRuleBackward) return Term::app(std::move(r), std::move(l));
  return Term::app(std::move(l), std::move(r));
}

// Meaning of a derivation in beta-normal form. The result may still hold
// lambdas (e.g. a task whose deadline was never given); conversion to STL
// decides whether it is usable.
inline Term compose(const Derivation& d, ReductionOrder order = ReductionOrder::kNormal) {
  return beta_reduce(application_tree(d), order);
}

}  // namespace ambistl
