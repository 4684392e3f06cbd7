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

#include <string_view>

#include "ambistl/lexicon.hpp"

namespace ambistl {

// Bundled navigation lexicon. data/default.lex is a verbatim copy meant as a
// starting point for custom lexicons; a test keeps the two in sync.
inline constexpr std::string_view kDefaultLexiconText = R"LEX(# ambistl default lexicon: reach/avoid navigation commands.
#
# The inventory is intentionally small and meant to be extended. Several
# surface forms carry more than one entry; that is where structural
# ambiguity comes from.

@rule fa 0.0
@rule ba 0.0
@rule coord 0.0
@locality 0.7
@modifier while
@modifier within

# task predicates: "reach X" is lam i. F(i, X), "avoid X" is lam i. G(i, NOT(X))
reach    | S/NP | 0.0 | lam x. lam i. F(i, x)
avoid    | S/NP | 0.0 | lam x. lam i. G(i, NOT(x))
avoiding | S/NP | 0.0 | lam x. lam i. G(i, NOT(x))

# regions
a | NP | 0.0 | phi_A
b | NP | 0.0 | phi_B
c | NP | 0.0 | phi_C
d | NP | 0.0 | phi_D

# disjunction: of regions, of closed tasks, and of tasks sharing one deadline
or | (NP\NP)/NP | 0.0 | lam y. lam x. OR(x, y)
or | (S\S)/S    | 0.0 | lam q. lam p. OR(p, q)
or | (S\S)/S    | 0.0 | lam q. lam p. lam i. OR(p(i), q(i))

# sequencing
and then | (S\S)/S | 0.0 | lam q. lam p. SEQ(p, q)

# while: a shared deadline, or a guard spanning the temporal extent of the
# task it modifies
while | (S\S)/S | 0.0 | lam q. lam p. lam i. AND(p(i), q(i))
while | (S\S)/S | 0.0 | lam q. lam p. AND(p, EXTG(q, p))

# deadlines, after the task or fronted before it
within  | ((S\S)/UNIT)/NUM | 0.0 | lam n. lam u. lam p. p(I(0, n))
within  | ((S/S)/UNIT)/NUM | 0.0 | lam n. lam u. lam p. p(I(0, n))
seconds | UNIT             | 0.0 | lam t. t
)LEX";

inline const Lexicon& default_lexicon() {
  static const Lexicon lex = load_lexicon_string(kDefaultLexiconText);
  return lex;
}

}  // namespace ambistl
