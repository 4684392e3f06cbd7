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

#include "ambistl/stl.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace ambistl::stl {
namespace {

Formula A() { return Formula::atom("A"); }
Formula B() { return Formula::atom("B"); }
Formula C() { return Formula::atom("C"); }
Formula D() { return Formula::atom("D"); }

TEST(IntervalTest, RejectsInvertedAndNegative) {
  EXPECT_NO_THROW(Interval(0, 0));
  EXPECT_THROW(Interval(3, 2), Error);
  EXPECT_THROW(Interval(-1, 2), Error);
}

TEST(FormulaTest, AndOrNeedTwoOperands) {
  EXPECT_THROW(Formula::conjunction({A()}), Error);
  EXPECT_THROW(Formula::disjunction({}), Error);
}

TEST(FormatTest, RenderingConvention) {
  EXPECT_EQ(format(Formula::eventually({0, 10}, B())), "F[0,10] phi_B");
  EXPECT_EQ(format(Formula::conjunction({B(), Formula::negation(A())})), "(phi_B & !phi_A)");
  EXPECT_EQ(format(Formula::top()), "true");
  EXPECT_EQ(format(Formula::eventually({0, 10}, Formula::conjunction({B(), Formula::eventually({0, 15}, C())}))),
            "F[0,10](phi_B & F[0,15] phi_C)");
  EXPECT_EQ(format(Formula::until({1, 2}, Formula::top(), Formula::disjunction({A(), B()}))),
            "U[1,2](true, (phi_A | phi_B))");
  EXPECT_EQ(format(Formula::always({0, 5}, Formula::negation(A()))), "G[0,5] !phi_A");
}

TEST(FormatTest, ReaderRoundTripsRandomFormulas) {
  testing::FormulaGen gen(7);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.formula(4);
    EXPECT_EQ(parse_formula(format(f)), f) << format(f);
  }
}

TEST(FormatTest, ReaderAcceptsLooseSpacingAndRejectsGarbage) {
  EXPECT_EQ(parse_formula("  F[0,10]  ( phi_B|phi_C ) "),
            Formula::eventually({0, 10}, Formula::disjunction({B(), C()})));
  EXPECT_THROW(parse_formula("F[0,10]"), Error);
  EXPECT_THROW(parse_formula("(phi_A & phi_B"), Error);
  EXPECT_THROW(parse_formula("(phi_A & phi_B | phi_C)"), Error);
  EXPECT_THROW(parse_formula("F[5,1] phi_A"), Error);
  EXPECT_THROW(parse_formula("phi_A phi_B"), Error);
}

TEST(CanonicalizeTest, SortsCommutativeOperands) {
  EXPECT_EQ(canonicalize(Formula::disjunction({C(), B()})), Formula::disjunction({B(), C()}));
}

TEST(CanonicalizeTest, EliminatesDoubleNegation) {
  EXPECT_EQ(canonicalize(Formula::negation(Formula::negation(A()))), A());
  EXPECT_EQ(canonicalize(Formula::negation(Formula::negation(Formula::negation(A())))), Formula::negation(A()));
}

TEST(CanonicalizeTest, FlattensNestedConnectives) {
  auto f = Formula::conjunction({Formula::conjunction({C(), A()}), B()});
  EXPECT_EQ(canonicalize(f), Formula::conjunction({A(), B(), C()}));
  // Or inside And is not flattened.
  auto g = Formula::conjunction({Formula::disjunction({C(), A()}), B()});
  EXPECT_EQ(format(canonicalize(g)), "((phi_A | phi_C) & phi_B)");
}

TEST(CanonicalizeTest, RemovesDuplicateOperandsAndCollapsesSingletons) {
  EXPECT_EQ(canonicalize(Formula::conjunction({A(), B(), A()})), Formula::conjunction({A(), B()}));
  EXPECT_EQ(canonicalize(Formula::disjunction({A(), Formula::negation(Formula::negation(A()))})), A());
}

TEST(CanonicalizeTest, DoesNotDistributeTemporalOperators) {
  auto merged = Formula::eventually({0, 10}, Formula::disjunction({B(), C()}));
  auto split = Formula::disjunction({Formula::eventually({0, 10}, B()), Formula::eventually({0, 10}, C())});
  EXPECT_NE(canonicalize(merged), canonicalize(split));
}

TEST(CanonicalizeTest, IdempotentAndPermutationInvariant) {
  testing::FormulaGen gen(11);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.formula(4);
    Formula c = canonicalize(f);
    EXPECT_EQ(canonicalize(c), c) << format(f);
    EXPECT_EQ(canonicalize(gen.shuffle(f)), c) << format(f);
  }
}

TEST(ExtentTest, SingleBound) { EXPECT_EQ(extent(Formula::eventually({0, 10}, B())), 10); }

TEST(ExtentTest, NestedSequenceAddsBounds) {
  auto s10 = Formula::eventually({0, 10}, Formula::conjunction({B(), Formula::eventually({0, 15}, C())}));
  EXPECT_EQ(extent(s10), 25);
  auto s12 = Formula::eventually(
      {0, 10}, Formula::conjunction({B(), Formula::disjunction({Formula::eventually({0, 15}, C()),
                                                                Formula::eventually({0, 5}, D())})}));
  EXPECT_EQ(extent(s12), 25);
}

TEST(ExtentTest, AtomsNegationUntil) {
  EXPECT_EQ(extent(A()), 0);
  EXPECT_EQ(extent(Formula::top()), 0);
  EXPECT_EQ(extent(Formula::negation(Formula::always({2, 7}, A()))), 7);
  EXPECT_EQ(extent(Formula::until({0, 3}, Formula::eventually({0, 4}, A()), B())), 7);
}

TEST(ExtentTest, MonotoneAlongSubformulas) {
  testing::FormulaGen gen(5);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.formula(4);
    auto check = [&](auto&& self, const Formula& g) -> void {
      for (const auto& c : g.children()) {
        EXPECT_LE(extent(c), extent(g));
        self(self, c);
      }
    };
    check(check, f);
  }
}

}  // namespace
}  // namespace ambistl::stl
