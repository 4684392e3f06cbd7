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

#include "ambistl/meaning.hpp"

#include <gtest/gtest.h>

#include "ambistl/category.hpp"

namespace ambistl {
namespace {

Term reduce(std::string_view text, ReductionOrder order = ReductionOrder::kNormal) {
  return beta_reduce(parse_term(text), order);
}

TEST(CategoryTest, ParsesLeftAssociatively) {
  Category c = parse_category("((S\\S)/UNIT)/NUM");
  EXPECT_EQ(c.str(), "((S\\S)/UNIT)/NUM");
  EXPECT_EQ(parse_category("S\\S/S"), parse_category("(S\\S)/S"));
  EXPECT_TRUE(c.is_functor());
  EXPECT_EQ(c.argument(), Category::basic("NUM"));
  EXPECT_THROW(parse_category("S/"), Error);
  EXPECT_THROW(parse_category("(S/NP"), Error);
  EXPECT_THROW(parse_category("VP"), Error);
}

TEST(CategoryTest, ApplicationDirections) {
  Category fwd = parse_category("S/NP");
  Category bwd = parse_category("S\\S");
  EXPECT_TRUE(can_apply_forward(fwd, Category::basic("NP")));
  EXPECT_FALSE(can_apply_forward(fwd, Category::basic("S")));
  EXPECT_TRUE(can_apply_backward(Category::basic("S"), bwd));
  EXPECT_FALSE(can_apply_backward(Category::basic("S"), fwd));
}

TEST(TermTest, FormatParseRoundTrip) {
  for (std::string_view s : {"lam x. lam i. F(i, x)", "lam q. lam p. lam i. OR(p(i), q(i))",
                             "lam n. lam u. lam p. p(I(0, n))", "AND(phi_A, EXTG(lam i. G(i, NOT(phi_A)), phi_B))",
                             "(lam x. x)(lam y. y)"}) {
    Term t = parse_term(s);
    EXPECT_EQ(parse_term(format(t)), t) << s;
  }
}

TEST(TermTest, RejectsMalformedTemplates) {
  EXPECT_THROW(parse_term("lam . x"), Error);
  EXPECT_THROW(parse_term("F(i)"), Error);
  EXPECT_THROW(parse_term("lam F. F"), Error);
  EXPECT_THROW(parse_term("AND(phi_A, phi_B"), Error);
}

TEST(TermTest, FreeVariables) {
  EXPECT_EQ(free_vars(parse_term("lam x. OR(x, y)")), std::set<std::string>{"y"});
  EXPECT_TRUE(is_closed(parse_term("lam x. lam i. F(i, x)")));
}

TEST(BetaTest, TaskPredicateTakesRegionThenInterval) {
  Term t = reduce("(lam x. lam i. F(i, x))(phi_B)(I(0, 10))");
  EXPECT_EQ(t, Term::eventually(Term::interval(0, 10), Term::atom("B")));
}

TEST(BetaTest, DeadlineModifier) {
  Term t = reduce("(lam n. lam u. lam p. p(I(0, n)))(10)(lam t. t)(lam i. G(i, NOT(phi_A)))");
  EXPECT_EQ(format(t), "G(I(0, 10), NOT(phi_A))");
}

TEST(BetaTest, CaptureAvoidance) {
  // Substituting the free y under a binder named y must rename that binder.
  Term t = reduce("(lam x. lam y. OR(x, y))(y)");
  ASSERT_EQ(t.kind(), TermKind::kLam);
  EXPECT_NE(t.name(), "y");
  EXPECT_TRUE(alpha_equivalent(t, parse_term("lam z. OR(y, z)")));
  EXPECT_EQ(free_vars(t), std::set<std::string>{"y"});
}

TEST(BetaTest, ReducesUnderBinders) {
  EXPECT_EQ(reduce("lam z. (lam x. x)(z)"), parse_term("lam z. z"));
}

TEST(BetaTest, NonTerminatingTermHitsBudget) {
  try {
    reduce("(lam x. x(x))(lam x. x(x))");
    FAIL() << "expected budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIllTyped);
  }
}

TEST(BetaTest, NormalOrderDiscardsDivergentArgument) {
  std::string_view k_omega = "(lam x. lam y. y)((lam x. x(x))(lam x. x(x)))";
  EXPECT_EQ(reduce(k_omega), parse_term("lam y. y"));
  EXPECT_THROW(reduce(k_omega, ReductionOrder::kApplicative), Error);
}

TEST(BetaTest, OrdersAgreeOnTerminatingTerms) {
  for (std::string_view s : {"(lam q. lam p. lam i. OR(p(i), q(i)))(lam i. F(i, phi_C))(lam i. F(i, phi_B))(I(0, 5))",
                             "(lam q. lam p. AND(p, EXTG(q, p)))(phi_A)((lam x. x)(phi_B))",
                             "(lam f. lam x. f(f(x)))(lam y. NOT(y))(phi_D)"}) {
    EXPECT_TRUE(alpha_equivalent(reduce(s), reduce(s, ReductionOrder::kApplicative))) << s;
  }
}

TEST(AlphaTest, BoundNamesDoNotMatter) {
  EXPECT_TRUE(alpha_equivalent(parse_term("lam x. lam y. OR(x, y)"), parse_term("lam a. lam b. OR(a, b)")));
  EXPECT_FALSE(alpha_equivalent(parse_term("lam x. lam y. OR(x, y)"), parse_term("lam a. lam b. OR(b, a)")));
  EXPECT_FALSE(alpha_equivalent(parse_term("lam x. y"), parse_term("lam x. z")));
  EXPECT_TRUE(alpha_equivalent(parse_term("lam x. y"), parse_term("lam z. y")));
  EXPECT_FALSE(alpha_equivalent(parse_term("lam x. lam x. x"), parse_term("lam x. lam y. x")));
}

TEST(ResidueTest, DetectsLambdaAndApplication) {
  EXPECT_TRUE(has_lambda_residue(parse_term("lam i. F(i, phi_B)")));
  EXPECT_FALSE(has_lambda_residue(parse_term("F(I(0, 10), phi_B)")));
}

}  // namespace
}  // namespace ambistl
