// Copyright 2026 The formula-flow Authors
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

#include <gtest/gtest.h>

#include <random>

#include "ff/error.hpp"
#include "ff/formula.hpp"
#include "ff/verify/generators.hpp"

namespace ff {
namespace {

TEST(Parse, DepthTwoOrOfAndsIsNandTwo) {
  Formula f = parse_formula("(x1&x2)|(x3&x4)");
  EXPECT_EQ(f, build_nand_tree(2));
  EXPECT_EQ(f.num_variables(), 4u);
  EXPECT_EQ(f.depth(), 2u);
}

TEST(Parse, SingleVariable) {
  Formula f = parse_formula("x1");
  EXPECT_TRUE(f.is_leaf());
  EXPECT_EQ(f.num_variables(), 1u);
}

TEST(Parse, NegationIsPushedToTheLeaves) {
  Formula f = parse_formula("~(x1|x2)");
  EXPECT_EQ(f.kind(), GateKind::kAnd);
  ASSERT_EQ(f.children().size(), 2u);
  EXPECT_TRUE(f.children()[0].negated());
  EXPECT_TRUE(f.children()[1].negated());
  EXPECT_EQ(render_formula(f), "~x1&~x2");
  EXPECT_EQ(parse_formula("~~x1"), parse_formula("x1"));
}

TEST(Parse, RenumbersLeavesLeftToRight) {
  Formula f = parse_formula("x7 | (x3 & x9)");
  EXPECT_EQ(render_formula(f), "x1|(x2&x3)");
}

TEST(Parse, FlattensSameKindChildren) {
  EXPECT_EQ(parse_formula("(x1&x2)&x3"), and_formula(3));
  EXPECT_EQ(parse_formula("x1|(x2|(x3|x4))"), or_formula(4));
}

TEST(Parse, ReportsSyntaxErrorsWithPosition) {
  try {
    parse_formula("x1 & & x2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_formula("(x1|x2"), ParseError);
  EXPECT_THROW(parse_formula("x0"), ParseError);
  EXPECT_THROW(parse_formula(""), ParseError);
}

TEST(Parse, RejectsRepeatedVariables) { EXPECT_THROW(parse_formula("x1&(x2|x1)"), DomainError); }

TEST(Formula, RejectsFanInOne) {
  EXPECT_THROW(Formula::conjunction({Formula::leaf()}), DomainError);
  EXPECT_THROW(Formula::disjunction({}), DomainError);
}

TEST(Eval, Examples) {
  EXPECT_TRUE(eval_formula(build_nand_tree(2), Assignment::parse("1100")));
  EXPECT_TRUE(eval_formula(build_nand_tree(4), Assignment::parse("1110001100011101")));
  EXPECT_FALSE(eval_formula(build_nand_tree(4), Assignment(16)));
  EXPECT_THROW(eval_formula(build_nand_tree(2), Assignment::parse("110")), DomainError);
}

TEST(Eval, NegatedLeaves) {
  Formula f = parse_formula("~x1|x2");
  EXPECT_TRUE(eval_formula(f, Assignment::parse("00")));
  EXPECT_FALSE(eval_formula(f, Assignment::parse("10")));
}

TEST(NandTree, SmallDepths) {
  EXPECT_EQ(build_nand_tree(0), Formula::leaf());
  EXPECT_EQ(build_nand_tree(1), parse_formula("x1&x2"));
  EXPECT_EQ(build_nand_tree(2), parse_formula("(x1&x2)|(x3&x4)"));
}

TEST(NandTree, LeafCountAndRootGate) {
  for (std::size_t d = 0; d <= 8; ++d) {
    Formula f = build_nand_tree(d);
    EXPECT_EQ(f.num_variables(), std::size_t{1} << d);
    EXPECT_EQ(f.depth(), d);
    if (d > 0) EXPECT_EQ(f.kind() == GateKind::kOr, d % 2 == 0) << d;
  }
}

TEST(Dual, SwapsGates) {
  EXPECT_EQ(dual_formula(parse_formula("(x1&x2)|(x3&x4)")), parse_formula("(x1|x2)&(x3|x4)"));
  EXPECT_EQ(dual_formula(Formula::leaf()), Formula::leaf());
}

TEST(Dual, IsAnInvolutionAndComplementsTheFunction) {
  verify::Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    Formula f = verify::random_formula(rng, {12, 3, 0.3});
    Formula g = dual_formula(f);
    ASSERT_EQ(dual_formula(g), f);
    std::size_t n = f.num_variables();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      Assignment x = Assignment::from_index(code, n);
      ASSERT_EQ(eval_formula(g, x), !eval_formula(f, x.complement())) << render_formula(f) << " " << x.to_string();
    }
  }
}

TEST(Negate, MatchesLogicalNot) {
  verify::Rng rng(12);
  for (int i = 0; i < 30; ++i) {
    Formula f = verify::random_formula(rng, {8, 3, 0.3});
    Formula g = negate_formula(f);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << f.num_variables()); ++code) {
      Assignment x = Assignment::from_index(code, f.num_variables());
      ASSERT_NE(eval_formula(g, x), eval_formula(f, x));
    }
  }
}

TEST(RoundTrip, RenderThenParse) {
  verify::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Formula f = verify::random_formula(rng, {20, 4, 0.3});
    ASSERT_EQ(parse_formula(render_formula(f)), f) << render_formula(f);
  }
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(or_formula(2), and_formula(2)), build_nand_tree(2));
  Formula f = parse_formula("x1|(x2&~x3)");
  EXPECT_EQ(compose(f, Formula::leaf()), f);
  Formula flat = compose(and_formula(2), and_formula(2));
  EXPECT_EQ(flat, and_formula(4));
  for (std::uint64_t code = 0; code < 16; ++code) {
    Assignment x = Assignment::from_index(code, 4);
    EXPECT_EQ(eval_formula(flat, x), x.count_ones() == 4);
  }
}

TEST(Compose, ProductOfSizesAndAssociativity) {
  verify::Rng rng(14);
  for (int i = 0; i < 20; ++i) {
    Formula f = verify::random_formula(rng, {3, 3, 0.3});
    Formula g = verify::random_formula(rng, {3, 3, 0.3});
    Formula h = verify::random_formula(rng, {2, 2, 0.3});
    Formula left = compose(compose(f, g), h);
    Formula right = compose(f, compose(g, h));
    ASSERT_EQ(left.num_variables(), f.num_variables() * g.num_variables() * h.num_variables());
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << left.num_variables()); ++code) {
      Assignment x = Assignment::from_index(code, left.num_variables());
      ASSERT_EQ(eval_formula(left, x), eval_formula(right, x));
    }
  }
}

TEST(Promise, AndPromise) {
  PromiseDomain dom = PromiseDomain::and_promise(4, 2);
  Formula f = and_formula(4);
  EXPECT_TRUE(promise_membership(dom, f, Assignment::parse("1111")));
  EXPECT_FALSE(promise_membership(dom, f, Assignment::parse("1110")));
  EXPECT_TRUE(promise_membership(dom, f, Assignment::parse("1100")));
}

TEST(Promise, OrPromise) {
  PromiseDomain dom = PromiseDomain::or_promise(4, 2);
  Formula f = or_formula(4);
  EXPECT_TRUE(promise_membership(dom, f, Assignment::parse("0110")));
  EXPECT_TRUE(promise_membership(dom, f, Assignment::parse("0000")));
  EXPECT_FALSE(promise_membership(dom, f, Assignment::parse("0100")));
}

TEST(Promise, ComposedChecksEveryGate) {
  // OR over two AND_2 gates, each AND promised D_{2,1} (always true) and the
  // OR promised D'_{2,2}: both AND outputs equal.
  PromiseDomain dom = PromiseDomain::composed({{GateKind::kOr, 2, 2}, {GateKind::kAnd, 2, 1}});
  Formula f = dom.formula();
  EXPECT_EQ(f, build_nand_tree(2));
  EXPECT_TRUE(promise_membership(dom, f, Assignment::parse("1111")));
  EXPECT_TRUE(promise_membership(dom, f, Assignment::parse("1001")));
  EXPECT_FALSE(promise_membership(dom, f, Assignment::parse("1100")));
}

TEST(Promise, StructuralMismatchIsAnError) {
  PromiseDomain dom = PromiseDomain::and_promise(4, 2);
  EXPECT_THROW(promise_membership(dom, or_formula(4), Assignment(4)), DomainError);
  EXPECT_THROW(PromiseDomain::and_promise(2, 3), DomainError);
}

TEST(Assignment, TextAndIndex) {
  Assignment x = Assignment::parse("1100");
  EXPECT_EQ(x, Assignment::from_index(0b1100, 4));
  EXPECT_TRUE(x[0]);
  EXPECT_FALSE(x[3]);
  EXPECT_EQ(x.count_ones(), 2u);
  EXPECT_EQ(x.complement().to_string(), "0011");
  EXPECT_THROW(Assignment::parse("10a"), ParseError);
}

}  // namespace
}  // namespace ff
