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

#include <cmath>

#include "ff/electrical.hpp"
#include "ff/error.hpp"
#include "ff/spanprog.hpp"
#include "ff/sweep.hpp"
#include "ff/verify/generators.hpp"
#include "ff/verify/oracles.hpp"

namespace ff {
namespace {

ExtRational ext(long p, unsigned long q = 1) { return ExtRational(make_rational(p, q)); }

TEST(SpanProgram, SingleUnitEdgeMatrix) {
  SpanProgram p(Network::single_edge("x1"));
  Eigen::MatrixXd expected(2, 2);
  expected << 1, -1, -1, 1;
  EXPECT_TRUE(p.matrix().isApprox(expected));
  EXPECT_EQ(p.target(), Eigen::Vector2d(1, -1));
}

TEST(SpanProgram, ReversedColumnsAreNegated) {
  verify::Rng rng(41);
  Network net = verify::random_sp_network(rng, 10);
  SpanProgram p(net);
  for (std::size_t k = 0; k < net.num_edges(); ++k) {
    auto fwd = p.matrix().col(static_cast<Eigen::Index>(SpanProgram::column(k, true)));
    auto bwd = p.matrix().col(static_cast<Eigen::Index>(SpanProgram::column(k, false)));
    EXPECT_TRUE(fwd.isApprox(-bwd));
  }
}

TEST(SpanProgram, GramMatrixIsTwiceTheLaplacian) {
  verify::Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    SpanProgram p(verify::random_sp_network(rng, 12));
    Eigen::MatrixXd gram = p.matrix() * p.matrix().transpose();
    EXPECT_TRUE(gram.isApprox(2 * p.laplacian(), 1e-12));
  }
}

TEST(SpanProgram, TargetInColumnSpanIffConnected) {
  verify::Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    Network net = verify::random_sp_network(rng, 8);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << net.num_edges()); ++code) {
      Assignment x = Assignment::from_index(code, net.num_edges());
      bool connected = terminals_connected(subgraph(net, {x}));
      EXPECT_EQ(verify::least_squares_positive_size(net, x).has_value(), connected);
    }
  }
}

TEST(PositiveWitness, Examples) {
  SpanProgram edge(Network::single_edge("x1"));
  EXPECT_EQ(positive_witness_size(edge, Assignment::parse("1")), ext(1, 2));
  SpanProgram or2(formula_graph(or_formula(2)));
  EXPECT_EQ(positive_witness_size(or2, Assignment::parse("11")), ext(1, 4));
  EXPECT_TRUE(positive_witness_size(or2, Assignment::parse("00")).is_infinite());
  WitnessReport r = positive_witness(or2, Assignment::parse("00"));
  EXPECT_TRUE(r.size.is_infinite());
  EXPECT_TRUE(r.witness.empty());
}

TEST(PositiveWitness, ObjectIsFeasibleAndHasTheReportedSize) {
  SpanProgram p(formula_graph(parse_formula("(x1&x2)|(x3&(x4|x5))")));
  WitnessReport r = positive_witness(p, Assignment::parse("11111"));
  ASSERT_TRUE(r.exact_size.has_value());
  Eigen::Map<const Eigen::VectorXd> w(r.witness.data(), static_cast<Eigen::Index>(r.witness.size()));
  EXPECT_NEAR((p.matrix() * w - p.target()).norm(), 0.0, 1e-12);
  EXPECT_NEAR(w.squaredNorm(), to_double(*r.exact_size), 1e-12);
  EXPECT_EQ(r.error, 0.0);
}

TEST(PositiveWitness, MatchesGenericMinimumNormSolve) {
  verify::Rng rng(44);
  for (int i = 0; i < 30; ++i) {
    Network net = verify::random_sp_network(rng, 10);
    SpanProgram p(net);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << net.num_edges()); code += 3) {
      Assignment x = Assignment::from_index(code, net.num_edges());
      ExtRational exact = positive_witness_size(p, x);
      auto lstsq = verify::least_squares_positive_size(net, x);
      ASSERT_EQ(lstsq.has_value(), exact.is_finite());
      if (lstsq) ASSERT_NEAR(*lstsq, to_double(exact), 1e-9 * std::max(1.0, *lstsq));
    }
  }
}

TEST(PositiveWitness, InducedFlowSatisfiesTheAxiomsAndHasNoCycles) {
  verify::Rng rng(45);
  for (int i = 0; i < 30; ++i) {
    Network net = verify::random_sp_network(rng, 10);
    SpanProgram p(net);
    Assignment all(net.num_edges(), true);
    WitnessReport r = positive_witness(p, all);
    // theta = sqrt(c) (<w|u,v> - <w|v,u>)
    std::vector<double> theta;
    for (std::size_t k = 0; k < net.num_edges(); ++k) {
      double root = std::sqrt(net.edges()[k].weight.get_d());
      theta.push_back(root * (r.witness[SpanProgram::column(k, true)] - r.witness[SpanProgram::column(k, false)]));
    }
    FlowAssignment<double> flow(theta);
    EXPECT_TRUE(check_flow_axioms(net, flow).ok());
    for (const auto& term : decompose_flow(net, flow)) EXPECT_FALSE(term.is_cycle);
  }
}

TEST(NegativeWitness, Examples) {
  SpanProgram edge(Network::single_edge("x1"));
  EXPECT_EQ(negative_witness_size(edge, Assignment::parse("0")), ext(2));
  SpanProgram and2(formula_graph(and_formula(2)));
  EXPECT_EQ(negative_witness_size(and2, Assignment::parse("00")), ext(1));
  EXPECT_TRUE(negative_witness_size(and2, Assignment::parse("11")).is_infinite());
}

TEST(NegativeWitness, ObjectAnnihilatesAvailableColumns) {
  SpanProgram p(formula_graph(parse_formula("(x1|x2)&(x3|(x4&x5))")));
  Assignment x = Assignment::parse("00110");
  WitnessReport r = negative_witness(p, x);
  ASSERT_TRUE(r.size.is_finite());
  Eigen::Map<const Eigen::VectorXd> omega(r.witness.data(), static_cast<Eigen::Index>(r.witness.size()));
  EXPECT_NEAR(omega.dot(p.target()), 1.0, 1e-12);
  Eigen::VectorXd row = p.matrix().transpose() * omega;
  EXPECT_NEAR(row.cwiseProduct(p.available(x)).norm(), 0.0, 1e-12);
  EXPECT_NEAR(row.squaredNorm(), to_double(r.size), 1e-9);
}

TEST(NegativeWitness, ContractionRouteWithoutDecomposition) {
  verify::Rng rng(46);
  for (int i = 0; i < 20; ++i) {
    Network net = verify::random_sp_network(rng, 9);
    SpanProgram with_tree(net);
    SpanProgram plain(Network(net.vertices(), net.s(), net.t(), net.edges()));
    ASSERT_EQ(plain.dual(), nullptr);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << net.num_edges()); ++code) {
      Assignment x = Assignment::from_index(code, net.num_edges());
      ASSERT_EQ(negative_witness_size(plain, x), negative_witness_size(with_tree, x));
      ASSERT_EQ(positive_witness_size(plain, x), positive_witness_size(with_tree, x));
    }
  }
}

TEST(ApproxWitness, ReducesToExactOnTheMatchingSide) {
  SpanProgram p(formula_graph(build_nand_tree(2)));
  for (std::uint64_t code = 0; code < 16; ++code) {
    Assignment x = Assignment::from_index(code, 4);
    WitnessReport pos = approx_positive_witness(p, x);
    WitnessReport neg = approx_negative_witness(p, x);
    if (eval_formula(build_nand_tree(2), x)) {
      EXPECT_NEAR(pos.error, 0.0, 1e-9);
      EXPECT_NEAR(to_double(pos.size), to_double(positive_witness_size(p, x)), 1e-9);
    } else {
      EXPECT_NEAR(neg.error, 0.0, 1e-9);
      EXPECT_NEAR(to_double(neg.size), to_double(negative_witness_size(p, x)), 1e-9);
    }
  }
}

TEST(ApproxWitness, SingleEdgeClosedForms) {
  SpanProgram p(Network::single_edge("x1"));
  WitnessReport pos = approx_positive_witness(p, Assignment::parse("0"));
  EXPECT_NEAR(pos.error, 0.5, 1e-12);
  EXPECT_NEAR(to_double(pos.size), 0.5, 1e-12);
  // omega = (1/2, -1/2) is forced up to a constant; both columns see +-1.
  WitnessReport neg = approx_negative_witness(p, Assignment::parse("1"));
  EXPECT_NEAR(neg.error, 2.0, 1e-12);
  EXPECT_NEAR(to_double(neg.size), 2.0, 1e-12);
}

TEST(ApproxWitness, OrGateNegativeBound) {
  for (std::size_t l = 2; l <= 4; ++l) {
    Network net = formula_graph(or_formula(l));
    SpanProgram p(net);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << l); ++code) {
      Assignment x = Assignment::from_index(code, l);
      WitnessReport neg = approx_negative_witness(p, x);
      ASSERT_TRUE(neg.bound.has_value());
      EXPECT_NEAR(*neg.bound, 2.0 * static_cast<double>(l), 1e-12);
      EXPECT_TRUE(neg.bound_holds);
      verify::QpWitness qp = verify::qp_negative_witness(net, x);
      EXPECT_NEAR(neg.error, qp.error, 1e-7);
      EXPECT_NEAR(to_double(neg.size), qp.size, 1e-7);
    }
  }
}

TEST(ApproxWitness, PositiveNeedsAConnectedHost) {
  Network broken({"s", "t", "m"}, 0, 1, {{0, 2, "a"}});
  EXPECT_THROW(approx_positive_witness(SpanProgram(broken), Assignment::parse("1")), DomainError);
}

TEST(Extrema, SingleEdge) {
  SpanProgram p(Network::single_edge("x1"));
  WitnessExtrema e = witness_extrema(p, full_assignments(1), Formula::leaf());
  EXPECT_EQ(*e.w_plus, ext(1, 2));
  EXPECT_EQ(*e.w_minus, ext(2));
  EXPECT_NEAR(*e.bound(), 1.0, 1e-12);
}

TEST(Extrema, LineGraphUnderThePromise) {
  for (auto [n, h] : {std::pair<std::size_t, std::size_t>{4, 2}, {9, 3}, {6, 1}}) {
    PromiseDomain dom = PromiseDomain::and_promise(n, h);
    Formula f = and_formula(n);
    WitnessExtrema e = witness_extrema(SpanProgram(formula_graph(f)), promise_assignments(dom), f);
    EXPECT_EQ(*e.w_plus, ext(static_cast<long>(n), 2));
    EXPECT_EQ(*e.w_minus, ext(2, h));
  }
}

TEST(Extrema, NandTwoMatchesResistanceMaxima) {
  Formula f = build_nand_tree(2);
  WitnessExtrema e = witness_extrema(SpanProgram(formula_graph(f)), full_assignments(4), f, true);
  EXPECT_EQ(*e.w_plus, ext(1));   // R = 2 on 1100
  EXPECT_EQ(*e.w_minus, ext(4));  // R' = 2 on 1010
  EXPECT_EQ(e.ones + e.zeros, 16u);
  ASSERT_TRUE(e.approx_plus && e.approx_minus);
  FormulaExtrema fe = formula_extrema(f, std::vector<Rational>(4, Rational(1)));
  EXPECT_EQ(ExtRational(fe.w_plus), *e.w_plus);
  EXPECT_EQ(ExtRational(fe.w_minus), *e.w_minus);
}

TEST(Extrema, RecursionMatchesEnumeration) {
  verify::Rng rng(47);
  for (int i = 0; i < 40; ++i) {
    Formula f = verify::random_formula(rng, {10, 4, 0.2});
    std::vector<Rational> c;
    for (std::size_t k = 0; k < f.num_variables(); ++k) c.push_back(verify::random_weight(rng));
    WitnessExtrema e = witness_extrema(SpanProgram(formula_graph(f, c)), full_assignments(f.num_variables()), f);
    FormulaExtrema fe = formula_extrema(f, c);
    EXPECT_EQ(ExtRational(fe.w_plus), *e.w_plus) << render_formula(f);
    EXPECT_EQ(ExtRational(fe.w_minus), *e.w_minus) << render_formula(f);
  }
}

TEST(OptimalWeights, Leaf) {
  WeightCertificate cert = optimal_weights(Formula::leaf());
  EXPECT_EQ(cert.weights, std::vector<Rational>{Rational(1)});
  EXPECT_EQ(cert.bound, 1);
  EXPECT_EQ(cert.w_plus * cert.w_minus, 1);
}

TEST(OptimalWeights, NandTreesAreCertified) {
  for (std::size_t d : {2, 4}) {
    Formula f = build_nand_tree(d);
    WeightCertificate cert = optimal_weights(f);
    EXPECT_EQ(cert.bound, Rational(1UL << d));
    WitnessExtrema e = witness_extrema(SpanProgram(formula_graph(f, cert.weights)),
                                       full_assignments(f.num_variables()), f);
    EXPECT_LE(e.w_plus->value() * e.w_minus->value(), cert.bound);
    EXPECT_FALSE(cert.factors.empty());
  }
}

TEST(OptimalWeights, CertificateBoundIsTheVariableCount) {
  verify::Rng rng(48);
  for (int i = 0; i < 40; ++i) {
    Formula f = verify::random_formula(rng, {12, 4, 0.2});
    WeightCertificate cert = optimal_weights(f);
    EXPECT_EQ(cert.bound, Rational(static_cast<unsigned long>(f.num_variables())));
    EXPECT_LE(cert.w_plus * cert.w_minus, cert.bound);
    FormulaExtrema fe = formula_extrema(f, cert.weights);
    EXPECT_EQ(fe.w_plus, cert.w_plus);
    EXPECT_EQ(fe.w_minus, cert.w_minus);
  }
}

}  // namespace
}  // namespace ff
