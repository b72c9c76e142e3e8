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

#include "ff/electrical.hpp"
#include "ff/error.hpp"
#include "ff/network.hpp"
#include "ff/verify/generators.hpp"
#include "ff/verify/oracles.hpp"

namespace ff {
namespace {

constexpr ResistanceBackend kSp = ResistanceBackend::kSeriesParallel;
constexpr ResistanceBackend kLap = ResistanceBackend::kLaplacian;

Network parallel_pair(Rational a, Rational b) {
  return Network({"s", "t"}, 0, 1, {{0, 1, "a", a}, {0, 1, "b", b}});
}

TEST(Extended, Conventions) {
  ExtRational inf = ExtRational::infinity();
  EXPECT_EQ(ExtRational(Rational(0)).reciprocal(), inf);
  EXPECT_EQ(inf.reciprocal(), ExtRational(Rational(0)));
  EXPECT_EQ(inf + ExtRational(Rational(3)), inf);
  EXPECT_EQ(parallel_sum(ExtRational(Rational(2)), inf), ExtRational(Rational(2)));
  EXPECT_EQ(series_sum(ExtRational(Rational(2)), ExtRational(Rational(1, 2))), ExtRational(Rational(5, 2)));
  EXPECT_TRUE(ExtRational(Rational(100)) < inf);
  EXPECT_EQ(to_string(inf), "inf");
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(format_rational(parse_rational("6/4")), "3/2");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_EQ(make_rational(12, 3), Rational(4));
}

TEST(Resistance, PathOfUnitEdges) {
  for (std::size_t n = 1; n <= 6; ++n) {
    Network g = formula_graph(and_formula(n));
    EXPECT_EQ(effective_resistance<Rational>(g, kSp), ExtRational(Rational(static_cast<long>(n))));
    EXPECT_EQ(effective_resistance<Rational>(g, kLap), ExtRational(Rational(static_cast<long>(n))));
  }
}

TEST(Resistance, ParallelUnitEdges) {
  for (std::size_t n = 1; n <= 6; ++n) {
    Network g = formula_graph(or_formula(n));
    ExtRational expected(Rational(1, static_cast<unsigned long>(n)));
    EXPECT_EQ(effective_resistance<Rational>(g, kSp), expected);
    EXPECT_EQ(effective_resistance<Rational>(g, kLap), expected);
  }
}

TEST(Resistance, DisconnectedIsInfinite) {
  Network g = subgraph(formula_graph(and_formula(3)), {Assignment::parse("101")});
  EXPECT_TRUE(effective_resistance<Rational>(g, kLap).is_infinite());
  EXPECT_TRUE(effective_resistance<double>(g, kLap).is_infinite());
}

TEST(Resistance, SeriesParallelBackendNeedsATree) {
  Network g({"s", "t"}, 0, 1, {{0, 1, "a"}});
  EXPECT_THROW(effective_resistance<Rational>(g, kSp), DomainError);
}

TEST(Resistance, BackendsAgreeOnRandomFormulaGraphs) {
  verify::Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    Network net = verify::random_sp_network(rng, 14);
    SpEvaluator eval(net);
    for (int j = 0; j < 20; ++j) {
      Assignment x(net.num_edges());
      for (std::size_t k = 0; k < x.size(); ++k) x.set(k, (rng() & 3U) != 0);
      Network g = subgraph(net, {x});
      ExtRational sp = eval.resistance<Rational>(SubgraphSelector{x});
      ExtRational lap = effective_resistance<Rational>(g, kLap);
      ExtReal lapf = effective_resistance<double>(g, kLap);
      ASSERT_EQ(sp, lap);
      if (sp.is_finite()) {
        double exact = sp.value().get_d();
        ASSERT_NEAR(lapf.value(), exact, 1e-9 * std::max(1.0, exact));
      } else {
        ASSERT_TRUE(lapf.is_infinite());
      }
    }
  }
}

TEST(Resistance, ScalingWeights) {
  verify::Rng rng(32);
  for (int i = 0; i < 30; ++i) {
    Network net = verify::random_sp_network(rng, 10);
    Rational scale = verify::random_weight(rng);
    std::vector<Rational> scaled;
    for (const auto& w : net.weights()) scaled.push_back(w / scale);
    ExtRational r = effective_resistance<Rational>(net, kSp);
    EXPECT_EQ(effective_resistance<Rational>(net.with_weights(scaled), kSp), r * scale);
  }
}

TEST(Resistance, SeriesAndParallelRulesAreExact) {
  verify::Rng rng(33);
  for (int i = 0; i < 30; ++i) {
    Network a = verify::random_sp_network(rng, 5);
    Network b = verify::random_sp_network(rng, 5);
    std::vector<Edge> relabelled;
    for (auto e : b.edges()) {
      e.label = "b" + e.label;
      relabelled.push_back(e);
    }
    Network b2(b.vertices(), b.s(), b.t(), relabelled);
    ExtRational ra = effective_resistance<Rational>(a, kLap);
    ExtRational rb = effective_resistance<Rational>(b2, kLap);
    EXPECT_EQ(effective_resistance<Rational>(compose_networks(Composition::kSeries, {a, b2}), kLap), ra + rb);
    EXPECT_EQ(effective_resistance<Rational>(compose_networks(Composition::kParallel, {a, b2}), kLap),
              parallel_sum(ra, rb));
  }
}

TEST(Flow, Path) {
  Network g = formula_graph(and_formula(3));
  auto best = optimal_flow<Rational>(g);
  for (const auto& v : best.flow.forward_values()) EXPECT_EQ(v, 1);
  EXPECT_EQ(best.energy, 3);
}

TEST(Flow, TwoParallelUnitEdges) {
  auto best = optimal_flow<Rational>(parallel_pair(1, 1));
  EXPECT_EQ(best.flow.forward_values(), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(best.energy, Rational(1, 2));
}

TEST(Flow, UnequalParallelEdges) {
  auto best = optimal_flow<Rational>(parallel_pair(2, 1));
  EXPECT_EQ(best.flow.forward_values(), (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ(best.energy, Rational(1, 3));
  // Energy of theta and 1-theta on the two edges, minimised over a grid.
  double best_energy = 1e9;
  for (int i = 0; i <= 3000; ++i) {
    double theta = i / 3000.0;
    best_energy = std::min(best_energy, theta * theta / 2 + (1 - theta) * (1 - theta));
  }
  EXPECT_NEAR(best_energy, 1.0 / 3, 1e-6);
}

TEST(Flow, AntisymmetricLookup) {
  Network g = formula_graph(and_formula(2));
  auto best = optimal_flow<Rational>(g);
  const Edge& e = g.edges()[0];
  EXPECT_EQ(best.flow.at(g, e.u, e.v, e.label), 1);
  EXPECT_EQ(best.flow.at(g, e.v, e.u, e.label), -1);
}

TEST(Flow, DisconnectedIsAnError) {
  Network g = subgraph(formula_graph(and_formula(2)), {Assignment::parse("10")});
  EXPECT_THROW(optimal_flow<Rational>(g), DomainError);
}

TEST(Flow, EnergyEqualsResistance) {
  verify::Rng rng(34);
  for (int i = 0; i < 40; ++i) {
    Network net = verify::random_sp_network(rng, 10);
    auto best = optimal_flow<Rational>(net);
    EXPECT_EQ(best.energy, effective_resistance<Rational>(net, kSp).value());
    EXPECT_EQ(flow_energy(net, best.flow), best.energy);
    EXPECT_TRUE(check_flow_axioms(net, best.flow).ok());
    auto bestf = optimal_flow<double>(net);
    EXPECT_NEAR(bestf.energy, best.energy.get_d(), 1e-9 * std::max(1.0, best.energy.get_d()));
    EXPECT_TRUE(check_flow_axioms(net, bestf.flow).ok());
  }
}

TEST(Flow, AxiomCheckerCatchesViolations) {
  Network g = parallel_pair(1, 1);
  FlowAssignment<Rational> bad(std::vector<Rational>{Rational(1), Rational(1)});
  auto report = check_flow_axioms(g, bad);
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.max_violation, 1);
}

TEST(Decompose, SinglePath) {
  Network g = formula_graph(and_formula(3));
  auto terms = decompose_flow(g, optimal_flow<Rational>(g).flow);
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_FALSE(terms[0].is_cycle);
  EXPECT_EQ(terms[0].coefficient, 1);
  EXPECT_EQ(terms[0].edges.size(), 3u);
}

TEST(Decompose, HalfAndHalf) {
  Network g = parallel_pair(1, 1);
  auto terms = decompose_flow(g, optimal_flow<Rational>(g).flow);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].coefficient, Rational(1, 2));
  EXPECT_EQ(terms[1].coefficient, Rational(1, 2));
}

TEST(Decompose, InjectedCirculationShowsUpAsACycle) {
  // Two parallel edges carry 1/2 each; a unit circulation around the 2-edge
  // cycle they form gives 3/2 and -1/2.
  Network g = parallel_pair(1, 1);
  FlowAssignment<Rational> theta(std::vector<Rational>{Rational(3, 2), Rational(-1, 2)});
  ASSERT_TRUE(check_flow_axioms(g, theta).ok());
  auto terms = decompose_flow(g, theta);
  Rational path_sum = 0;
  std::size_t cycles = 0;
  for (const auto& t : terms) {
    if (t.is_cycle) ++cycles;
    else path_sum += t.coefficient;
  }
  EXPECT_EQ(path_sum, 1);
  EXPECT_GE(cycles, 1u);
  EXPECT_EQ(recompose_flow(g, terms), theta);
}

TEST(Decompose, RejectsInvalidFlows) {
  Network g = parallel_pair(1, 1);
  FlowAssignment<Rational> bad(std::vector<Rational>{Rational(1), Rational(1)});
  EXPECT_THROW(decompose_flow(g, bad), DomainError);
}

TEST(Decompose, OptimalFlowsHaveNoCycles) {
  verify::Rng rng(35);
  for (int i = 0; i < 40; ++i) {
    Network net = verify::random_sp_network(rng, 10);
    auto terms = decompose_flow(net, optimal_flow<Rational>(net).flow);
    for (const auto& t : terms) EXPECT_FALSE(t.is_cycle);
  }
}

TEST(Cut, LineGraphZeroInstances) {
  Network line = formula_graph(and_formula(5));
  for (std::uint64_t code = 0; code < 31; ++code) {
    Assignment x = Assignment::from_index(code, 5);
    EXPECT_EQ(cut_size(line, x, CutBackend::kMaxFlow), ExtCount(1));
    EXPECT_EQ(cut_size(line, x, CutBackend::kSeriesParallel), ExtCount(1));
  }
  EXPECT_TRUE(cut_size(line, Assignment::parse("11111")).is_infinite());
}

TEST(Cut, BackendsMatchEnumeration) {
  verify::Rng rng(36);
  for (int i = 0; i < 40; ++i) {
    Network net = verify::random_sp_network(rng, 9);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << net.num_edges()); ++code) {
      Assignment x = Assignment::from_index(code, net.num_edges());
      ExtCount brute = verify::brute_force_cut(net, x);
      ASSERT_EQ(cut_size(net, x, CutBackend::kMaxFlow), brute);
      ASSERT_EQ(cut_size(net, x, CutBackend::kSeriesParallel), brute);
    }
  }
}

TEST(Cut, EqualsShortestDualPathAndBoundsDualResistance) {
  verify::Rng rng(37);
  for (int i = 0; i < 30; ++i) {
    Formula f = verify::random_formula(rng, {9, 3, 0.0});
    Network g = formula_graph(f);
    Network d = dual_network(g);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << f.num_variables()); ++code) {
      Assignment x = Assignment::from_index(code, f.num_variables());
      if (eval_formula(f, x)) continue;
      ExtCount c = cut_size(g, x);
      Network dx = subgraph(d, {x, Polarity::kDual});
      ASSERT_EQ(ExtCount(*shortest_path_length(dx)), c);
      ExtRational rd = effective_resistance<Rational>(dx);
      ASSERT_LE(rd, ExtRational(Rational(static_cast<unsigned long>(c.value()))));
    }
  }
}

TEST(WitnessCut, SingleAbsentEdge) {
  CutAssignment k = witness_cut(Network::single_edge("x1"), Assignment::parse("0"));
  EXPECT_EQ(k.side, (std::vector<std::uint8_t>{1, 0}));
  EXPECT_EQ(k.crossing, 1u);
}

TEST(WitnessCut, LineGraphPutsThePrefixOnTheSourceSide) {
  Network line = formula_graph(and_formula(4));
  CutAssignment k = witness_cut(line, Assignment::parse("1101"));
  // Vertices along the path: s, s_2, s_3, s_4, t. Edge 3 (s_3 - s_4) is absent.
  for (const char* name : {"s", "s_2", "s_3"}) EXPECT_EQ(k.side[*line.find_vertex(name)], 1) << name;
  for (const char* name : {"s_4", "t"}) EXPECT_EQ(k.side[*line.find_vertex(name)], 0) << name;
  EXPECT_EQ(k.crossing, 1u);
}

TEST(WitnessCut, NandTwoAllZero) {
  Network g = formula_graph(build_nand_tree(2));
  Assignment x = Assignment::parse("0000");
  CutAssignment k = witness_cut(g, x);
  EXPECT_EQ(k.crossing, 2u);
  EXPECT_EQ(ExtCount(k.crossing), verify::brute_force_cut(g, x));
}

TEST(WitnessCut, IsValidAndMinimum) {
  verify::Rng rng(38);
  for (int i = 0; i < 30; ++i) {
    Network net = verify::random_sp_network(rng, 8);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << net.num_edges()); ++code) {
      Assignment x = Assignment::from_index(code, net.num_edges());
      ExtCount c = cut_size(net, x);
      if (c.is_infinite()) {
        EXPECT_THROW(witness_cut(net, x), DomainError);
        continue;
      }
      CutAssignment k = witness_cut(net, x);
      ASSERT_EQ(k.side[net.s()], 1);
      ASSERT_EQ(k.side[net.t()], 0);
      std::size_t crossing = 0;
      for (std::size_t e = 0; e < net.num_edges(); ++e) {
        const Edge& edge = net.edges()[e];
        if (k.side[edge.u] == k.side[edge.v]) continue;
        ++crossing;
        ASSERT_FALSE(edge_selected(net, {x}, e));
      }
      ASSERT_EQ(crossing, k.crossing);
      ASSERT_EQ(ExtCount(crossing), c);
    }
  }
}

TEST(LongestPath, Examples) {
  EXPECT_EQ(longest_self_avoiding_path(formula_graph(and_formula(6))), 6u);
  EXPECT_EQ(longest_self_avoiding_path(formula_graph(or_formula(6))), 1u);
  // AND of fan-in l at every AND level attains l^(and-depth).
  Formula f = compose(and_formula(3), compose(or_formula(2), and_formula(3)));
  EXPECT_EQ(longest_self_avoiding_path(formula_graph(f)), 9u);
  Network empty = subgraph(formula_graph(and_formula(2)), {Assignment::parse("00")});
  EXPECT_EQ(longest_self_avoiding_path(empty), 0u);
}

TEST(LongestPath, BudgetIsEnforced) {
  EXPECT_THROW(longest_self_avoiding_path(formula_graph(and_formula(25))), DomainError);
}

TEST(LongestPath, AgreesWithTheRecursion) {
  verify::Rng rng(39);
  for (int i = 0; i < 40; ++i) {
    Network net = verify::random_sp_network(rng, 14);
    EXPECT_EQ(longest_self_avoiding_path(net), SpEvaluator(net).longest_path());
  }
}

}  // namespace
}  // namespace ff
