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

#include <algorithm>

#include "ff/electrical.hpp"
#include "ff/error.hpp"
#include "ff/network.hpp"
#include "ff/verify/generators.hpp"

namespace ff {
namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

Network without_tree(const Network& g) { return Network(g.vertices(), g.s(), g.t(), g.edges()); }

TEST(FormulaGraph, SingleEdge) {
  Network g = formula_graph(Formula::leaf());
  EXPECT_EQ(g.vertices(), (std::vector<std::string>{"s", "t"}));
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edges()[0].label, "x1");
  EXPECT_EQ(g.edges()[0].u, g.s());
  EXPECT_EQ(g.edges()[0].v, g.t());
}

TEST(FormulaGraph, AndIsAPath) {
  Network g = formula_graph(and_formula(5));
  EXPECT_EQ(g.num_edges(), 5u);
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(shortest_path_length(g), 5u);
  EXPECT_EQ(longest_self_avoiding_path(g), 5u);
}

TEST(FormulaGraph, NandTwoIsTwoPathsInParallel) {
  Network g = formula_graph(build_nand_tree(2));
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(shortest_path_length(g), 2u);
}

TEST(FormulaGraph, IsTaggedAndSeriesParallel) {
  Formula f = parse_formula("x1|(x2&(x3|x4))");
  Network g = formula_graph(f);
  ASSERT_TRUE(g.formula().has_value());
  EXPECT_EQ(*g.formula(), f);
  EXPECT_TRUE(g.sp_tree().has_value());
  EXPECT_TRUE(recognize_series_parallel(without_tree(g)).has_value());
}

TEST(Compose, SeriesAndParallelOfSingleEdges) {
  Network a = Network::single_edge("a");
  Network b = Network::single_edge("b");
  Network path = compose_networks(Composition::kSeries, {a, b});
  EXPECT_EQ(path.num_vertices(), 3u);
  EXPECT_EQ(path.num_edges(), 2u);
  EXPECT_EQ(shortest_path_length(path), 2u);
  std::vector<Network> edges;
  for (int i = 0; i < 5; ++i) edges.push_back(Network::single_edge("e" + std::to_string(i)));
  Network multi = compose_networks(Composition::kParallel, edges);
  EXPECT_EQ(multi.num_vertices(), 2u);
  EXPECT_EQ(multi.num_edges(), 5u);
}

TEST(Compose, ThreeSubformulaGraphsInSeriesAndParallel) {
  // x1&x2, x3|(x4&x5) and x6, built by hand with disjoint labels.
  Network p1({"s", "t", "m"}, 0, 1, {{0, 2, "x1"}, {2, 1, "x2"}});
  Network p2({"s", "t", "m"}, 0, 1, {{0, 1, "x3"}, {0, 2, "x4"}, {2, 1, "x5"}});
  Network p3 = Network::single_edge("x6");
  Network series = compose_networks(Composition::kSeries, {p1, p2, p3});
  EXPECT_EQ(series.num_vertices(), 6u);
  EXPECT_EQ(series.num_edges(), 6u);
  Network whole = formula_graph(parse_formula("(x1&x2)&(x3|(x4&x5))&x6"));
  EXPECT_EQ(whole.num_vertices(), series.num_vertices());
  EXPECT_EQ(whole.num_edges(), series.num_edges());
  Network parallel = compose_networks(Composition::kParallel, {p1, p2, p3});
  EXPECT_EQ(parallel.num_vertices(), 4u);
  EXPECT_EQ(parallel.num_edges(), 6u);
}

TEST(Compose, SeriesJunctionsFollowPartTagging) {
  Network g = formula_graph(and_formula(3));
  EXPECT_TRUE(g.find_vertex("s_2").has_value());
  EXPECT_TRUE(g.find_vertex("s_3").has_value());
  Network h = formula_graph(build_nand_tree(2));
  EXPECT_TRUE(h.find_vertex("(1,s_2)").has_value());
  EXPECT_TRUE(h.find_vertex("(2,s_2)").has_value());
}

TEST(Compose, RejectsLabelCollisionsAndSingleParts) {
  Network a = Network::single_edge("a");
  EXPECT_THROW(compose_networks(Composition::kSeries, {a, a}), DomainError);
  EXPECT_THROW(compose_networks(Composition::kParallel, {a}), DomainError);
}

TEST(NetworkInvariants, RejectsBadEdges) {
  EXPECT_THROW(Network({"s", "t"}, 0, 0, {}), DomainError);
  EXPECT_THROW(Network({"s", "t"}, 0, 1, {{0, 0, "loop"}}), DomainError);
  EXPECT_THROW(Network({"s", "t"}, 0, 1, {{0, 1, "a", Rational(0)}}), DomainError);
  EXPECT_THROW(Network({"s", "t"}, 0, 1, {{0, 1, "a"}, {0, 1, "a"}}), DomainError);
  EXPECT_NO_THROW(Network({"s", "t"}, 0, 1, {{0, 1, "a"}, {0, 1, "b"}}));
}

TEST(Dual, PathBecomesParallelEdges) {
  Network d = dual_network(and_formula(4));
  EXPECT_EQ(d.vertices()[d.s()], "s'");
  EXPECT_EQ(d.vertices()[d.t()], "t'");
  EXPECT_EQ(d.num_vertices(), 2u);
  EXPECT_EQ(d.num_edges(), 4u);
}

TEST(Dual, ReciprocalWeights) {
  std::vector<Rational> w{Rational(4)};
  Network d = dual_network(Formula::leaf(), w);
  ASSERT_EQ(d.num_edges(), 1u);
  EXPECT_EQ(d.edges()[0].weight, Rational(1, 4));
}

TEST(Dual, NandTwoBecomesSeriesOfParallelPairs) {
  Network d = dual_network(build_nand_tree(2));
  Network expected = formula_graph(parse_formula("(x1|x2)&(x3|x4)")).renamed_terminals("s'", "t'");
  EXPECT_EQ(d, expected);
}

TEST(Dual, DualOfDualFormulaRestoresWeights) {
  verify::Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    Formula f = verify::random_formula(rng, {10, 3, 0.0});
    std::vector<Rational> c;
    for (std::size_t k = 0; k < f.num_variables(); ++k) c.push_back(verify::random_weight(rng));
    std::vector<Rational> inverse;
    for (const auto& w : c) inverse.push_back(1 / w);
    Network twice = dual_network(dual_formula(f), inverse);
    Network original = formula_graph(f, c).renamed_terminals("s'", "t'");
    EXPECT_EQ(twice, original) << render_formula(f);
  }
}

TEST(Dual, SameEdgeCountAndOrder) {
  verify::Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    Formula f = verify::random_formula(rng, {12, 4, 0.2});
    Network g = formula_graph(f);
    Network d = dual_network(g);
    ASSERT_EQ(g.num_edges(), d.num_edges());
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
      EXPECT_EQ(g.edges()[k].label, d.edges()[k].label);
      EXPECT_EQ(g.edges()[k].negated, d.edges()[k].negated);
    }
  }
}

TEST(Dual, ChildDualsComposeTheOtherWay) {
  // OR-rooted: the dual is the series composition of the children's duals;
  // AND-rooted: the parallel composition.
  for (const char* text : {"(x1&x2)|x3|(x4&(x5|x6))", "(x1|x2)&x3&(x4|(x5&x6))"}) {
    Formula f = parse_formula(text);
    std::vector<Network> parts;
    for (const auto& child : f.children()) parts.push_back(dual_network(formula_graph(child)));
    Composition mode = f.kind() == GateKind::kOr ? Composition::kSeries : Composition::kParallel;
    Network composed = compose_networks(mode, parts);
    Network d = dual_network(f);
    ASSERT_EQ(composed.num_vertices(), d.num_vertices()) << text;
    ASSERT_EQ(composed.num_edges(), d.num_edges()) << text;
    // Same resistance for every input; edge order differs only by label.
    for (std::uint64_t code = 0; code < 64; ++code) {
      Assignment x = Assignment::from_index(code, 6);
      Assignment y(6);
      for (std::size_t k = 0; k < 6; ++k) {
        std::size_t var = std::stoul(composed.edges()[k].label.substr(1)) - 1;
        y.set(k, x[var]);
      }
      auto r1 = effective_resistance<Rational>(subgraph(d, {x, Polarity::kDual}));
      auto r2 = effective_resistance<Rational>(subgraph(composed, {y, Polarity::kDual}));
      ASSERT_EQ(r1, r2) << text << " " << x.to_string();
    }
  }
}

TEST(Subgraph, LineGraph) {
  Network line = formula_graph(and_formula(4));
  EXPECT_TRUE(terminals_connected(subgraph(line, {Assignment::parse("1111")})));
  Network broken = subgraph(line, {Assignment::parse("1101")});
  EXPECT_FALSE(terminals_connected(broken));
  EXPECT_EQ(broken.num_vertices(), line.num_vertices());
  EXPECT_EQ(broken.num_edges(), 3u);
}

TEST(Subgraph, DualPolarityKeepsZeroBits) {
  Network d = dual_network(build_nand_tree(2));
  Network kept = subgraph(d, {Assignment::parse("1100"), Polarity::kDual});
  std::vector<std::string> labels;
  for (const auto& e : kept.edges()) labels.push_back(e.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"x3", "x4"}));
}

TEST(Subgraph, NegatedEdgesUseTheComplementedBit) {
  Network g = formula_graph(parse_formula("~x1&x2"));
  EXPECT_TRUE(terminals_connected(subgraph(g, {Assignment::parse("01")})));
  EXPECT_FALSE(terminals_connected(subgraph(g, {Assignment::parse("11")})));
  EXPECT_THROW(subgraph(g, {Assignment::parse("1")}), DomainError);
}

TEST(Connectivity, MatchesFormulaValueOnBothSides) {
  verify::Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    Formula f = verify::random_formula(rng, {12, 4, 0.25});
    Network g = formula_graph(f);
    Network d = dual_network(g);
    std::size_t n = f.num_variables();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      Assignment x = Assignment::from_index(code, n);
      bool value = eval_formula(f, x);
      bool primal = terminals_connected(subgraph(g, {x, Polarity::kPrimal}));
      bool dual = terminals_connected(subgraph(d, {x, Polarity::kDual}));
      ASSERT_EQ(primal, value) << render_formula(f) << " " << x.to_string();
      ASSERT_NE(primal, dual) << render_formula(f) << " " << x.to_string();
    }
  }
}

TEST(Export, SingleEdgeJson) {
  std::string text = export_network(Network::single_edge("x1", Rational(3, 2)), GraphFormat::kJson);
  EXPECT_EQ(count(text, "\"label\""), 1u);
  EXPECT_NE(text.find("\"weight\": \"3/2\""), std::string::npos);
  EXPECT_NE(text.find("\"s\": \"s\""), std::string::npos);
}

TEST(Export, LineDot) {
  std::string text = export_network(formula_graph(and_formula(3)), GraphFormat::kDot);
  EXPECT_EQ(count(text, " -- "), 3u);
  EXPECT_EQ(count(text, "c=\"1\""), 3u);
  // Four node statements, one per vertex.
  EXPECT_EQ(count(text, "\";\n"), 4u);
}

TEST(Export, JsonRoundTrip) {
  verify::Rng rng(24);
  for (int i = 0; i < 50; ++i) {
    Network net = verify::random_sp_network(rng, 12);
    Network back = import_network(export_network(net, GraphFormat::kJson));
    EXPECT_EQ(back, net);
    EXPECT_TRUE(back.sp_tree().has_value());
  }
}

TEST(Import, RejectsMalformedInput) {
  EXPECT_THROW(import_network("{"), ParseError);
  EXPECT_THROW(import_network(R"({"s":"s","t":"t","vertices":["s","t"],"edges":[{"u":"s","v":"q","label":"a","weight":"1"}]})"),
               DomainError);
}

}  // namespace
}  // namespace ff
