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

#ifndef FF_NETWORK_HPP_
#define FF_NETWORK_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ff/extended.hpp"
#include "ff/formula.hpp"

namespace ff {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::string label;
  Rational weight = 1;
  // Negated leaves select their edge on x_i = 0 instead of x_i = 1.
  bool negated = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Series-parallel decomposition tree. Leaves name edges by label.
struct SpTree {
  enum class Kind { kEdge, kSeries, kParallel };
  Kind kind = Kind::kEdge;
  std::string label;
  std::vector<SpTree> children;

  static SpTree edge(std::string label);
  // Flattens same-kind children.
  static SpTree series(std::vector<SpTree> children);
  static SpTree parallel(std::vector<SpTree> children);

  friend bool operator==(const SpTree&, const SpTree&) = default;
};

// Two-terminal multigraph with positive rational edge weights
// (conductances) and unique edge labels.
class Network {
 public:
  Network(std::vector<std::string> vertices, std::size_t s, std::size_t t, std::vector<Edge> edges);

  // The network s --label-- t.
  static Network single_edge(std::string label, Rational weight = 1, bool negated = false);

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t s() const { return s_; }
  std::size_t t() const { return t_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_edge(std::string_view label) const;

  // Present when the network is known to be series-parallel.
  const std::optional<SpTree>& sp_tree() const { return sp_tree_; }
  void set_sp_tree(SpTree tree);
  // Present when the network was built from a formula.
  const std::optional<Formula>& formula() const { return formula_; }
  void set_formula(Formula f) { formula_ = std::move(f); }

  std::vector<Rational> weights() const;
  Network with_weights(std::span<const Rational> weights) const;
  Network with_unit_weights() const;
  Network renamed_terminals(const std::string& s_name, const std::string& t_name) const;

  // Graph equality: vertices, terminals and edges. Structure tags are
  // derived data and ignored.
  friend bool operator==(const Network& a, const Network& b) {
    return a.vertices_ == b.vertices_ && a.s_ == b.s_ && a.t_ == b.t_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::size_t s_;
  std::size_t t_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> edge_index_;
  std::optional<SpTree> sp_tree_;
  std::optional<Formula> formula_;
};

enum class Composition { kSeries, kParallel };

// Series: t of part i is glued to s of part i+1. Parallel: all s's and all
// t's are glued. Interior vertices of part i are renamed "(i,v)" and series
// junctions are "s_2".."s_l", so results are reproducible byte for byte.
Network compose_networks(Composition mode, const std::vector<Network>& parts);

// G_phi: a leaf is one s-t edge labelled "x<i>", AND composes its children
// in series and OR in parallel. `weights` is indexed by variable (x1 first)
// and defaults to all ones. Edges come out in variable order.
Network formula_graph(const Formula& f, std::span<const Rational> weights = {});

// Structural dual of a series-parallel network: series and parallel are
// swapped, each edge keeps its label and gets weight 1/c, and the terminals
// are named s' and t'.
Network dual_network(const Network& net);
Network dual_network(const Formula& f, std::span<const Rational> weights = {});

// Rebuilds a network from a decomposition tree. `lookup` gives each label's
// weight and negation flag.
Network network_from_sp_tree(const SpTree& tree, const std::map<std::string, Edge>& edge_data);

enum class Polarity { kPrimal, kDual };

struct SubgraphSelector {
  Assignment x;  // one bit per edge, in edge order
  Polarity polarity = Polarity::kPrimal;
};

// Whether edge `index` is kept under the selector.
bool edge_selected(const Network& net, const SubgraphSelector& sel, std::size_t index);

// Edge-induced subgraph. All vertices (and structure tags) are retained.
Network subgraph(const Network& net, const SubgraphSelector& sel);

// True if s and t are joined by kept edges.
bool terminals_connected(const Network& net);

// Tries to recover a series-parallel decomposition by repeated series and
// parallel reductions. Returns nullopt for non-series-parallel graphs.
std::optional<SpTree> recognize_series_parallel(const Network& net);

enum class GraphFormat { kDot, kJson };

std::string export_network(const Network& net, GraphFormat format);
// Parses the JSON format; attaches a decomposition tree when the graph is
// series-parallel.
Network import_network(std::string_view json_text);

}  // namespace ff

#endif  // FF_NETWORK_HPP_
