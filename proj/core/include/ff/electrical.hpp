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

#ifndef FF_ELECTRICAL_HPP_
#define FF_ELECTRICAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ff/extended.hpp"
#include "ff/network.hpp"

namespace ff {

template <typename Scalar>
Scalar from_rational(const Rational& value);
template <>
inline Rational from_rational<Rational>(const Rational& value) {
  return value;
}
template <>
inline double from_rational<double>(const Rational& value) {
  return value.get_d();
}

enum class ResistanceBackend {
  kSeriesParallel,  // recursive series/parallel rules over the decomposition tree
  kLaplacian,       // grounded Laplacian solve on the component of s
};

// Effective resistance between the terminals; infinite when they are
// disconnected. Scalar is Rational (exact) or double.
template <typename Scalar>
Extended<Scalar> effective_resistance(const Network& net,
                                      ResistanceBackend backend = ResistanceBackend::kLaplacian);

// Precompiled decomposition tree for fast repeated evaluation of a host
// network under many assignments.
class SpEvaluator {
 public:
  explicit SpEvaluator(const Network& host);

  // Resistance of the subgraph picked out by `sel` (edges indexed as in
  // the host).
  template <typename Scalar>
  Extended<Scalar> resistance(const SubgraphSelector& sel) const;
  // Resistance with every host edge kept.
  template <typename Scalar>
  Extended<Scalar> resistance() const;

  // Cut size of the primal subgraph G(x): parallel parts add, series parts
  // take the minimum, a kept edge is infinite and a missing one costs 1.
  ExtCount cut(const Assignment& x) const;

  // Longest s-t path length (series adds, parallel takes the maximum).
  std::size_t longest_path() const;

 private:
  struct Node {
    SpTree::Kind kind;
    std::optional<std::size_t> edge;  // host edge index for leaves
    std::vector<std::size_t> children;
  };
  std::size_t compile(const SpTree& tree);
  // A null selector keeps every edge.
  bool kept(std::size_t edge, const SubgraphSelector* sel) const;
  template <typename Scalar>
  Extended<Scalar> resistance_at(std::size_t node, const SubgraphSelector* sel) const;
  ExtCount cut_at(std::size_t node, const Assignment& x) const;
  std::size_t longest_at(std::size_t node) const;

  const Network* host_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

struct DirectedEdge {
  std::size_t edge = 0;
  bool forward = true;  // true for (u,v,label), false for (v,u,label)

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// A flow stores theta(u,v,label) per edge in the edge's stored orientation;
// the reverse orientation is its negation, so antisymmetry holds by
// construction.
template <typename Scalar>
class FlowAssignment {
 public:
  FlowAssignment() = default;
  explicit FlowAssignment(std::vector<Scalar> forward) : forward_(std::move(forward)) {}

  std::size_t size() const { return forward_.size(); }
  const std::vector<Scalar>& forward_values() const { return forward_; }
  Scalar value(DirectedEdge d) const { return d.forward ? forward_[d.edge] : Scalar(-forward_[d.edge]); }
  // theta(from, to, label); throws if the edge does not join those vertices.
  Scalar at(const Network& net, std::size_t from, std::size_t to, const std::string& label) const;

  friend bool operator==(const FlowAssignment&, const FlowAssignment&) = default;

 private:
  std::vector<Scalar> forward_;
};

template <typename Scalar>
struct OptimalFlow {
  FlowAssignment<Scalar> flow;
  // Potentials with t grounded at 0; vertices outside the component of s
  // get 0 as well.
  std::vector<Scalar> potentials;
  Scalar energy;
};

// Electrical (minimum-energy) unit s-t flow. Throws DomainError when the
// terminals are disconnected.
template <typename Scalar>
OptimalFlow<Scalar> optimal_flow(const Network& net);

template <typename Scalar>
Scalar flow_energy(const Network& net, const FlowAssignment<Scalar>& flow);

template <typename Scalar>
struct FlowAxiomReport {
  bool conservation = false;  // net outflow zero away from the terminals
  bool unit_source = false;   // net outflow one at s
  bool unit_sink = false;     // net inflow one at t
  Scalar max_violation{};
  bool ok() const { return conservation && unit_source && unit_sink; }
};

// Checks the unit s-t flow axioms. Rational checks are exact; double
// checks use `tolerance`.
template <typename Scalar>
FlowAxiomReport<Scalar> check_flow_axioms(const Network& net, const FlowAssignment<Scalar>& flow,
                                          double tolerance = 1e-9);

template <typename Scalar>
struct FlowTerm {
  Scalar coefficient;
  bool is_cycle = false;
  std::vector<DirectedEdge> edges;  // in traversal order
};

// Strips self-avoiding s-t paths (following the largest residual flow out
// of each vertex) until one unit has been routed, then strips the leftover
// circulation as cycles. Throws DomainError on an invalid flow.
template <typename Scalar>
std::vector<FlowTerm<Scalar>> decompose_flow(const Network& net, const FlowAssignment<Scalar>& flow);

template <typename Scalar>
FlowAssignment<Scalar> recompose_flow(const Network& net, const std::vector<FlowTerm<Scalar>>& terms);

enum class CutBackend { kMaxFlow, kSeriesParallel };

// Infinite when s and t are connected in G(x); otherwise the fewest host
// edges crossed by a cut of G(x).
ExtCount cut_size(const Network& host, const Assignment& x, CutBackend backend = CutBackend::kMaxFlow);

struct CutAssignment {
  std::vector<std::uint8_t> side;  // 1 on the s side
  std::size_t crossing = 0;        // host edges crossing the cut
};

// A minimum cut of G(x). Among minimum cuts the inclusion-minimal s side is
// returned (the set reachable from s in the final residual graph), which
// makes the answer unique. Throws DomainError if s and t are connected.
CutAssignment witness_cut(const Network& host, const Assignment& x);

// Exhaustive search over simple s-t paths; at most 24 edges.
std::size_t longest_self_avoiding_path(const Network& net);

// Fewest edges on an s-t path, or nullopt when disconnected.
std::optional<std::size_t> shortest_path_length(const Network& net);

}  // namespace ff

#endif  // FF_ELECTRICAL_HPP_
