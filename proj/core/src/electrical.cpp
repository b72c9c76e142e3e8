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

#include "ff/electrical.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>

#include "ff/error.hpp"
#include "ff/linalg.hpp"

namespace ff {

namespace {

bool is_zero(const Rational& x, double) { return x == 0; }
bool is_zero(double x, double eps) { return std::fabs(x) <= eps; }
bool is_positive(const Rational& x, double) { return x > 0; }
bool is_positive(double x, double eps) { return x > eps; }

template <typename Scalar>
Scalar snap(Scalar x, double eps) {
  if constexpr (std::is_same_v<Scalar, double>) {
    if (std::fabs(x) <= eps) return 0.0;
  }
  return x;
}

struct Component {
  bool connected = false;
  std::vector<std::uint8_t> member;
};

Component component_of_s(const Network& net) {
  std::vector<std::vector<std::size_t>> adj(net.num_vertices());
  for (const auto& e : net.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  Component comp;
  comp.member.assign(net.num_vertices(), 0);
  std::deque<std::size_t> queue{net.s()};
  comp.member[net.s()] = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[v]) {
      if (!comp.member[w]) {
        comp.member[w] = 1;
        queue.push_back(w);
      }
    }
  }
  comp.connected = comp.member[net.t()] != 0;
  return comp;
}

// Potentials for a unit current from s to t with t grounded, restricted to
// the component of s. Returns nullopt when t is not in that component.
template <typename Scalar>
std::optional<std::vector<Scalar>> grounded_potentials(const Network& net) {
  Component comp = component_of_s(net);
  if (!comp.connected) return std::nullopt;
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(net.num_vertices(), none);
  std::size_t n = 0;
  for (std::size_t v = 0; v < net.num_vertices(); ++v) {
    if (comp.member[v] && v != net.t()) index[v] = n++;
  }
  DenseMatrix<Scalar> lap(n, n);
  for (const auto& e : net.edges()) {
    if (!comp.member[e.u]) continue;
    Scalar c = from_rational<Scalar>(e.weight);
    std::size_t a = index[e.u];
    std::size_t b = index[e.v];
    if (a != none) lap(a, a) += c;
    if (b != none) lap(b, b) += c;
    if (a != none && b != none) {
      lap(a, b) -= c;
      lap(b, a) -= c;
    }
  }
  std::vector<Scalar> rhs(n, Scalar(0));
  rhs[index[net.s()]] = Scalar(1);
  auto solution = solve_linear(std::move(lap), std::move(rhs));
  if (!solution) throw std::logic_error("grounded Laplacian is singular");
  std::vector<Scalar> potentials(net.num_vertices(), Scalar(0));
  for (std::size_t v = 0; v < net.num_vertices(); ++v) {
    if (index[v] != none) potentials[v] = (*solution)[index[v]];
  }
  return potentials;
}

}  // namespace

// ---------------------------------------------------------------------------
// Series-parallel evaluation

SpEvaluator::SpEvaluator(const Network& host) : host_(&host) {
  if (!host.sp_tree()) throw DomainError("network has no series-parallel structure");
  root_ = compile(*host.sp_tree());
}

std::size_t SpEvaluator::compile(const SpTree& tree) {
  Node node{tree.kind, std::nullopt, {}};
  if (tree.kind == SpTree::Kind::kEdge) {
    node.edge = host_->find_edge(tree.label);
  } else {
    for (const auto& c : tree.children) node.children.push_back(compile(c));
  }
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

bool SpEvaluator::kept(std::size_t edge, const SubgraphSelector* sel) const {
  return sel == nullptr || edge_selected(*host_, *sel, edge);
}

template <typename Scalar>
Extended<Scalar> SpEvaluator::resistance_at(std::size_t index, const SubgraphSelector* sel) const {
  const Node& node = nodes_[index];
  if (node.kind == SpTree::Kind::kEdge) {
    if (!node.edge || !kept(*node.edge, sel)) return Extended<Scalar>::infinity();
    return Extended<Scalar>(from_rational<Scalar>(host_->edges()[*node.edge].weight)).reciprocal();
  }
  Extended<Scalar> acc = resistance_at<Scalar>(node.children[0], sel);
  for (std::size_t i = 1; i < node.children.size(); ++i) {
    Extended<Scalar> r = resistance_at<Scalar>(node.children[i], sel);
    acc = node.kind == SpTree::Kind::kSeries ? series_sum(acc, r) : parallel_sum(acc, r);
  }
  return acc;
}

template <typename Scalar>
Extended<Scalar> SpEvaluator::resistance(const SubgraphSelector& sel) const {
  if (sel.x.size() != host_->num_edges()) {
    throw DomainError("selector length does not match the host edge count");
  }
  return resistance_at<Scalar>(root_, &sel);
}

template <typename Scalar>
Extended<Scalar> SpEvaluator::resistance() const {
  return resistance_at<Scalar>(root_, nullptr);
}

ExtCount SpEvaluator::cut_at(std::size_t index, const Assignment& x) const {
  const Node& node = nodes_[index];
  if (node.kind == SpTree::Kind::kEdge) {
    bool present = node.edge && (x[*node.edge] != host_->edges()[*node.edge].negated);
    return present ? ExtCount::infinity() : ExtCount(1);
  }
  ExtCount acc = cut_at(node.children[0], x);
  for (std::size_t i = 1; i < node.children.size(); ++i) {
    ExtCount c = cut_at(node.children[i], x);
    acc = node.kind == SpTree::Kind::kSeries ? min(acc, c) : acc + c;
  }
  return acc;
}

ExtCount SpEvaluator::cut(const Assignment& x) const {
  if (x.size() != host_->num_edges()) {
    throw DomainError("assignment length does not match the host edge count");
  }
  return cut_at(root_, x);
}

std::size_t SpEvaluator::longest_at(std::size_t index) const {
  const Node& node = nodes_[index];
  if (node.kind == SpTree::Kind::kEdge) return 1;
  std::size_t acc = 0;
  for (auto c : node.children) {
    std::size_t len = longest_at(c);
    acc = node.kind == SpTree::Kind::kSeries ? acc + len : std::max(acc, len);
  }
  return acc;
}

std::size_t SpEvaluator::longest_path() const { return longest_at(root_); }

// ---------------------------------------------------------------------------
// Resistance and flows

template <typename Scalar>
Extended<Scalar> effective_resistance(const Network& net, ResistanceBackend backend) {
  if (backend == ResistanceBackend::kSeriesParallel) {
    return SpEvaluator(net).resistance<Scalar>();
  }
  auto potentials = grounded_potentials<Scalar>(net);
  if (!potentials) return Extended<Scalar>::infinity();
  return Extended<Scalar>((*potentials)[net.s()]);
}

template <typename Scalar>
Scalar FlowAssignment<Scalar>::at(const Network& net, std::size_t from, std::size_t to,
                                  const std::string& label) const {
  auto index = net.find_edge(label);
  if (!index) throw DomainError("unknown edge label '" + label + "'");
  const Edge& e = net.edges()[*index];
  if (e.u == from && e.v == to) return forward_[*index];
  if (e.v == from && e.u == to) return -forward_[*index];
  throw DomainError("edge '" + label + "' does not join the given vertices");
}

template <typename Scalar>
OptimalFlow<Scalar> optimal_flow(const Network& net) {
  auto potentials = grounded_potentials<Scalar>(net);
  if (!potentials) throw DomainError("terminals are disconnected; no unit flow exists");
  std::vector<Scalar> values(net.num_edges(), Scalar(0));
  for (std::size_t i = 0; i < net.num_edges(); ++i) {
    const Edge& e = net.edges()[i];
    values[i] = from_rational<Scalar>(e.weight) * ((*potentials)[e.u] - (*potentials)[e.v]);
  }
  FlowAssignment<Scalar> flow(std::move(values));
  Scalar energy = flow_energy(net, flow);
  return OptimalFlow<Scalar>{std::move(flow), std::move(*potentials), std::move(energy)};
}

template <typename Scalar>
Scalar flow_energy(const Network& net, const FlowAssignment<Scalar>& flow) {
  Scalar energy(0);
  for (std::size_t i = 0; i < net.num_edges(); ++i) {
    const Scalar& v = flow.forward_values()[i];
    energy += v * v / from_rational<Scalar>(net.edges()[i].weight);
  }
  return energy;
}

template <typename Scalar>
FlowAxiomReport<Scalar> check_flow_axioms(const Network& net, const FlowAssignment<Scalar>& flow,
                                          double tolerance) {
  if (flow.size() != net.num_edges()) throw DomainError("flow size does not match the network");
  std::vector<Scalar> outflow(net.num_vertices(), Scalar(0));
  for (std::size_t i = 0; i < net.num_edges(); ++i) {
    outflow[net.edges()[i].u] += flow.forward_values()[i];
    outflow[net.edges()[i].v] -= flow.forward_values()[i];
  }
  FlowAxiomReport<Scalar> report;
  report.max_violation = Scalar(0);
  auto note = [&](Scalar deviation) {
    if (deviation < 0) deviation = -deviation;
    if (report.max_violation < deviation) report.max_violation = deviation;
    return is_zero(deviation, tolerance);
  };
  report.conservation = true;
  for (std::size_t v = 0; v < net.num_vertices(); ++v) {
    if (v == net.s() || v == net.t()) continue;
    if (!note(outflow[v])) report.conservation = false;
  }
  report.unit_source = note(Scalar(outflow[net.s()] - 1));
  report.unit_sink = note(Scalar(outflow[net.t()] + 1));
  return report;
}

template <typename Scalar>
std::vector<FlowTerm<Scalar>> decompose_flow(const Network& net, const FlowAssignment<Scalar>& flow) {
  auto axioms = check_flow_axioms(net, flow);
  if (!axioms.ok()) throw DomainError("not a unit s-t flow (conservation violated)");

  std::vector<Scalar> residual = flow.forward_values();
  double eps = 0.0;
  if constexpr (std::is_same_v<Scalar, double>) {
    double largest = 1.0;
    for (double v : residual) largest = std::max(largest, std::fabs(v));
    eps = 1e-12 * largest;
  }
  std::vector<std::vector<DirectedEdge>> out(net.num_vertices());
  for (std::size_t i = 0; i < net.num_edges(); ++i) {
    out[net.edges()[i].u].push_back({i, true});
    out[net.edges()[i].v].push_back({i, false});
  }
  auto amount = [&](DirectedEdge d) { return d.forward ? residual[d.edge] : Scalar(-residual[d.edge]); };
  auto head = [&](DirectedEdge d) { return d.forward ? net.edges()[d.edge].v : net.edges()[d.edge].u; };
  auto best_out = [&](std::size_t v) -> std::optional<DirectedEdge> {
    std::optional<DirectedEdge> best;
    for (const auto& d : out[v]) {
      if (is_positive(amount(d), eps) && (!best || amount(*best) < amount(d))) best = d;
    }
    return best;
  };
  auto strip = [&](const std::vector<DirectedEdge>& edges, const Scalar& coefficient) {
    for (const auto& d : edges) {
      residual[d.edge] = snap<Scalar>(d.forward ? Scalar(residual[d.edge] - coefficient)
                                                : Scalar(residual[d.edge] + coefficient),
                                      eps);
    }
  };
  auto bottleneck = [&](const std::vector<DirectedEdge>& edges) {
    Scalar least = amount(edges[0]);
    for (const auto& d : edges) {
      if (amount(d) < least) least = amount(d);
    }
    return least;
  };

  std::vector<FlowTerm<Scalar>> terms;
  // Walks forward from `start` along positive residual flow. When the walk
  // closes on itself the cycle is stripped and the walk resumes from the
  // revisited vertex. Returns once `stop` is reached (paths) or after the
  // first cycle when stop is unreachable (circulations).
  auto walk = [&](std::size_t start, std::optional<std::size_t> stop) -> std::vector<DirectedEdge> {
    std::vector<std::size_t> vertices{start};
    std::vector<DirectedEdge> edges;
    while (!(stop && vertices.back() == *stop)) {
      auto d = best_out(vertices.back());
      if (!d) throw DomainError("flow decomposition stalled (conservation violated)");
      std::size_t w = head(*d);
      auto seen = std::find(vertices.begin(), vertices.end(), w);
      if (seen == vertices.end()) {
        vertices.push_back(w);
        edges.push_back(*d);
        continue;
      }
      std::size_t pos = static_cast<std::size_t>(seen - vertices.begin());
      std::vector<DirectedEdge> cycle(edges.begin() + static_cast<std::ptrdiff_t>(pos), edges.end());
      cycle.push_back(*d);
      Scalar coefficient = bottleneck(cycle);
      strip(cycle, coefficient);
      terms.push_back({coefficient, true, std::move(cycle)});
      if (!stop) return {};
      vertices.resize(pos + 1);
      edges.resize(pos);
    }
    return edges;
  };

  Scalar remaining(1);
  while (is_positive(remaining, eps)) {
    std::vector<DirectedEdge> path = walk(net.s(), net.t());
    Scalar coefficient = bottleneck(path);
    if (remaining < coefficient) coefficient = remaining;
    strip(path, coefficient);
    remaining -= coefficient;
    terms.push_back({coefficient, false, std::move(path)});
  }
  for (std::size_t i = 0; i < net.num_edges(); ++i) {
    while (!is_zero(residual[i], eps)) {
      std::size_t start = residual[i] > 0 ? net.edges()[i].u : net.edges()[i].v;
      walk(start, std::nullopt);
    }
  }
  return terms;
}

template <typename Scalar>
FlowAssignment<Scalar> recompose_flow(const Network& net, const std::vector<FlowTerm<Scalar>>& terms) {
  std::vector<Scalar> values(net.num_edges(), Scalar(0));
  for (const auto& term : terms) {
    for (const auto& d : term.edges) {
      if (d.forward) {
        values[d.edge] += term.coefficient;
      } else {
        values[d.edge] -= term.coefficient;
      }
    }
  }
  return FlowAssignment<Scalar>(std::move(values));
}

#define FF_INSTANTIATE(Scalar)                                                                     \
  template Extended<Scalar> effective_resistance<Scalar>(const Network&, ResistanceBackend);      \
  template Extended<Scalar> SpEvaluator::resistance<Scalar>(const SubgraphSelector&) const;       \
  template Extended<Scalar> SpEvaluator::resistance<Scalar>() const;                              \
  template class FlowAssignment<Scalar>;                                                           \
  template OptimalFlow<Scalar> optimal_flow<Scalar>(const Network&);                               \
  template Scalar flow_energy<Scalar>(const Network&, const FlowAssignment<Scalar>&);              \
  template FlowAxiomReport<Scalar> check_flow_axioms<Scalar>(const Network&,                       \
                                                             const FlowAssignment<Scalar>&, double); \
  template std::vector<FlowTerm<Scalar>> decompose_flow<Scalar>(const Network&,                    \
                                                                const FlowAssignment<Scalar>&);    \
  template FlowAssignment<Scalar> recompose_flow<Scalar>(const Network&,                           \
                                                         const std::vector<FlowTerm<Scalar>>&);

FF_INSTANTIATE(Rational)
FF_INSTANTIATE(double)
#undef FF_INSTANTIATE

// ---------------------------------------------------------------------------
// Cuts

namespace {

// Edmonds-Karp on the undirected host with capacity 1 for missing edges and
// |E|+1 for kept ones. Any finite cut crosses at most |E| host edges, so
// |E|+1 behaves exactly like an infinite capacity here.
class MaxFlow {
 public:
  MaxFlow(const Network& host, const Assignment& x) : host_(host), adj_(host.num_vertices()) {
    if (x.size() != host.num_edges()) {
      throw DomainError("assignment length does not match the host edge count");
    }
    const long long big = static_cast<long long>(host.num_edges()) + 1;
    SubgraphSelector sel{x, Polarity::kPrimal};
    for (std::size_t i = 0; i < host.num_edges(); ++i) {
      long long cap = edge_selected(host, sel, i) ? big : 1;
      const Edge& e = host.edges()[i];
      adj_[e.u].push_back(arcs_.size());
      arcs_.push_back({e.v, cap});
      adj_[e.v].push_back(arcs_.size());
      arcs_.push_back({e.u, cap});
    }
    limit_ = big;
  }

  // Flow value, capped at |E|+1 (which signals "connected").
  long long run() {
    long long total = 0;
    while (total < limit_) {
      std::vector<std::size_t> via(host_.num_vertices(), kNone);
      std::deque<std::size_t> queue{host_.s()};
      std::vector<std::uint8_t> seen(host_.num_vertices(), 0);
      seen[host_.s()] = 1;
      while (!queue.empty() && !seen[host_.t()]) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t a : adj_[v]) {
          if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
            seen[arcs_[a].to] = 1;
            via[arcs_[a].to] = a;
            queue.push_back(arcs_[a].to);
          }
        }
      }
      if (!seen[host_.t()]) break;
      long long push = limit_;
      for (std::size_t v = host_.t(); v != host_.s(); v = arcs_[via[v] ^ 1].to) {
        push = std::min(push, arcs_[via[v]].cap);
      }
      for (std::size_t v = host_.t(); v != host_.s(); v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
      }
      total += push;
    }
    return total;
  }

  std::vector<std::uint8_t> source_side() const {
    std::vector<std::uint8_t> seen(host_.num_vertices(), 0);
    std::deque<std::size_t> queue{host_.s()};
    seen[host_.s()] = 1;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t a : adj_[v]) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

  long long limit() const { return limit_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  struct Arc {
    std::size_t to;
    long long cap;
  };
  const Network& host_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;  // arc 2k and 2k+1 are mutual reverses
  long long limit_ = 0;
};

}  // namespace

ExtCount cut_size(const Network& host, const Assignment& x, CutBackend backend) {
  if (backend == CutBackend::kSeriesParallel) return SpEvaluator(host).cut(x);
  MaxFlow flow(host, x);
  long long value = flow.run();
  if (value >= flow.limit()) return ExtCount::infinity();
  return ExtCount(static_cast<unsigned long long>(value));
}

CutAssignment witness_cut(const Network& host, const Assignment& x) {
  MaxFlow flow(host, x);
  long long value = flow.run();
  if (value >= flow.limit()) throw DomainError("s and t are connected; no cut exists");
  CutAssignment cut;
  cut.side = flow.source_side();
  for (const auto& e : host.edges()) {
    if (cut.side[e.u] != cut.side[e.v]) ++cut.crossing;
  }
  return cut;
}

std::size_t longest_self_avoiding_path(const Network& net) {
  if (net.num_edges() > 24) throw DomainError("longest path search is limited to 24 edges");
  std::vector<std::vector<std::size_t>> adj(net.num_vertices());
  for (const auto& e : net.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  std::vector<std::uint8_t> on_path(net.num_vertices(), 0);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t length) {
    if (v == net.t()) {
      best = std::max(best, length);
      return;
    }
    on_path[v] = 1;
    for (std::size_t w : adj[v]) {
      if (!on_path[w]) dfs(w, length + 1);
    }
    on_path[v] = 0;
  };
  dfs(net.s(), 0);
  return best;
}

std::optional<std::size_t> shortest_path_length(const Network& net) {
  std::vector<std::vector<std::size_t>> adj(net.num_vertices());
  for (const auto& e : net.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(net.num_vertices(), none);
  std::deque<std::size_t> queue{net.s()};
  dist[net.s()] = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[v]) {
      if (dist[w] == none) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (dist[net.t()] == none) return std::nullopt;
  return dist[net.t()];
}

}  // namespace ff
