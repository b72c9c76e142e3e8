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

#include "ff/network.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ff/error.hpp"
#include "json.hpp"

namespace ff {

// ---------------------------------------------------------------------------
// SpTree

SpTree SpTree::edge(std::string label) {
  SpTree tree;
  tree.kind = Kind::kEdge;
  tree.label = std::move(label);
  return tree;
}

namespace {

SpTree combine(SpTree::Kind kind, std::vector<SpTree> children) {
  SpTree tree;
  tree.kind = kind;
  for (auto& child : children) {
    if (child.kind == kind) {
      for (auto& grandchild : child.children) tree.children.push_back(std::move(grandchild));
    } else {
      tree.children.push_back(std::move(child));
    }
  }
  return tree;
}

SpTree swap_kinds(const SpTree& tree) {
  if (tree.kind == SpTree::Kind::kEdge) return tree;
  std::vector<SpTree> children;
  for (const auto& c : tree.children) children.push_back(swap_kinds(c));
  return combine(tree.kind == SpTree::Kind::kSeries ? SpTree::Kind::kParallel
                                                    : SpTree::Kind::kSeries,
                 std::move(children));
}

}  // namespace

SpTree SpTree::series(std::vector<SpTree> children) {
  return combine(Kind::kSeries, std::move(children));
}

SpTree SpTree::parallel(std::vector<SpTree> children) {
  return combine(Kind::kParallel, std::move(children));
}

// ---------------------------------------------------------------------------
// Network

Network::Network(std::vector<std::string> vertices, std::size_t s, std::size_t t,
                 std::vector<Edge> edges)
    : vertices_(std::move(vertices)), s_(s), t_(t), edges_(std::move(edges)) {
  if (s_ >= vertices_.size() || t_ >= vertices_.size()) {
    throw DomainError("terminal index out of range");
  }
  if (s_ == t_) throw DomainError("terminals s and t must differ");
  std::set<std::string_view> names;
  for (const auto& name : vertices_) {
    if (!names.insert(name).second) throw DomainError("duplicate vertex name '" + name + "'");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) {
      throw DomainError("edge '" + e.label + "' has an endpoint out of range");
    }
    if (e.u == e.v) throw DomainError("edge '" + e.label + "' is a self-loop");
    if (e.weight <= 0) throw DomainError("edge '" + e.label + "' must have positive weight");
    if (!edge_index_.emplace(e.label, i).second) {
      throw DomainError("duplicate edge label '" + e.label + "'");
    }
  }
}

Network Network::single_edge(std::string label, Rational weight, bool negated) {
  Network net({"s", "t"}, 0, 1, {Edge{0, 1, label, std::move(weight), negated}});
  net.sp_tree_ = SpTree::edge(std::move(label));
  return net;
}

std::optional<std::size_t> Network::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Network::find_edge(std::string_view label) const {
  auto it = edge_index_.find(label);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

void Network::set_sp_tree(SpTree tree) { sp_tree_ = std::move(tree); }

std::vector<Rational> Network::weights() const {
  std::vector<Rational> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.weight);
  return out;
}

Network Network::with_weights(std::span<const Rational> weights) const {
  if (weights.size() != edges_.size()) {
    throw DomainError("weight vector has " + std::to_string(weights.size()) + " entries for " +
                      std::to_string(edges_.size()) + " edges");
  }
  Network copy(*this);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (weights[i] <= 0) throw DomainError("weights must be positive");
    copy.edges_[i].weight = weights[i];
  }
  return copy;
}

Network Network::with_unit_weights() const {
  std::vector<Rational> ones(edges_.size(), Rational(1));
  return with_weights(ones);
}

Network Network::renamed_terminals(const std::string& s_name, const std::string& t_name) const {
  std::vector<std::string> names = vertices_;
  names[s_] = s_name;
  names[t_] = t_name;
  Network copy(std::move(names), s_, t_, edges_);
  copy.sp_tree_ = sp_tree_;
  copy.formula_ = formula_;
  return copy;
}

// ---------------------------------------------------------------------------
// Composition

Network compose_networks(Composition mode, const std::vector<Network>& parts) {
  if (parts.size() < 2) throw DomainError("composition needs at least two parts");
  std::set<std::string> labels;
  for (const auto& part : parts) {
    for (const auto& e : part.edges()) {
      if (!labels.insert(e.label).second) {
        throw DomainError("label collision on '" + e.label + "'");
      }
    }
  }

  std::vector<std::string> names{"s", "t"};
  const std::size_t l = parts.size();
  std::vector<std::vector<std::size_t>> maps(l);
  for (std::size_t i = 0; i < l; ++i) {
    const Network& part = parts[i];
    std::vector<std::size_t>& map = maps[i];
    map.assign(part.num_vertices(), 0);
    map[part.s()] = 0;
    map[part.t()] = 1;
    if (mode == Composition::kSeries && i > 0) {
      // Junction s_{i+1} (1-based) joins the previous part's sink to this
      // part's source.
      names.push_back("s_" + std::to_string(i + 1));
      maps[i - 1][parts[i - 1].t()] = names.size() - 1;
      map[part.s()] = names.size() - 1;
    }
    for (std::size_t v = 0; v < part.num_vertices(); ++v) {
      if (v == part.s() || v == part.t()) continue;
      names.push_back("(" + std::to_string(i + 1) + "," + part.vertices()[v] + ")");
      map[v] = names.size() - 1;
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < l; ++i) {
    for (const auto& e : parts[i].edges()) {
      edges.push_back(Edge{maps[i][e.u], maps[i][e.v], e.label, e.weight, e.negated});
    }
  }

  Network net(std::move(names), 0, 1, std::move(edges));
  bool all_tagged = std::all_of(parts.begin(), parts.end(),
                                [](const Network& p) { return p.sp_tree().has_value(); });
  if (all_tagged) {
    std::vector<SpTree> trees;
    for (const auto& p : parts) trees.push_back(*p.sp_tree());
    net.set_sp_tree(mode == Composition::kSeries ? SpTree::series(std::move(trees))
                                                 : SpTree::parallel(std::move(trees)));
  }
  return net;
}

// ---------------------------------------------------------------------------
// Formula graphs and duals

namespace {

Network build_formula_graph(const Formula& f, std::span<const Rational> weights) {
  if (f.is_leaf()) {
    Rational c = weights.empty() ? Rational(1) : weights[f.variable() - 1];
    return Network::single_edge("x" + std::to_string(f.variable()), c, f.negated());
  }
  std::vector<Network> parts;
  parts.reserve(f.children().size());
  for (const auto& child : f.children()) parts.push_back(build_formula_graph(child, weights));
  return compose_networks(f.kind() == GateKind::kAnd ? Composition::kSeries
                                                     : Composition::kParallel,
                          parts);
}

}  // namespace

Network formula_graph(const Formula& f, std::span<const Rational> weights) {
  if (!weights.empty() && weights.size() != f.num_variables()) {
    throw DomainError("weight vector has " + std::to_string(weights.size()) +
                      " entries for a formula on " + std::to_string(f.num_variables()) +
                      " variables");
  }
  for (const auto& c : weights) {
    if (c <= 0) throw DomainError("weights must be positive");
  }
  Network net = build_formula_graph(f, weights);
  net.set_formula(f);
  return net;
}

Network network_from_sp_tree(const SpTree& tree, const std::map<std::string, Edge>& edge_data) {
  if (tree.kind == SpTree::Kind::kEdge) {
    auto it = edge_data.find(tree.label);
    if (it == edge_data.end()) throw DomainError("no edge data for label '" + tree.label + "'");
    return Network::single_edge(tree.label, it->second.weight, it->second.negated);
  }
  std::vector<Network> parts;
  for (const auto& child : tree.children) parts.push_back(network_from_sp_tree(child, edge_data));
  return compose_networks(
      tree.kind == SpTree::Kind::kSeries ? Composition::kSeries : Composition::kParallel, parts);
}

Network dual_network(const Network& net) {
  if (!net.sp_tree()) {
    throw DomainError("the structural dual needs a series-parallel network");
  }
  std::map<std::string, Edge> data;
  for (const auto& e : net.edges()) {
    Edge copy = e;
    copy.weight = 1 / e.weight;
    data.emplace(e.label, copy);
  }
  Network built = network_from_sp_tree(swap_kinds(*net.sp_tree()), data);

  // Keep the host's edge order so that one assignment indexes both graphs.
  std::vector<Edge> edges;
  edges.reserve(net.num_edges());
  for (const auto& e : net.edges()) edges.push_back(built.edges()[*built.find_edge(e.label)]);
  std::vector<std::string> names = built.vertices();
  names[built.s()] = "s'";
  names[built.t()] = "t'";
  Network dual(std::move(names), built.s(), built.t(), std::move(edges));
  dual.set_sp_tree(*built.sp_tree());
  if (net.formula()) dual.set_formula(dual_formula(*net.formula()));
  return dual;
}

Network dual_network(const Formula& f, std::span<const Rational> weights) {
  return dual_network(formula_graph(f, weights));
}

// ---------------------------------------------------------------------------
// Subgraphs and connectivity

bool edge_selected(const Network& net, const SubgraphSelector& sel, std::size_t index) {
  const Edge& e = net.edges()[index];
  bool present = sel.x[index] != e.negated;
  return sel.polarity == Polarity::kPrimal ? present : !present;
}

Network subgraph(const Network& net, const SubgraphSelector& sel) {
  if (sel.x.size() != net.num_edges()) {
    throw DomainError("selector has " + std::to_string(sel.x.size()) + " bits for " +
                      std::to_string(net.num_edges()) + " edges");
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < net.num_edges(); ++i) {
    if (edge_selected(net, sel, i)) kept.push_back(net.edges()[i]);
  }
  Network sub(net.vertices(), net.s(), net.t(), std::move(kept));
  if (net.sp_tree()) sub.set_sp_tree(*net.sp_tree());
  if (net.formula()) sub.set_formula(*net.formula());
  return sub;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

bool terminals_connected(const Network& net) {
  std::vector<std::size_t> parent(net.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : net.edges()) parent[find_root(parent, e.u)] = find_root(parent, e.v);
  return find_root(parent, net.s()) == find_root(parent, net.t());
}

// ---------------------------------------------------------------------------
// Series-parallel recognition

std::optional<SpTree> recognize_series_parallel(const Network& net) {
  struct Piece {
    std::size_t u;
    std::size_t v;
    SpTree tree;
  };
  std::vector<Piece> pieces;
  for (const auto& e : net.edges()) pieces.push_back({e.u, e.v, SpTree::edge(e.label)});
  if (pieces.empty()) return std::nullopt;

  bool changed = true;
  while (changed && pieces.size() > 1) {
    changed = false;
    // Parallel reduction: merge pieces with the same endpoint pair.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      std::pair<std::size_t, std::size_t> key = std::minmax(pieces[i].u, pieces[i].v);
      groups[key].push_back(i);
    }
    std::vector<Piece> next;
    for (auto& [key, members] : groups) {
      if (members.size() == 1) {
        next.push_back(std::move(pieces[members[0]]));
        continue;
      }
      std::vector<SpTree> trees;
      for (auto i : members) trees.push_back(std::move(pieces[i].tree));
      next.push_back({key.first, key.second, SpTree::parallel(std::move(trees))});
      changed = true;
    }
    pieces = std::move(next);

    // Series reduction at one interior vertex of degree two.
    std::vector<std::vector<std::size_t>> incident(net.num_vertices());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      incident[pieces[i].u].push_back(i);
      incident[pieces[i].v].push_back(i);
    }
    for (std::size_t w = 0; w < net.num_vertices(); ++w) {
      if (w == net.s() || w == net.t()) continue;
      if (incident[w].size() == 1) return std::nullopt;  // dangling branch
      if (incident[w].size() != 2) continue;
      std::size_t a = incident[w][0];
      std::size_t b = incident[w][1];
      std::size_t end_a = pieces[a].u == w ? pieces[a].v : pieces[a].u;
      std::size_t end_b = pieces[b].u == w ? pieces[b].v : pieces[b].u;
      if (end_a == end_b) return std::nullopt;  // would close a loop
      Piece merged{end_a, end_b,
                   SpTree::series({std::move(pieces[a].tree), std::move(pieces[b].tree)})};
      std::vector<Piece> rest;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i != a && i != b) rest.push_back(std::move(pieces[i]));
      }
      rest.push_back(std::move(merged));
      pieces = std::move(rest);
      changed = true;
      break;
    }
  }
  if (pieces.size() != 1) return std::nullopt;
  // minmax returns references, so copy before the temporaries go away.
  std::pair<std::size_t, std::size_t> ends = std::minmax(pieces[0].u, pieces[0].v);
  std::size_t s = net.s();
  std::size_t t = net.t();
  std::pair<std::size_t, std::size_t> terminals = std::minmax(s, t);
  if (ends != terminals) return std::nullopt;
  return pieces[0].tree;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string dot_quote(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string export_network(const Network& net, GraphFormat format) {
  const auto& names = net.vertices();
  if (format == GraphFormat::kDot) {
    std::ostringstream os;
    os << "graph G {\n";
    for (const auto& name : names) os << "  " << dot_quote(name) << ";\n";
    for (const auto& e : net.edges()) {
      os << "  " << dot_quote(names[e.u]) << " -- " << dot_quote(names[e.v])
         << " [label=" << dot_quote((e.negated ? "~" : "") + e.label)
         << ", c=" << dot_quote(format_rational(e.weight)) << "];\n";
    }
    os << "}\n";
    return os.str();
  }
  nlohmann::ordered_json doc;
  doc["s"] = names[net.s()];
  doc["t"] = names[net.t()];
  doc["vertices"] = names;
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : net.edges()) {
    nlohmann::ordered_json edge;
    edge["u"] = names[e.u];
    edge["v"] = names[e.v];
    edge["label"] = e.label;
    edge["weight"] = format_rational(e.weight);
    if (e.negated) edge["negated"] = true;
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump(2) + "\n";
}

Network import_network(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what(), err.byte);
  }
  try {
    std::vector<std::string> names = doc.at("vertices").get<std::vector<std::string>>();
    auto index_of = [&](const std::string& name) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw DomainError("unknown vertex '" + name + "'");
      return static_cast<std::size_t>(it - names.begin());
    };
    std::size_t s = index_of(doc.at("s").get<std::string>());
    std::size_t t = index_of(doc.at("t").get<std::string>());
    std::vector<Edge> edges;
    for (const auto& item : doc.at("edges")) {
      Edge e;
      e.u = index_of(item.at("u").get<std::string>());
      e.v = index_of(item.at("v").get<std::string>());
      e.label = item.at("label").get<std::string>();
      const auto& w = item.at("weight");
      e.weight = w.is_string() ? parse_rational(w.get<std::string>())
                               : Rational(w.get<long>());
      e.negated = item.value("negated", false);
      edges.push_back(std::move(e));
    }
    Network net(std::move(names), s, t, std::move(edges));
    if (auto tree = recognize_series_parallel(net)) net.set_sp_tree(std::move(*tree));
    return net;
  } catch (const nlohmann::json::exception& err) {
    throw DomainError(std::string("malformed network JSON: ") + err.what());
  }
}

}  // namespace ff
