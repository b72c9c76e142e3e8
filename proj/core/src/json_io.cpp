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

#include "ff/json_io.hpp"

#include "json.hpp"

namespace ff::json {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json number_or_inf(double value) {
  if (std::isinf(value)) return "inf";
  return value;
}

template <typename T>
Json maximum(const std::optional<Maximum<T>>& m) {
  if (!m) return nullptr;
  Json out;
  if constexpr (std::is_same_v<T, Rational>) {
    out["value"] = format_rational(m->value);
  } else {
    out["value"] = m->value;
  }
  out["input"] = m->input.to_string();
  return out;
}

Json optional_number(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

const char* player(Player p) { return p == Player::kA ? "A" : "B"; }

}  // namespace

std::string formula(const Formula& f) {
  Json doc;
  doc["formula"] = render_formula(f);
  doc["N"] = f.num_variables();
  doc["depth"] = f.depth();
  doc["and_depth"] = f.and_depth();
  doc["or_depth"] = f.or_depth();
  doc["max_fan_in"] = f.max_fan_in();
  return dump(doc);
}

std::string resistance(const ExtRational& exact) {
  Json doc;
  doc["resistance"] = to_string(exact);
  doc["exact"] = true;
  return dump(doc);
}

std::string resistance(const ExtReal& approx) {
  Json doc;
  doc["resistance"] = number_or_inf(to_double(approx));
  doc["exact"] = false;
  return dump(doc);
}

std::string flow(const Network& net, const OptimalFlow<Rational>& result,
                 const std::vector<FlowTerm<Rational>>& terms) {
  const auto& names = net.vertices();
  Json doc;
  doc["energy"] = format_rational(result.energy);
  doc["flow"] = Json::array();
  for (std::size_t i = 0; i < net.num_edges(); ++i) {
    const Edge& e = net.edges()[i];
    doc["flow"].push_back({{"u", names[e.u]},
                           {"v", names[e.v]},
                           {"label", e.label},
                           {"value", format_rational(result.flow.forward_values()[i])}});
  }
  doc["potentials"] = Json::object();
  for (std::size_t v = 0; v < names.size(); ++v) {
    doc["potentials"][names[v]] = format_rational(result.potentials[v]);
  }
  doc["decomposition"] = Json::array();
  for (const auto& term : terms) {
    Json edges = Json::array();
    for (const auto& d : term.edges) {
      const Edge& e = net.edges()[d.edge];
      edges.push_back({{"label", e.label},
                       {"from", names[d.forward ? e.u : e.v]},
                       {"to", names[d.forward ? e.v : e.u]}});
    }
    doc["decomposition"].push_back({{"kind", term.is_cycle ? "cycle" : "path"},
                                    {"coefficient", format_rational(term.coefficient)},
                                    {"edges", std::move(edges)}});
  }
  return dump(doc);
}

std::string cut(const Network& host, const ExtCount& size, const CutAssignment* witness) {
  Json doc;
  doc["cut_size"] = size.is_infinite() ? Json("inf") : Json(size.value());
  if (witness != nullptr) {
    Json side = Json::object();
    for (std::size_t v = 0; v < host.num_vertices(); ++v) side[host.vertices()[v]] = witness->side[v];
    doc["kappa"] = std::move(side);
    doc["crossing"] = witness->crossing;
  }
  return dump(doc);
}

std::string witness(const WitnessReport& report) {
  Json doc;
  doc["kind"] = to_string(report.kind);
  doc["size"] = report.exact_size ? Json(to_string(*report.exact_size))
                                  : number_or_inf(to_double(report.size));
  doc["size_float"] = number_or_inf(to_double(report.size));
  doc["error"] = report.error;
  doc["witness"] = report.witness;
  doc["constraint_residual"] = report.constraint_residual;
  doc["size_residual"] = report.size_residual;
  if (report.bound) {
    doc["bound"] = *report.bound;
    doc["bound_holds"] = report.bound_holds;
  }
  return dump(doc);
}

std::string extrema(const WitnessExtrema& e) {
  Json doc;
  doc["W_plus"] = e.w_plus ? Json(to_string(*e.w_plus)) : Json(nullptr);
  doc["W_minus"] = e.w_minus ? Json(to_string(*e.w_minus)) : Json(nullptr);
  doc["argmax_plus"] = e.argmax_plus ? Json(e.argmax_plus->to_string()) : Json(nullptr);
  doc["argmax_minus"] = e.argmax_minus ? Json(e.argmax_minus->to_string()) : Json(nullptr);
  doc["approx_W_plus"] = optional_number(e.approx_plus);
  doc["approx_W_minus"] = optional_number(e.approx_minus);
  doc["bound"] = optional_number(e.bound());
  doc["ones"] = e.ones;
  doc["zeros"] = e.zeros;
  doc["exhaustive"] = e.exhaustive;
  return dump(doc);
}

std::string certificate(const WeightCertificate& cert) {
  Json doc;
  doc["weights"] = Json::object();
  for (std::size_t i = 0; i < cert.weights.size(); ++i) {
    doc["weights"]["x" + std::to_string(i + 1)] = format_rational(cert.weights[i]);
  }
  doc["bound"] = format_rational(cert.bound);
  doc["W_plus"] = format_rational(cert.w_plus);
  doc["W_minus"] = format_rational(cert.w_minus);
  doc["factors"] = Json::array();
  for (const auto& f : cert.factors) {
    doc["factors"].push_back({{"subformula", f.subformula},
                              {"parent", f.parent == GateKind::kAnd ? "and" : "or"},
                              {"factor", format_rational(f.factor)}});
  }
  return dump(doc);
}

std::string fault(const FaultReport& r) {
  Json doc;
  doc["F_A"] = to_string(r.f_a);
  doc["F_B"] = to_string(r.f_b);
  doc["F"] = to_string(r.f);
  doc["g_A"] = r.g_a ? Json(*r.g_a) : Json(nullptr);
  doc["g_B"] = r.g_b ? Json(*r.g_b) : Json(nullptr);
  doc["a_winnable"] = r.a_winnable;
  return dump(doc);
}

std::string game(const GameStats& stats) {
  Json doc;
  doc["seed"] = stats.seed;
  doc["games"] = Json::array();
  for (const auto& g : stats.games) {
    Json moves = Json::array();
    for (const auto& m : g.moves) {
      Json move;
      move["turn"] = player(m.mover);
      move["child"] = m.child;
      if (m.mover == Player::kA) move["cost"] = m.cost;
      moves.push_back(std::move(move));
    }
    doc["games"].push_back(
        {{"moves", std::move(moves)}, {"winner", player(g.winner)}, {"total_cost", g.total_cost}});
  }
  doc["mean_cost"] = stats.mean_cost;
  doc["bound"] = stats.bound;
  return dump(doc);
}

std::string bounds(const BoundReport& r) {
  Json doc;
  doc["domain"] = r.domain;
  doc["exhaustive"] = r.exhaustive;
  doc["ones"] = r.ones;
  doc["zeros"] = r.zeros;
  doc["edges"] = r.num_edges;
  Json weights = Json::array();
  for (const auto& c : r.weights) weights.push_back(format_rational(c));
  doc["weights"] = std::move(weights);
  doc["R_max"] = maximum(r.r_max);
  doc["R_dual_max"] = maximum(r.r_dual_max);
  doc["C_max"] = maximum(r.c_max);
  doc["R_max_unit"] = maximum(r.r_max_unit);
  doc["bound_old"] = optional_number(r.bound_old);
  doc["bound_cut"] = optional_number(r.bound_cut);
  doc["bound_new"] = optional_number(r.bound_new);
  return dump(doc);
}

std::string product(const ProductReport& r) {
  Json doc;
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"kind", l.kind == GateKind::kAnd ? "and" : "or"}, {"N", l.n}, {"h", l.h}});
  }
  doc["levels"] = std::move(levels);
  doc["mode"] = r.mode == ProductMode::kExhaustive ? "exhaustive" : "structural";
  doc["R_max"] = format_rational(r.r_max);
  doc["R_dual_max"] = format_rational(r.r_dual_max);
  doc["product"] = format_rational(r.product);
  doc["expected"] = format_rational(r.expected);
  doc["equal"] = r.equal;
  doc["quantum_bound"] = r.quantum_bound;
  doc["domain_size"] = r.domain_size;
  return dump(doc);
}

}  // namespace ff::json
