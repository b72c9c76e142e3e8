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

#include "ff/spanprog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ff/error.hpp"

namespace ff {

SpanProgram::SpanProgram(Network host) : host_(std::make_shared<const Network>(std::move(host))) {
  const Network& net = *host_;
  const auto rows = static_cast<Eigen::Index>(net.num_vertices());
  a_ = Eigen::MatrixXd::Zero(rows, static_cast<Eigen::Index>(2 * net.num_edges()));
  for (std::size_t k = 0; k < net.num_edges(); ++k) {
    const Edge& e = net.edges()[k];
    double root = std::sqrt(to_double(e.weight));
    auto fwd = static_cast<Eigen::Index>(column(k, true));
    auto bwd = static_cast<Eigen::Index>(column(k, false));
    a_(static_cast<Eigen::Index>(e.u), fwd) = root;
    a_(static_cast<Eigen::Index>(e.v), fwd) = -root;
    a_(static_cast<Eigen::Index>(e.u), bwd) = -root;
    a_(static_cast<Eigen::Index>(e.v), bwd) = root;
  }
  tau_ = Eigen::VectorXd::Zero(rows);
  tau_(static_cast<Eigen::Index>(net.s())) = 1.0;
  tau_(static_cast<Eigen::Index>(net.t())) = -1.0;
  if (net.sp_tree()) {
    dual_ = std::make_shared<const Network>(dual_network(net));
    host_eval_ = std::make_shared<const SpEvaluator>(*host_);
    dual_eval_ = std::make_shared<const SpEvaluator>(*dual_);
  }
}

Eigen::MatrixXd SpanProgram::laplacian() const {
  const Network& net = *host_;
  const auto n = static_cast<Eigen::Index>(net.num_vertices());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : net.edges()) {
    double c = to_double(e.weight);
    auto u = static_cast<Eigen::Index>(e.u);
    auto v = static_cast<Eigen::Index>(e.v);
    lap(u, u) += c;
    lap(v, v) += c;
    lap(u, v) -= c;
    lap(v, u) -= c;
  }
  return lap;
}

Eigen::VectorXd SpanProgram::available(const Assignment& x) const {
  const Network& net = *host_;
  if (x.size() != net.num_edges()) {
    throw DomainError("assignment has " + std::to_string(x.size()) + " bits for " +
                      std::to_string(net.num_edges()) + " edges");
  }
  Eigen::VectorXd mask = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension()));
  SubgraphSelector sel{x, Polarity::kPrimal};
  for (std::size_t k = 0; k < net.num_edges(); ++k) {
    if (edge_selected(net, sel, k)) {
      mask(static_cast<Eigen::Index>(column(k, true))) = 1.0;
      mask(static_cast<Eigen::Index>(column(k, false))) = 1.0;
    }
  }
  return mask;
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kPositive:
      return "positive";
    case WitnessKind::kNegative:
      return "negative";
    case WitnessKind::kApproxPositive:
      return "approx-positive";
    case WitnessKind::kApproxNegative:
      return "approx-negative";
  }
  return "unknown";
}

namespace {

void check_length(const SpanProgram& p, const Assignment& x) {
  if (x.size() != p.host().num_edges()) {
    throw DomainError("assignment has " + std::to_string(x.size()) + " bits for " +
                      std::to_string(p.host().num_edges()) + " edges");
  }
}

// The optimal negative witness is constant on components of G(x), so it is
// a potential on the graph G/G(x) obtained by contracting every kept edge.
struct Contraction {
  bool merged = false;               // s and t fall in one component
  ExtRational resistance;            // of the contracted graph
  std::vector<Rational> functional;  // omega, with omega(s) - omega(t) = 1
};

Contraction contract(const Network& host, const Assignment& x) {
  SubgraphSelector sel{x, Polarity::kPrimal};
  std::vector<std::size_t> parent(host.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t k = 0; k < host.num_edges(); ++k) {
    if (edge_selected(host, sel, k)) parent[root(host.edges()[k].u)] = root(host.edges()[k].v);
  }
  Contraction out;
  if (root(host.s()) == root(host.t())) {
    out.merged = true;
    out.resistance = ExtRational(0);
    return out;
  }
  std::vector<std::size_t> label(host.num_vertices(), 0);
  std::vector<std::size_t> ids;
  for (std::size_t v = 0; v < host.num_vertices(); ++v) {
    std::size_t r = root(v);
    auto it = std::find(ids.begin(), ids.end(), r);
    if (it == ids.end()) {
      ids.push_back(r);
      label[v] = ids.size() - 1;
    } else {
      label[v] = static_cast<std::size_t>(it - ids.begin());
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ids.size(); ++i) names.push_back("c" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < host.num_edges(); ++k) {
    const Edge& e = host.edges()[k];
    if (label[e.u] != label[e.v]) edges.push_back(Edge{label[e.u], label[e.v], e.label, e.weight, false});
  }
  Network quotient(std::move(names), label[host.s()], label[host.t()], std::move(edges));
  out.functional.assign(host.num_vertices(), Rational(0));
  out.resistance = effective_resistance<Rational>(quotient, ResistanceBackend::kLaplacian);
  if (out.resistance.is_infinite()) {
    // The host itself separates s from t: the indicator of the s side
    // costs nothing.
    std::vector<std::uint8_t> reach(quotient.num_vertices(), 0);
    reach[quotient.s()] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& e : quotient.edges()) {
        if (reach[e.u] != reach[e.v]) {
          reach[e.u] = reach[e.v] = 1;
          grew = true;
        }
      }
    }
    for (std::size_t v = 0; v < host.num_vertices(); ++v) out.functional[v] = reach[label[v]];
    return out;
  }
  auto flow = optimal_flow<Rational>(quotient);
  const Rational& r = out.resistance.value();
  for (std::size_t v = 0; v < host.num_vertices(); ++v) {
    out.functional[v] = flow.potentials[label[v]] / r;
  }
  return out;
}

std::optional<double> lemma_bound(const SpanProgram& p, bool positive) {
  const Network& net = p.host();
  if (!net.formula()) return std::nullopt;
  for (const auto& e : net.edges()) {
    if (e.weight != 1) return std::nullopt;
  }
  const Formula& f = *net.formula();
  double fan_in = static_cast<double>(std::max<std::size_t>(f.max_fan_in(), 1));
  if (positive) return 0.5 * std::pow(fan_in, static_cast<double>(f.and_depth()));
  return 2.0 * std::pow(fan_in, static_cast<double>(f.or_depth()));
}

void apply_bound(WitnessReport& report, std::optional<double> bound) {
  report.bound = bound;
  if (bound && report.size.is_finite()) {
    report.bound_holds = report.size.value() <= *bound * (1 + 1e-9) + 1e-12;
  } else if (bound) {
    report.bound_holds = false;
  }
}

// Singular values below this fraction of the largest are treated as zero.
constexpr double kRankTolerance = 1e-9;

struct Pseudoinverse {
  Eigen::VectorXd solution;    // min-norm minimiser of |M u - rhs|
  Eigen::MatrixXd null_basis;  // orthonormal basis of the numerical null space
};

Pseudoinverse pseudo_solve(const Eigen::MatrixXd& m, const Eigen::VectorXd& rhs) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  double threshold = kRankTolerance * std::max(1.0, sigma.size() > 0 ? sigma(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > threshold) ++rank;
  Eigen::VectorXd coeff = svd.matrixU().leftCols(rank).transpose() * rhs;
  coeff.array() /= sigma.head(rank).array();
  return {svd.matrixV().leftCols(rank) * coeff, svd.matrixV().rightCols(m.cols() - rank)};
}

// Minimises |B1 u + b1|^2, then |B2 u + b2|^2 over the first stage's
// minimisers, which form y + span(null basis of B1).
Eigen::VectorXd lexicographic_least_squares(const Eigen::MatrixXd& b1m, const Eigen::VectorXd& b1,
                                            const Eigen::MatrixXd& b2m, const Eigen::VectorXd& b2) {
  if (b1m.cols() == 0) return Eigen::VectorXd(0);
  Pseudoinverse first = pseudo_solve(b1m, -b1);
  if (first.null_basis.cols() == 0) return first.solution;
  Eigen::MatrixXd m = b2m * first.null_basis;
  Eigen::VectorXd c = b2m * first.solution + b2;
  Pseudoinverse second = pseudo_solve(m, -c);
  return first.solution + first.null_basis * second.solution;
}

// Orthonormal basis of the null space of `a` together with the min-norm
// solution of a w = rhs.
struct AffineSolutions {
  Eigen::VectorXd particular;
  Eigen::MatrixXd null_basis;
};

AffineSolutions solve_affine(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs) {
  Pseudoinverse p = pseudo_solve(a, rhs);
  return {p.solution, p.null_basis};
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

ExtRational positive_witness_size(const SpanProgram& p, const Assignment& x) {
  check_length(p, x);
  SubgraphSelector sel{x, Polarity::kPrimal};
  ExtRational r = p.host_evaluator()
                      ? p.host_evaluator()->resistance<Rational>(sel)
                      : effective_resistance<Rational>(subgraph(p.host(), sel), ResistanceBackend::kLaplacian);
  return r / Rational(2);
}

ExtRational negative_witness_size(const SpanProgram& p, const Assignment& x) {
  check_length(p, x);
  if (p.dual_evaluator()) {
    return p.dual_evaluator()->resistance<Rational>(SubgraphSelector{x, Polarity::kDual}) * Rational(2);
  }
  Contraction c = contract(p.host(), x);
  if (c.merged) return ExtRational::infinity();
  return c.resistance.reciprocal() * Rational(2);
}

WitnessReport positive_witness(const SpanProgram& p, const Assignment& x) {
  WitnessReport report;
  report.kind = WitnessKind::kPositive;
  ExtRational size = positive_witness_size(p, x);
  report.exact_size = size;
  report.size = to_real(size);
  if (size.is_infinite()) return report;

  const Network& host = p.host();
  Network sub = subgraph(host, SubgraphSelector{x, Polarity::kPrimal});
  auto flow = optimal_flow<Rational>(sub);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p.dimension()));
  for (std::size_t j = 0; j < sub.num_edges(); ++j) {
    std::size_t k = *host.find_edge(sub.edges()[j].label);
    double value = 0.5 * to_double(flow.flow.forward_values()[j]) /
                   std::sqrt(to_double(host.edges()[k].weight));
    w(static_cast<Eigen::Index>(SpanProgram::column(k, true))) = value;
    w(static_cast<Eigen::Index>(SpanProgram::column(k, false))) = -value;
  }
  report.witness = to_std(w);
  report.constraint_residual = (p.matrix() * w - p.target()).norm();
  report.size_residual = std::fabs(w.squaredNorm() - report.size.value());
  return report;
}

WitnessReport negative_witness(const SpanProgram& p, const Assignment& x) {
  WitnessReport report;
  report.kind = WitnessKind::kNegative;
  ExtRational size = negative_witness_size(p, x);
  report.exact_size = size;
  report.size = to_real(size);
  if (size.is_infinite()) return report;

  Contraction c = contract(p.host(), x);
  Eigen::VectorXd omega(static_cast<Eigen::Index>(c.functional.size()));
  for (std::size_t v = 0; v < c.functional.size(); ++v) {
    omega(static_cast<Eigen::Index>(v)) = to_double(c.functional[v]);
  }
  Eigen::VectorXd row = p.matrix().transpose() * omega;
  Eigen::VectorXd blocked = row.cwiseProduct(p.available(x));
  report.witness = to_std(omega);
  report.constraint_residual = std::fabs(omega.dot(p.target()) - 1.0) + blocked.norm();
  report.size_residual = std::fabs(row.squaredNorm() - report.size.value());
  return report;
}

WitnessReport approx_positive_witness(const SpanProgram& p, const Assignment& x) {
  check_length(p, x);
  if (!terminals_connected(p.host())) {
    throw DomainError("s and t are disconnected in the host; no positive witness exists");
  }
  const Eigen::MatrixXd& a = p.matrix();
  AffineSolutions sol = solve_affine(a, p.target());
  Eigen::VectorXd blocked = Eigen::VectorXd::Ones(a.cols()) - p.available(x);
  Eigen::MatrixXd mask = blocked.asDiagonal();
  Eigen::VectorXd y = lexicographic_least_squares(mask * sol.null_basis, mask * sol.particular,
                                                  sol.null_basis, sol.particular);
  Eigen::VectorXd w = sol.particular + sol.null_basis * y;

  WitnessReport report;
  report.kind = WitnessKind::kApproxPositive;
  report.error = w.cwiseProduct(blocked).squaredNorm();
  report.size = ExtReal(w.squaredNorm());
  report.witness = to_std(w);
  report.constraint_residual = (a * w - p.target()).norm();
  apply_bound(report, lemma_bound(p, true));
  return report;
}

WitnessReport approx_negative_witness(const SpanProgram& p, const Assignment& x) {
  check_length(p, x);
  const Eigen::MatrixXd& a = p.matrix();
  const Eigen::VectorXd& tau = p.target();
  // omega = tau/|tau|^2 + Y y spans {omega : omega tau = 1}.
  AffineSolutions sol = solve_affine(tau.transpose(), Eigen::VectorXd::Ones(1));
  Eigen::MatrixXd at = a.transpose();
  Eigen::MatrixXd mask = p.available(x).asDiagonal();
  Eigen::VectorXd y = lexicographic_least_squares(mask * at * sol.null_basis, mask * at * sol.particular,
                                                  at * sol.null_basis, at * sol.particular);
  Eigen::VectorXd omega = sol.particular + sol.null_basis * y;
  Eigen::VectorXd row = at * omega;

  WitnessReport report;
  report.kind = WitnessKind::kApproxNegative;
  report.error = (mask * row).squaredNorm();
  report.size = ExtReal(row.squaredNorm());
  report.witness = to_std(omega);
  report.constraint_residual = std::fabs(omega.dot(tau) - 1.0);
  apply_bound(report, lemma_bound(p, false));
  return report;
}

WitnessReport witness(const SpanProgram& p, const Assignment& x, WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kPositive:
      return positive_witness(p, x);
    case WitnessKind::kNegative:
      return negative_witness(p, x);
    case WitnessKind::kApproxPositive:
      return approx_positive_witness(p, x);
    case WitnessKind::kApproxNegative:
      return approx_negative_witness(p, x);
  }
  throw std::logic_error("unknown witness kind");
}

// ---------------------------------------------------------------------------
// Extrema

std::optional<double> WitnessExtrema::bound() const {
  if (!w_plus || !w_minus || w_plus->is_infinite() || w_minus->is_infinite()) return std::nullopt;
  return std::sqrt(to_double(w_plus->value() * w_minus->value()));
}

WitnessExtrema witness_extrema(const SpanProgram& p, const AssignmentSet& domain, const Formula& f,
                               bool include_approx) {
  struct Sample {
    bool one = false;
    ExtRational size;
    double approx_plus = 0.0;
    double approx_minus = 0.0;
  };
  bool can_approx_plus = include_approx && terminals_connected(p.host());
  auto samples = parallel_map<Sample>(domain.points.size(), [&](std::size_t i) {
    const Assignment& x = domain.points[i];
    Sample s;
    s.one = eval_formula(f, x);
    s.size = s.one ? positive_witness_size(p, x) : negative_witness_size(p, x);
    if (can_approx_plus) s.approx_plus = to_double(approx_positive_witness(p, x).size);
    if (include_approx) s.approx_minus = to_double(approx_negative_witness(p, x).size);
    return s;
  });

  WitnessExtrema out;
  out.exhaustive = domain.exhaustive;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    auto& best = s.one ? out.w_plus : out.w_minus;
    auto& arg = s.one ? out.argmax_plus : out.argmax_minus;
    (s.one ? out.ones : out.zeros) += 1;
    if (!best || *best < s.size) {
      best = s.size;
      arg = domain.points[i];
    }
    if (can_approx_plus) out.approx_plus = std::max(out.approx_plus.value_or(0.0), s.approx_plus);
    if (include_approx) out.approx_minus = std::max(out.approx_minus.value_or(0.0), s.approx_minus);
  }
  return out;
}

namespace {

// Largest primal resistance over 1-inputs and largest dual resistance over
// 0-inputs of the subtree, with weights consumed in leaf order.
struct ResistancePair {
  Rational one;
  Rational zero;
};

ResistancePair extrema_at(const Formula& f, const std::vector<Rational>& weights, std::size_t& cursor) {
  if (f.is_leaf()) {
    const Rational& c = weights.at(cursor++);
    return {1 / c, c};
  }
  std::vector<ResistancePair> parts;
  for (const auto& child : f.children()) parts.push_back(extrema_at(child, weights, cursor));
  ResistancePair out{0, 0};
  for (const auto& part : parts) {
    if (f.kind() == GateKind::kAnd) {
      // All children are 1 on the 1-side; a single 0-child maximises the
      // parallel dual on the 0-side.
      out.one += part.one;
      out.zero = std::max(out.zero, part.zero);
    } else {
      out.one = std::max(out.one, part.one);
      out.zero += part.zero;
    }
  }
  return out;
}

struct Scheme {
  std::vector<Rational> weights;
  FormulaExtrema extrema;
};

Scheme scheme_at(const Formula& f, std::vector<ScalingFactor>& factors) {
  if (f.is_leaf()) return {{Rational(1)}, {Rational(1, 2), Rational(2)}};
  Scheme out;
  for (const auto& child : f.children()) {
    Scheme sub = scheme_at(child, factors);
    Rational factor = f.kind() == GateKind::kAnd ? Rational(1 / sub.extrema.w_minus)
                                                 : Rational(sub.extrema.w_plus);
    factors.push_back({render_formula(child), f.kind(), factor});
    for (auto& c : sub.weights) out.weights.push_back(c * factor);
  }
  std::size_t cursor = 0;
  ResistancePair r = extrema_at(f, out.weights, cursor);
  out.extrema = {r.one / 2, r.zero * 2};
  return out;
}

}  // namespace

FormulaExtrema formula_extrema(const Formula& f, const std::vector<Rational>& weights) {
  if (weights.size() != f.num_variables()) throw DomainError("one weight per variable is required");
  std::size_t cursor = 0;
  ResistancePair r = extrema_at(f, weights, cursor);
  return {r.one / 2, r.zero * 2};
}

WeightCertificate optimal_weights(const Formula& f) {
  WeightCertificate cert;
  Scheme s = scheme_at(f, cert.factors);
  cert.weights = std::move(s.weights);
  cert.w_plus = s.extrema.w_plus;
  cert.w_minus = s.extrema.w_minus;
  cert.bound = Rational(static_cast<long>(f.num_variables()));
  if (cert.bound < cert.w_plus * cert.w_minus) {
    throw std::logic_error("weight scheme exceeded its certified bound");
  }
  return cert;
}

}  // namespace ff
