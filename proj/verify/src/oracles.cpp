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

#include "ff/verify/oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>

#include "ff/error.hpp"
#include "ff/linalg.hpp"
#include "ff/nand.hpp"
#include "ff/spanprog.hpp"

namespace ff::verify {

namespace {

// Regulariser for the secondary objective. The lexicographic optimum is
// perturbed by O(mu), far below the comparison tolerance.
const Rational kMu(1, 1000000000000UL);

void require_unit_weights(const Network& host) {
  for (const Edge& e : host.edges()) {
    if (e.weight != 1) throw DomainError("the quadratic-program oracle needs unit weights");
  }
}

// Column k of the integral span-program matrix: +-(e_u - e_v).
int entry(const Network& host, std::size_t row, std::size_t column) {
  const Edge& e = host.edges()[column / 2];
  int sign = column % 2 == 0 ? 1 : -1;
  int value = 0;
  if (row == e.u) value += sign;
  if (row == e.v) value -= sign;
  return value;
}

std::vector<std::uint8_t> availability(const Network& host, const Assignment& x) {
  std::vector<std::uint8_t> out(2 * host.num_edges());
  SubgraphSelector sel{x, Polarity::kPrimal};
  for (std::size_t k = 0; k < host.num_edges(); ++k) {
    std::uint8_t kept = edge_selected(host, sel, k) ? 1 : 0;
    out[2 * k] = kept;
    out[2 * k + 1] = kept;
  }
  return out;
}

}  // namespace

FaultOracle brute_force_fault(std::size_t depth, const Assignment& x) {
  NandInstance tree(depth, x);
  std::optional<std::size_t> best_a;
  std::optional<std::size_t> best_b;
  for (std::uint64_t path = 0; path < (std::uint64_t{1} << depth); ++path) {
    // Bit (depth-1-level) of `path` picks the child at the given level.
    std::size_t node = 0;
    bool all_a = tree.value(0);
    bool all_b = !tree.value(0);
    std::size_t faults_a = 0;
    std::size_t faults_b = 0;
    for (std::size_t level = 0; level < depth; ++level) {
      bool fault = tree.value(tree.child(node, 0)) != tree.value(tree.child(node, 1));
      if (fault) {
        if (tree.owner(node) == Player::kA) ++faults_a;
        else ++faults_b;
      }
      int which = static_cast<int>((path >> (depth - 1 - level)) & 1U);
      node = tree.child(node, which);
      all_a = all_a && tree.value(node);
      all_b = all_b && !tree.value(node);
    }
    if (all_a) best_a = std::max(best_a.value_or(0), faults_a);
    if (all_b) best_b = std::max(best_b.value_or(0), faults_b);
  }
  auto power = [](std::optional<std::size_t> g) {
    return g ? ExtCount(1ULL << *g) : ExtCount::infinity();
  };
  return {power(best_a), power(best_b)};
}

ExtCount brute_force_cut(const Network& host, const Assignment& x) {
  SubgraphSelector sel{x, Polarity::kPrimal};
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < host.num_vertices(); ++v) {
    if (v != host.s() && v != host.t()) free.push_back(v);
  }
  if (free.size() > 24) throw DomainError("too many vertices for cut enumeration");
  std::optional<unsigned long long> best;
  std::vector<std::uint8_t> side(host.num_vertices(), 0);
  side[host.s()] = 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i) side[free[i]] = (mask >> i) & 1U;
    bool valid = true;
    unsigned long long crossing = 0;
    for (std::size_t k = 0; k < host.num_edges() && valid; ++k) {
      const Edge& e = host.edges()[k];
      if (side[e.u] == side[e.v]) continue;
      if (edge_selected(host, sel, k)) valid = false;
      ++crossing;
    }
    if (valid && (!best || crossing < *best)) best = crossing;
  }
  return best ? ExtCount(*best) : ExtCount::infinity();
}

QpWitness qp_positive_witness(const Network& host, const Assignment& x) {
  require_unit_weights(host);
  if (!terminals_connected(host)) throw DomainError("host does not connect s and t");
  // Rows of A sum to zero, so the row of t is dropped; the rest have full
  // rank on a connected host. Isolated vertices contribute zero rows and are
  // dropped as well.
  std::vector<std::size_t> rows;
  for (std::size_t v = 0; v < host.num_vertices(); ++v) {
    if (v == host.t()) continue;
    bool touched = false;
    for (const Edge& e : host.edges()) touched = touched || e.u == v || e.v == v;
    if (touched) rows.push_back(v);
  }
  std::size_t m = 2 * host.num_edges();
  std::size_t r = rows.size();
  auto avail = availability(host, x);
  // KKT system of min w^T (P + mu I) w subject to A' w = tau'.
  DenseMatrix<Rational> kkt(m + r, m + r);
  std::vector<Rational> rhs(m + r, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    kkt(j, j) = 2 * ((avail[j] ? Rational(0) : Rational(1)) + kMu);
    for (std::size_t i = 0; i < r; ++i) {
      Rational a(entry(host, rows[i], j));
      kkt(j, m + i) = a;
      kkt(m + i, j) = a;
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i] == host.s()) rhs[m + i] = 1;
  }
  auto solution = solve_linear(kkt, rhs);
  if (!solution) throw DomainError("singular KKT system");
  Rational error = 0;
  Rational size = 0;
  for (std::size_t j = 0; j < m; ++j) {
    Rational sq = (*solution)[j] * (*solution)[j];
    size += sq;
    if (!avail[j]) error += sq;
  }
  return {error.get_d(), size.get_d()};
}

QpWitness qp_negative_witness(const Network& host, const Assignment& x) {
  require_unit_weights(host);
  if (!terminals_connected(host)) throw DomainError("host does not connect s and t");
  std::size_t n = host.num_vertices();
  std::size_t m = 2 * host.num_edges();
  auto avail = availability(host, x);
  // Q = A Pi A^T + mu A A^T as an n x n rational matrix.
  DenseMatrix<Rational> q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q(i, j) = 0;
  }
  for (std::size_t c = 0; c < m; ++c) {
    Rational scale = (avail[c] ? Rational(1) : Rational(0)) + kMu;
    const Edge& e = host.edges()[c / 2];
    for (std::size_t a : {e.u, e.v}) {
      for (std::size_t b : {e.u, e.v}) {
        q(a, b) += scale * entry(host, a, c) * entry(host, b, c);
      }
    }
  }
  // omega_s = 1 and omega_t = 0 (omega is defined up to a constant and
  // omega tau = 1). Vertices away from the component of s and t are free
  // but irrelevant; they are pinned to 0 as well.
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == host.s() || v == host.t()) continue;
    bool touched = false;
    for (const Edge& e : host.edges()) touched = touched || e.u == v || e.v == v;
    if (touched) free.push_back(v);
  }
  DenseMatrix<Rational> qff(free.size(), free.size());
  std::vector<Rational> rhs(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) {
    for (std::size_t j = 0; j < free.size(); ++j) qff(i, j) = q(free[i], free[j]);
    rhs[i] = -q(free[i], host.s());
  }
  std::vector<Rational> omega(n, Rational(0));
  omega[host.s()] = 1;
  if (!free.empty()) {
    auto solution = solve_linear(qff, rhs);
    if (!solution) throw DomainError("singular normal equations");
    for (std::size_t i = 0; i < free.size(); ++i) omega[free[i]] = (*solution)[i];
  }
  Rational error = 0;
  Rational size = 0;
  for (std::size_t c = 0; c < m; ++c) {
    const Edge& e = host.edges()[c / 2];
    Rational value = omega[e.u] * entry(host, e.u, c) + omega[e.v] * entry(host, e.v, c);
    Rational sq = value * value;
    size += sq;
    if (avail[c]) error += sq;
  }
  return {error.get_d(), size.get_d()};
}

std::optional<double> least_squares_positive_size(const Network& host, const Assignment& x) {
  SpanProgram p(host);
  Eigen::MatrixXd a = p.matrix();
  Eigen::VectorXd mask = p.available(x);
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    if (mask(c) == 0.0) a.col(c).setZero();
  }
  Eigen::VectorXd w = a.completeOrthogonalDecomposition().solve(p.target());
  double residual = (a * w - p.target()).norm();
  if (residual > 1e-8) return std::nullopt;
  return w.squaredNorm();
}

}  // namespace ff::verify
