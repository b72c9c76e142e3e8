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

#include "ff/bounds.hpp"

#include <cmath>
#include <random>

#include "ff/electrical.hpp"
#include "ff/error.hpp"
#include "ff/nand.hpp"

namespace ff {

namespace {

template <typename T>
void improve(std::optional<Maximum<T>>& best, const T& value, const Assignment& x) {
  if (!best || best->value < value) best = Maximum<T>{value, x};
}

}  // namespace

BoundReport compute_bounds(const Network& net, const AssignmentSet& domain) {
  if (!net.sp_tree()) throw DomainError("bounds need a series-parallel network");
  Network unit = net.with_unit_weights();
  Network dual = dual_network(net);
  SpEvaluator weighted(net);
  SpEvaluator unweighted(unit);
  SpEvaluator dual_eval(dual);

  struct Sample {
    bool one = false;
    Rational r;
    Rational r_unit;
    Rational r_dual;
    unsigned long long cut = 0;
  };
  auto samples = parallel_map<Sample>(domain.points.size(), [&](std::size_t i) {
    const Assignment& x = domain.points[i];
    Sample s;
    ExtRational r = weighted.resistance<Rational>(SubgraphSelector{x, Polarity::kPrimal});
    s.one = r.is_finite();
    if (s.one) {
      s.r = r.value();
      s.r_unit = unweighted.resistance<Rational>(SubgraphSelector{x, Polarity::kPrimal}).value();
    } else {
      s.r_dual = dual_eval.resistance<Rational>(SubgraphSelector{x, Polarity::kDual}).value();
      s.cut = weighted.cut(x).value();
    }
    return s;
  });

  BoundReport report;
  report.domain = domain.description;
  report.exhaustive = domain.exhaustive;
  report.num_edges = net.num_edges();
  report.weights = net.weights();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    const Assignment& x = domain.points[i];
    if (s.one) {
      ++report.ones;
      improve(report.r_max, s.r, x);
      improve(report.r_max_unit, s.r_unit, x);
    } else {
      ++report.zeros;
      improve(report.r_dual_max, s.r_dual, x);
      improve(report.c_max, s.cut, x);
    }
  }
  if (report.r_max_unit) {
    double r = to_double(report.r_max_unit->value);
    report.bound_old = std::sqrt(r * static_cast<double>(report.num_edges));
    if (report.c_max) report.bound_cut = std::sqrt(r * static_cast<double>(report.c_max->value));
  }
  if (report.r_max && report.r_dual_max) {
    report.bound_new = std::sqrt(to_double(report.r_max->value) * to_double(report.r_dual_max->value));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Example families

namespace {

Assignment prefix_ones(std::size_t ones, std::size_t size) {
  Assignment x(size);
  for (std::size_t i = 0; i < ones; ++i) x.set(i, true);
  return x;
}

}  // namespace

ExampleFamily line_family(std::size_t n, std::size_t h) {
  if (n < 2) throw DomainError("line family needs N >= 2");
  if (h < 1 || h > n) throw DomainError("line family needs 1 <= h <= N");
  Formula f = and_formula(n);
  AssignmentSet domain;
  PromiseDomain dom = PromiseDomain::and_promise(n, h);
  if (n <= kMaxEnumerationBits) {
    domain = promise_assignments(dom);
  } else {
    std::vector<Assignment> reps;
    for (std::size_t k = 0; k + h <= n; ++k) reps.push_back(prefix_ones(k, n));
    reps.push_back(prefix_ones(n, n));
    domain = explicit_assignments(std::move(reps), dom.describe() + " by Hamming weight", true);
  }
  Network net = formula_graph(f);
  return ExampleFamily{"line", "N=" + std::to_string(n) + " h=" + std::to_string(h), std::move(f),
                       std::move(net), std::move(domain)};
}

ExampleFamily balloon_family(std::size_t n) {
  if (n < 2) throw DomainError("balloon family needs N >= 2");
  std::vector<Formula> parts(n, Formula::leaf());
  parts.push_back(or_formula(n));
  Formula f = Formula::conjunction(std::move(parts));
  std::vector<Rational> weights(2 * n, Rational(1));
  for (std::size_t i = n; i < 2 * n; ++i) weights[i] = Rational(1, static_cast<unsigned long>(n));
  Network net = formula_graph(f, weights);
  AssignmentSet domain;
  if (2 * n <= kMaxEnumerationBits) {
    domain = full_assignments(2 * n);
  } else {
    std::vector<Assignment> reps;
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; b <= n; ++b) {
        Assignment x(2 * n);
        for (std::size_t i = 0; i < a; ++i) x.set(i, true);
        for (std::size_t i = 0; i < b; ++i) x.set(n + i, true);
        reps.push_back(std::move(x));
      }
    }
    domain = explicit_assignments(std::move(reps), "full(" + std::to_string(2 * n) +
                                                       ") by (path, multi-edge) counts",
                                  true);
  }
  return ExampleFamily{"balloon", "N=" + std::to_string(n), std::move(f), std::move(net),
                       std::move(domain)};
}

ExampleFamily nand_kfault_family(std::size_t d, std::size_t k, std::size_t samples, std::uint64_t seed) {
  if (2 * k > d) throw DomainError("nand-kfault family needs k <= d/2");
  Formula f = build_nand_tree(d);
  std::size_t n = f.num_variables();
  AssignmentSet domain;
  std::string description = "F^" + std::to_string(d) + "_" + std::to_string(k);
  if (n <= kMaxEnumerationBits) {
    AssignmentSet all = full_assignments(n);
    std::vector<Assignment> kept;
    for (auto& x : all.points) {
      if (is_k_fault(d, k, x)) kept.push_back(std::move(x));
    }
    domain = explicit_assignments(std::move(kept), description, true);
  } else {
    std::mt19937_64 rng(seed);
    std::vector<Assignment> kept;
    for (std::size_t i = 0; i < samples; ++i) {
      Assignment x(n);
      for (std::size_t j = 0; j < n; ++j) x.set(j, (rng() & 1U) != 0);
      if (is_k_fault(d, k, x)) kept.push_back(std::move(x));
    }
    domain = explicit_assignments(std::move(kept),
                                  description + " sampled (" + std::to_string(samples) +
                                      " draws, seed " + std::to_string(seed) + ")",
                                  false);
  }
  Network net = formula_graph(f);
  return ExampleFamily{"nand-kfault", "d=" + std::to_string(d) + " k=" + std::to_string(k),
                       std::move(f), std::move(net), std::move(domain)};
}

// ---------------------------------------------------------------------------
// Resistance products over composed promises

namespace {

struct LevelMaxima {
  Rational one;   // max R over 1-inputs
  Rational zero;  // max R' over 0-inputs
};

// Children of a gate are independent, and the composed resistance is
// monotone in each child's resistance, so the maximum is reached with every
// child at its own maximum. What remains is the count k of 1-children the
// promise allows; each admissible k is tried.
LevelMaxima structural_maxima(const std::vector<PromiseLevel>& levels, std::size_t i) {
  if (i == levels.size()) return {Rational(1), Rational(1)};
  LevelMaxima child = structural_maxima(levels, i + 1);
  const PromiseLevel& l = levels[i];
  LevelMaxima out{0, 0};
  auto n = static_cast<long>(l.n);
  auto h = static_cast<long>(l.h);
  if (l.kind == GateKind::kAnd) {
    out.one = child.one * n;  // k = N: series of N 1-children
    for (long k = 0; k <= n - h; ++k) {
      // N-k zero children in parallel on the dual side.
      Rational candidate = child.zero / (n - k);
      if (out.zero < candidate) out.zero = candidate;
    }
  } else {
    out.zero = child.zero * n;  // k = 0: series of N duals
    for (long k = h; k <= n; ++k) {
      Rational candidate = child.one / k;
      if (out.one < candidate) out.one = candidate;
    }
  }
  return out;
}

}  // namespace

ProductReport verify_resistance_product(const std::vector<PromiseLevel>& levels, ProductMode mode) {
  PromiseDomain dom = PromiseDomain::composed(levels);
  ProductReport report;
  report.levels = levels;
  report.mode = mode;
  report.expected = 1;
  report.quantum_bound = 1.0;
  for (const auto& l : levels) {
    report.expected *= make_rational(static_cast<long>(l.n), static_cast<unsigned long>(l.h));
    report.quantum_bound *= std::sqrt(static_cast<double>(l.n) / static_cast<double>(l.h));
  }
  if (mode == ProductMode::kExhaustive) {
    if (dom.num_variables() > kMaxEnumerationBits) {
      throw DomainError("composed domain on " + std::to_string(dom.num_variables()) +
                        " variables is too large for exhaustive mode");
    }
    Formula f = dom.formula();
    AssignmentSet domain = promise_assignments(dom);
    report.domain_size = domain.points.size();
    report.bounds = compute_bounds(formula_graph(f), domain);
    if (!report.bounds->r_max || !report.bounds->r_dual_max) {
      throw DomainError("composed domain has an empty side");
    }
    report.r_max = report.bounds->r_max->value;
    report.r_dual_max = report.bounds->r_dual_max->value;
  } else {
    LevelMaxima m = structural_maxima(levels, 0);
    report.r_max = m.one;
    report.r_dual_max = m.zero;
  }
  report.product = report.r_max * report.r_dual_max;
  report.equal = report.product == report.expected;
  return report;
}

}  // namespace ff
