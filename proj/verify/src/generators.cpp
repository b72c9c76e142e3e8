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

#include "ff/verify/generators.hpp"

#include <algorithm>
#include <functional>

namespace ff::verify {

namespace {

Formula random_tree(Rng& rng, std::size_t leaves, const FormulaShape& shape, GateKind kind) {
  if (leaves == 1) {
    std::bernoulli_distribution negate(shape.negation_rate);
    return Formula::leaf(negate(rng));
  }
  std::size_t fan_in = std::min(leaves, shape.max_fan_in);
  std::uniform_int_distribution<std::size_t> pick_fan_in(2, fan_in);
  std::size_t k = pick_fan_in(rng);
  // Random composition of `leaves` into k positive parts.
  std::vector<std::size_t> cuts;
  std::vector<std::size_t> positions(leaves - 1);
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i + 1;
  std::shuffle(positions.begin(), positions.end(), rng);
  cuts.assign(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(k - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(leaves);
  GateKind child_kind = kind == GateKind::kAnd ? GateKind::kOr : GateKind::kAnd;
  std::vector<Formula> children;
  std::size_t previous = 0;
  for (std::size_t c : cuts) {
    children.push_back(random_tree(rng, c - previous, shape, child_kind));
    previous = c;
  }
  return Formula::gate(kind, std::move(children));
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  std::uniform_int_distribution<std::size_t> pick_size(1, shape.max_variables);
  std::bernoulli_distribution and_root(0.5);
  return random_tree(rng, pick_size(rng), shape, and_root(rng) ? GateKind::kAnd : GateKind::kOr);
}

Rational random_weight(Rng& rng) {
  std::uniform_int_distribution<long> digit(1, 9);
  long p = digit(rng);
  long q = digit(rng);
  return make_rational(p, static_cast<unsigned long>(q));
}

Network random_sp_network(Rng& rng, std::size_t max_edges) {
  Formula f = random_formula(rng, FormulaShape{max_edges, 3, 0.0});
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < f.num_variables(); ++i) weights.push_back(random_weight(rng));
  return formula_graph(f, weights);
}

std::vector<Formula> all_formulas(std::size_t depth, std::size_t max_fan_in) {
  // shapes[k][d]: formulas rooted at gate kind k (0 = AND, 1 = OR) with at
  // most d levels; depth 0 is the leaf.
  std::vector<Formula> leaf_only{Formula::leaf()};
  std::vector<std::vector<Formula>> by_kind_prev{leaf_only, leaf_only};
  std::vector<Formula> result;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<std::vector<Formula>> by_kind(2);
    for (int kind = 0; kind < 2; ++kind) {
      // Children come from the other kind's shapes of depth < d (which
      // include the leaf).
      const std::vector<Formula>& options = by_kind_prev[1 - kind];
      GateKind gate = kind == 0 ? GateKind::kAnd : GateKind::kOr;
      std::vector<std::size_t> pick;
      std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (pick.size() >= 2) {
          std::vector<Formula> children;
          for (auto i : pick) children.push_back(options[i]);
          by_kind[kind].push_back(Formula::gate(gate, std::move(children)));
        }
        if (pick.size() == max_fan_in) return;
        for (std::size_t i = from; i < options.size(); ++i) {
          pick.push_back(i);
          choose(i);  // nondecreasing indices: multisets of children
          pick.pop_back();
        }
      };
      choose(0);
    }
    for (int kind = 0; kind < 2; ++kind) {
      by_kind[kind].insert(by_kind[kind].begin(), Formula::leaf());
    }
    by_kind_prev = by_kind;
  }
  result.push_back(Formula::leaf());
  for (int kind = 0; kind < 2; ++kind) {
    for (std::size_t i = 1; i < by_kind_prev[kind].size(); ++i) result.push_back(by_kind_prev[kind][i]);
  }
  return result;
}

}  // namespace ff::verify
