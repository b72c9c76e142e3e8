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

#include "ff/nand.hpp"

#include <algorithm>
#include <cmath>

#include "ff/error.hpp"
#include "ff/sweep.hpp"

namespace ff {

namespace {

std::size_t checked_leaves(std::size_t depth, const Assignment& x) {
  if (depth > 30) throw DomainError("NAND depth is limited to 30");
  std::size_t leaves = std::size_t{1} << depth;
  if (x.size() != leaves) {
    throw DomainError("NAND_" + std::to_string(depth) + " needs " + std::to_string(leaves) +
                      " input bits, got " + std::to_string(x.size()));
  }
  return leaves;
}

std::size_t node_height(std::size_t depth, std::size_t node) {
  std::size_t level = 0;
  for (std::size_t n = node + 1; n > 1; n >>= 1) ++level;
  return depth - level;
}

// Subtree values in heap order.
std::vector<std::uint8_t> node_values(std::size_t depth, const Assignment& x) {
  std::size_t leaves = checked_leaves(depth, x);
  std::size_t nodes = 2 * leaves - 1;
  std::vector<std::uint8_t> values(nodes, 0);
  for (std::size_t node = nodes; node-- > 0;) {
    std::size_t h = node_height(depth, node);
    if (h == 0) {
      values[node] = x[node - (leaves - 1)];
    } else if (h % 2 == 0) {
      values[node] = values[2 * node + 1] | values[2 * node + 2];
    } else {
      values[node] = values[2 * node + 1] & values[2 * node + 2];
    }
  }
  return values;
}

}  // namespace

NandInstance::NandInstance(std::size_t depth, Assignment x) : depth_(depth), x_(std::move(x)) {
  values_ = node_values(depth_, x_);
  std::size_t nodes = values_.size();
  std::size_t first_leaf = nodes / 2;
  resistance_.resize(nodes);
  dual_resistance_.resize(nodes);
  for (std::size_t node = nodes; node-- > 0;) {
    std::size_t h = height(node);
    if (h == 0) {
      bool present = x_[node - first_leaf];
      resistance_[node] = present ? ExtRational(1) : ExtRational::infinity();
      dual_resistance_[node] = present ? ExtRational::infinity() : ExtRational(1);
      continue;
    }
    const auto& r0 = resistance_[2 * node + 1];
    const auto& r1 = resistance_[2 * node + 2];
    const auto& d0 = dual_resistance_[2 * node + 1];
    const auto& d1 = dual_resistance_[2 * node + 2];
    if (h % 2 == 0) {  // OR: parallel in G, series in G'
      resistance_[node] = parallel_sum(r0, r1);
      dual_resistance_[node] = series_sum(d0, d1);
    } else {
      resistance_[node] = series_sum(r0, r1);
      dual_resistance_[node] = parallel_sum(d0, d1);
    }
  }
}

std::size_t NandInstance::height(std::size_t node) const { return node_height(depth_, node); }

Player NandInstance::owner(std::size_t node) const {
  return height(node) % 2 == 0 ? Player::kA : Player::kB;
}

Assignment NandInstance::subinstance(std::size_t node) const {
  std::size_t h = height(node);
  std::size_t first = node;
  for (std::size_t i = 0; i < h; ++i) first = 2 * first + 1;
  std::size_t offset = first - values_.size() / 2;
  Assignment sub(std::size_t{1} << h);
  for (std::size_t i = 0; i < sub.size(); ++i) sub.set(i, x_[offset + i]);
  return sub;
}

FaultReport fault_complexity(std::size_t depth, const Assignment& x) {
  std::vector<std::uint8_t> values = node_values(depth, x);
  std::size_t nodes = values.size();
  // g[node] for the player who wins that subtree: A where the value is 1,
  // B where it is 0. A node's winner only follows children it also wins.
  std::vector<std::size_t> g(nodes, 0);
  for (std::size_t node = nodes; node-- > 0;) {
    std::size_t h = node_height(depth, node);
    if (h == 0) continue;
    std::size_t c0 = 2 * node + 1;
    std::size_t c1 = c0 + 1;
    bool fault = values[c0] != values[c1];
    bool a_node = h % 2 == 0;
    bool winner_moves = (values[node] == 1) == a_node;
    if (winner_moves) {
      std::size_t best = 0;
      for (std::size_t c : {c0, c1}) {
        if (values[c] == values[node]) best = std::max(best, g[c]);
      }
      g[node] = best + (fault ? 1 : 0);
    } else {
      g[node] = std::max(g[c0], g[c1]);
    }
  }
  FaultReport report;
  report.a_winnable = values[0] == 1;
  auto power = [](std::size_t k) { return ExtCount(1ULL << k); };
  if (report.a_winnable) {
    report.g_a = g[0];
    report.f_a = power(g[0]);
    report.f_b = ExtCount::infinity();
  } else {
    report.g_b = g[0];
    report.f_b = power(g[0]);
    report.f_a = ExtCount::infinity();
  }
  report.f = min(report.f_a, report.f_b);
  return report;
}

bool is_k_fault(std::size_t depth, std::size_t k, const Assignment& x) {
  if (2 * k > depth) throw DomainError("k-fault level must satisfy k <= d/2");
  FaultReport report = fault_complexity(depth, x);
  return report.f <= ExtCount(1ULL << k);
}

ExtRational nand_resistance(std::size_t depth, const Assignment& x) {
  return NandInstance(depth, x).resistance(0);
}

SelectResult select_child(const ExtRational& r0, const ExtRational& r1, std::size_t cost_depth) {
  if (r0.is_infinite() && r1.is_infinite()) {
    throw DomainError("select needs at least one 1-instance");
  }
  SelectResult out;
  out.r0 = r0;
  out.r1 = r1;
  out.choice = r1 < r0 ? 1 : 0;
  const ExtRational& chosen = out.choice == 0 ? r0 : r1;
  const ExtRational& other = out.choice == 0 ? r1 : r0;
  out.cost = std::pow(2.0, static_cast<double>(cost_depth) / 4.0) * std::sqrt(to_double(chosen));
  out.guarantee_holds = other.is_infinite() || chosen.value() <= 2 * other.value();
  return out;
}

SelectResult select(std::size_t depth, const Assignment& x0, const Assignment& x1,
                    const ResistanceOracle& oracle, std::optional<std::size_t> cost_depth) {
  return select_child(oracle(depth, x0), oracle(depth, x1), cost_depth.value_or(depth));
}

int opponent_coin(std::uint64_t seed, std::uint64_t game, std::uint64_t step) {
  // SplitMix64 finaliser over a counter built from (game, step).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * ((game << 8) + step + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<int>(z >> 63);
}

GameStats simulate_game(std::size_t depth, const Assignment& x, std::uint64_t seed, std::size_t reps) {
  return simulate_game(NandInstance(depth, x), seed, reps);
}

GameStats simulate_game(const NandInstance& instance, std::uint64_t seed, std::size_t reps) {
  if (!instance.value(0)) {
    throw DomainError("the game is only simulated on A-winnable (value 1) instances");
  }
  struct Played {
    GameTranscript transcript;
    std::size_t calls = 0;
    std::size_t violations = 0;
  };
  auto played = parallel_map<Played>(reps, [&](std::size_t g) {
    Played out;
    std::size_t node = 0;
    std::uint64_t step = 0;
    while (!instance.is_leaf(node)) {
      Move move;
      move.node = node;
      move.mover = instance.owner(node);
      if (move.mover == Player::kA) {
        SelectResult pick = select_child(instance.resistance(instance.child(node, 0)),
                                         instance.resistance(instance.child(node, 1)),
                                         instance.height(node));
        move.child = pick.choice;
        move.cost = pick.cost;
        ++out.calls;
        if (!pick.guarantee_holds) ++out.violations;
      } else {
        move.child = opponent_coin(seed, g, step);
      }
      out.transcript.total_cost += move.cost;
      out.transcript.moves.push_back(move);
      node = instance.child(node, move.child);
      ++step;
    }
    out.transcript.winner = instance.value(node) ? Player::kA : Player::kB;
    return out;
  });

  GameStats stats;
  stats.seed = seed;
  stats.depth = instance.depth();
  stats.root_resistance = to_double(instance.resistance(0));
  double total = 0.0;
  for (auto& p : played) {
    total += p.transcript.total_cost;
    stats.select_calls += p.calls;
    stats.guarantee_violations += p.violations;
    if (p.transcript.winner == Player::kA) ++stats.wins;
    stats.games.push_back(std::move(p.transcript));
  }
  stats.mean_cost = reps == 0 ? 0.0 : total / static_cast<double>(reps);
  double d = static_cast<double>(instance.depth());
  double exponent = d / 4.0 + (instance.depth() % 2 == 0 ? 5.5 : 5.0);
  stats.bound = std::pow(2.0, exponent) * std::sqrt(stats.root_resistance);
  return stats;
}

double naive_cost(std::size_t depth) {
  if (depth < 1) throw DomainError("naive cost is defined for d >= 1");
  double sum = 0.0;
  for (std::size_t i = 0; 2 * i <= depth; ++i) {
    sum += std::pow(2.0, static_cast<double>(depth - 2 * i) / 2.0);
  }
  return 2.0 * sum * std::log2(static_cast<double>(depth));
}

}  // namespace ff
