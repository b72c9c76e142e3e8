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

#ifndef FF_NAND_HPP_
#define FF_NAND_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ff/extended.hpp"
#include "ff/formula.hpp"

namespace ff {

enum class Player { kA, kB };

// A NAND_d instance with per-node values and resistances precomputed.
// Nodes are stored in heap order: the root is 0 and node i has children
// 2i+1 and 2i+2. Leaves carry the input bits left to right. Player A owns
// the OR nodes (even height > 0) and wins at 1-leaves.
class NandInstance {
 public:
  NandInstance(std::size_t depth, Assignment x);

  std::size_t depth() const { return depth_; }
  const Assignment& input() const { return x_; }
  std::size_t num_nodes() const { return values_.size(); }
  std::size_t height(std::size_t node) const;
  bool is_leaf(std::size_t node) const { return height(node) == 0; }
  Player owner(std::size_t node) const;
  std::size_t child(std::size_t node, int which) const { return 2 * node + 1 + static_cast<std::size_t>(which); }

  bool value(std::size_t node) const { return values_[node] != 0; }
  // R of the subtree's formula graph, and of its dual.
  const ExtRational& resistance(std::size_t node) const { return resistance_[node]; }
  const ExtRational& dual_resistance(std::size_t node) const { return dual_resistance_[node]; }
  // The leaves below `node` as an assignment of NAND_{height(node)}.
  Assignment subinstance(std::size_t node) const;

 private:
  std::size_t depth_;
  Assignment x_;
  std::vector<std::uint8_t> values_;
  std::vector<ExtRational> resistance_;
  std::vector<ExtRational> dual_resistance_;
};

struct FaultReport {
  ExtCount f_a;
  ExtCount f_b;
  ExtCount f;  // min(f_a, f_b)
  // Largest number of faults met at the winner's own decisions along its
  // safe paths; present only for the winning player.
  std::optional<std::size_t> g_a;
  std::optional<std::size_t> g_b;
  bool a_winnable = false;
};

// A node is a fault when its children have different values. Along a path
// that stays inside Z-winnable subtrees, Z's faults are counted at Z's own
// decision nodes; F_Z is 2 to the largest such count, or infinity when Z
// cannot win.
FaultReport fault_complexity(std::size_t depth, const Assignment& x);

// log2 F(x) <= k. Requires k <= depth/2.
bool is_k_fault(std::size_t depth, std::size_t k, const Assignment& x);

// Resistance of G_{NAND_d}(x), exact.
ExtRational nand_resistance(std::size_t depth, const Assignment& x);

using ResistanceOracle = std::function<ExtRational(std::size_t depth, const Assignment& x)>;

struct SelectResult {
  int choice = 0;
  double cost = 0.0;
  ExtRational r0;
  ExtRational r1;
  // R_choice <= 2 R_other.
  bool guarantee_holds = true;
};

// Decision rule on two known resistances: the smaller one wins, ties go
// to child 0. The charge is 2^(cost_depth/4) sqrt(min R).
SelectResult select_child(const ExtRational& r0, const ExtRational& r1, std::size_t cost_depth);

// Select on two NAND_d instances through a resistance oracle (exact by
// default). cost_depth defaults to d.
SelectResult select(std::size_t depth, const Assignment& x0, const Assignment& x1,
                    const ResistanceOracle& oracle = nand_resistance,
                    std::optional<std::size_t> cost_depth = std::nullopt);

struct Move {
  std::size_t node = 0;
  Player mover = Player::kA;
  int child = 0;
  double cost = 0.0;  // zero for B's moves
};

struct GameTranscript {
  std::vector<Move> moves;
  Player winner = Player::kA;
  double total_cost = 0.0;
};

struct GameStats {
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::vector<GameTranscript> games;
  double mean_cost = 0.0;
  double bound = 0.0;  // 2^(d/4+11/2) sqrt(R) for even d, 2^(d/4+5) sqrt(R) for odd d
  double root_resistance = 0.0;
  std::size_t wins = 0;
  std::size_t select_calls = 0;
  std::size_t guarantee_violations = 0;
  bool within_bound() const { return mean_cost <= bound; }
};

// Deterministic coin for B's move `step` of game `game`.
int opponent_coin(std::uint64_t seed, std::uint64_t game, std::uint64_t step);

// Plays `reps` games: A moves by Select (charged at the height of the
// deciding node), B moves by fair coin. Rejects 0-instances.
GameStats simulate_game(std::size_t depth, const Assignment& x, std::uint64_t seed, std::size_t reps);
GameStats simulate_game(const NandInstance& instance, std::uint64_t seed, std::size_t reps);

// Cost of the naive strategy, 2 sum_{i=0}^{floor(d/2)} 2^((d-2i)/2) log2 d.
double naive_cost(std::size_t depth);

}  // namespace ff

#endif  // FF_NAND_HPP_
