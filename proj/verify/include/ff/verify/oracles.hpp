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

#ifndef FF_VERIFY_ORACLES_HPP_
#define FF_VERIFY_ORACLES_HPP_

// Slow, independent reference implementations. Each one recomputes a
// library quantity from its definition rather than from the identities the
// library relies on.

#include <cstddef>
#include <optional>

#include "ff/electrical.hpp"
#include "ff/extended.hpp"
#include "ff/formula.hpp"
#include "ff/network.hpp"

namespace ff::verify {

struct FaultOracle {
  ExtCount f_a;
  ExtCount f_b;
};

// Walks every root-to-leaf path of the game tree, keeps those that only
// visit subtrees the player can win, and counts faults at the player's own
// turns.
FaultOracle brute_force_fault(std::size_t depth, const Assignment& x);

// Minimum number of host edges crossing any labelling with s on side 1 and
// t on side 0 that no kept edge crosses. Enumerates all 2^(|V|-2) labellings.
ExtCount brute_force_cut(const Network& host, const Assignment& x);

// Lexicographic quadratic programs behind the approximate witnesses, solved
// exactly in rational arithmetic with a tiny regulariser mu on the
// secondary objective. Unit weights only (the span program matrix is then
// integral). The host must connect s and t.
struct QpWitness {
  double error = 0.0;
  double size = 0.0;
};
QpWitness qp_positive_witness(const Network& host, const Assignment& x);
QpWitness qp_negative_witness(const Network& host, const Assignment& x);

// Minimum squared norm of a solution of A Pi_x w = tau computed with a
// generic complete orthogonal decomposition, or nullopt if the system is
// inconsistent.
std::optional<double> least_squares_positive_size(const Network& host, const Assignment& x);

}  // namespace ff::verify

#endif  // FF_VERIFY_ORACLES_HPP_
