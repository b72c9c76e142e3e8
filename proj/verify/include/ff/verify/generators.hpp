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

#ifndef FF_VERIFY_GENERATORS_HPP_
#define FF_VERIFY_GENERATORS_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "ff/formula.hpp"
#include "ff/network.hpp"

namespace ff::verify {

using Rng = std::mt19937_64;

struct FormulaShape {
  std::size_t max_variables = 10;
  std::size_t max_fan_in = 3;
  double negation_rate = 0.0;
};

// Random read-once formula with 1..max_variables leaves. Leaves are split
// recursively among 2..max_fan_in children, so depth is unconstrained.
Formula random_formula(Rng& rng, const FormulaShape& shape);

// Random positive rational p/q with 1 <= p, q <= 9.
Rational random_weight(Rng& rng);

// Random series-parallel network: a random formula's graph with random
// rational weights and no negations.
Network random_sp_network(Rng& rng, std::size_t max_edges);

// Every formula shape of at most `depth` gate levels with fan-in between
// 2 and `max_fan_in`, up to reordering of children, for both root gates.
// Gates alternate (same-kind children would be flattened anyway).
std::vector<Formula> all_formulas(std::size_t depth, std::size_t max_fan_in);

}  // namespace ff::verify

#endif  // FF_VERIFY_GENERATORS_HPP_
