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

#ifndef FF_BOUNDS_HPP_
#define FF_BOUNDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ff/extended.hpp"
#include "ff/formula.hpp"
#include "ff/network.hpp"
#include "ff/sweep.hpp"

namespace ff {

template <typename T>
struct Maximum {
  T value;
  Assignment input;
};

// Extremal quantities over a domain, split into the 1-side (s and t
// connected in G(x)) and the 0-side.
struct BoundReport {
  std::string domain;
  bool exhaustive = true;
  std::size_t ones = 0;
  std::size_t zeros = 0;
  std::size_t num_edges = 0;
  std::vector<Rational> weights;

  std::optional<Maximum<Rational>> r_max;          // R(G(x), c) over the 1-side
  std::optional<Maximum<Rational>> r_dual_max;     // R(G'(x), 1/c) over the 0-side
  std::optional<Maximum<unsigned long long>> c_max;  // cut size over the 0-side
  std::optional<Maximum<Rational>> r_max_unit;     // R(G(x)) with unit weights

  // sqrt(R_unit |E|), sqrt(R_unit C) and sqrt(R R'); the first two are the
  // unweighted bounds and so use the unit-weight resistance.
  std::optional<double> bound_old;
  std::optional<double> bound_cut;
  std::optional<double> bound_new;
};

// Needs a series-parallel host (the dual side is structural).
BoundReport compute_bounds(const Network& net, const AssignmentSet& domain);

struct ExampleFamily {
  std::string name;
  std::string parameters;
  Formula formula;
  Network network;
  AssignmentSet domain;
};

// G_{AND_N} with unit weights over D_{N,h}. Above 2^20 points the domain is
// replaced by one representative per Hamming weight; the path's edges are
// interchangeable, so the maxima are unchanged.
ExampleFamily line_family(std::size_t n, std::size_t h);

// A path of N unit edges in series with N parallel edges of weight 1/N.
// Every input is allowed; the 1-side is "whole path kept and at least one
// multi-edge kept". Large N uses (path count, multi-edge count)
// representatives.
ExampleFamily balloon_family(std::size_t n);

// G_{NAND_d} with unit weights over the k-fault inputs. Enumerated for
// d <= 4; larger d draws `samples` uniform inputs with `seed` and keeps the
// k-fault ones (maxima become lower estimates).
ExampleFamily nand_kfault_family(std::size_t d, std::size_t k, std::size_t samples = 4096,
                                 std::uint64_t seed = 1);

enum class ProductMode {
  kExhaustive,  // enumerate the composed promise domain (N <= 20)
  kStructural,  // exact level-by-level maximisation over 1-child counts
};

struct ProductReport {
  std::vector<PromiseLevel> levels;
  ProductMode mode = ProductMode::kExhaustive;
  Rational r_max;
  Rational r_dual_max;
  Rational product;
  Rational expected;  // prod N_i / prod h_i
  bool equal = false;
  double quantum_bound = 0.0;  // prod sqrt(N_i / h_i)
  std::size_t domain_size = 0;
  std::optional<BoundReport> bounds;  // exhaustive mode only
};

ProductReport verify_resistance_product(const std::vector<PromiseLevel>& levels,
                                        ProductMode mode = ProductMode::kExhaustive);

}  // namespace ff

#endif  // FF_BOUNDS_HPP_
