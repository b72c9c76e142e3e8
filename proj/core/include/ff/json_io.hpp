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

#ifndef FF_JSON_IO_HPP_
#define FF_JSON_IO_HPP_

#include <string>

#include "ff/bounds.hpp"
#include "ff/electrical.hpp"
#include "ff/formula.hpp"
#include "ff/nand.hpp"
#include "ff/network.hpp"
#include "ff/spanprog.hpp"

// Machine-readable renderings of the library's results. Exact quantities
// are written as rational strings ("3/2", "inf"); floats as JSON numbers.
namespace ff::json {

std::string formula(const Formula& f);
std::string resistance(const ExtRational& exact);
std::string resistance(const ExtReal& approx);
std::string flow(const Network& net, const OptimalFlow<Rational>& flow,
                 const std::vector<FlowTerm<Rational>>& terms);
std::string cut(const Network& host, const ExtCount& size, const CutAssignment* witness);
std::string witness(const WitnessReport& report);
std::string extrema(const WitnessExtrema& extrema);
// {"weights":{"x1":"1/2",...},"bound":"16", ...}
std::string certificate(const WeightCertificate& cert);
std::string fault(const FaultReport& report);
// {"seed":..,"games":[{"moves":[{"turn":"A","child":0,"cost":..}],"winner":"A","total_cost":..}],
//  "mean_cost":..,"bound":..}
std::string game(const GameStats& stats);
std::string bounds(const BoundReport& report);
std::string product(const ProductReport& report);

}  // namespace ff::json

#endif  // FF_JSON_IO_HPP_
