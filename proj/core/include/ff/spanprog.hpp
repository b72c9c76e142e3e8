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

#ifndef FF_SPANPROG_HPP_
#define FF_SPANPROG_HPP_

#include <Eigen/Dense>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ff/electrical.hpp"
#include "ff/extended.hpp"
#include "ff/formula.hpp"
#include "ff/network.hpp"
#include "ff/sweep.hpp"

namespace ff {

// The st-connectivity span program of a network. The input space has one
// basis vector per orientation of every edge; column 2k is (u,v,label) of
// edge k and column 2k+1 is (v,u,label). A maps (u,v,label) to
// sqrt(c)(e_u - e_v) and the target is e_s - e_t.
class SpanProgram {
 public:
  explicit SpanProgram(Network host);

  const Network& host() const { return *host_; }
  // Structural dual of the host, present when the host is series-parallel.
  const Network* dual() const { return dual_.get(); }
  // Fast evaluators; null when the host has no decomposition tree.
  const SpEvaluator* host_evaluator() const { return host_eval_.get(); }
  const SpEvaluator* dual_evaluator() const { return dual_eval_.get(); }
  const Eigen::MatrixXd& matrix() const { return a_; }
  const Eigen::VectorXd& target() const { return tau_; }
  std::size_t dimension() const { return static_cast<std::size_t>(a_.cols()); }
  static std::size_t column(std::size_t edge, bool forward) { return 2 * edge + (forward ? 0 : 1); }

  // Weighted Laplacian of the host; A A^T equals twice this.
  Eigen::MatrixXd laplacian() const;
  // Diagonal 0/1 mask of the columns available on input x.
  Eigen::VectorXd available(const Assignment& x) const;

 private:
  std::shared_ptr<const Network> host_;
  std::shared_ptr<const Network> dual_;
  std::shared_ptr<const SpEvaluator> host_eval_;
  std::shared_ptr<const SpEvaluator> dual_eval_;
  Eigen::MatrixXd a_;
  Eigen::VectorXd tau_;
};

enum class WitnessKind { kPositive, kNegative, kApproxPositive, kApproxNegative };

std::string to_string(WitnessKind kind);

struct WitnessReport {
  WitnessKind kind = WitnessKind::kPositive;
  // Exact kinds carry the rational size; approximate kinds only a float.
  std::optional<ExtRational> exact_size;
  ExtReal size;
  double error = 0.0;
  // Edge-space vector for positive kinds, vertex functional for negative
  // kinds; empty when the size is infinite.
  std::vector<double> witness;
  // Constraint violation of the witness object (|Aw - tau| or
  // |omega tau - 1| plus the availability violation for exact kinds).
  double constraint_residual = 0.0;
  // |norm^2 of the witness object - size|.
  double size_residual = 0.0;
  // Fan-in/depth bound for unit-weight formula graphs, when applicable.
  std::optional<double> bound;
  bool bound_holds = true;
};

// Sizes only, exact. Positive: R(G(x))/2. Negative: 2 R(G'(x)) through the
// structural dual when the host is series-parallel, and through the
// contracted graph G/G(x) otherwise.
ExtRational positive_witness_size(const SpanProgram& p, const Assignment& x);
ExtRational negative_witness_size(const SpanProgram& p, const Assignment& x);

WitnessReport positive_witness(const SpanProgram& p, const Assignment& x);
WitnessReport negative_witness(const SpanProgram& p, const Assignment& x);
WitnessReport approx_positive_witness(const SpanProgram& p, const Assignment& x);
WitnessReport approx_negative_witness(const SpanProgram& p, const Assignment& x);
WitnessReport witness(const SpanProgram& p, const Assignment& x, WitnessKind kind);

struct WitnessExtrema {
  std::optional<ExtRational> w_plus;   // max over 1-inputs
  std::optional<ExtRational> w_minus;  // max over 0-inputs
  std::optional<Assignment> argmax_plus;
  std::optional<Assignment> argmax_minus;
  // Approximate sizes are maximised over every input of the domain.
  std::optional<double> approx_plus;
  std::optional<double> approx_minus;
  std::size_t ones = 0;
  std::size_t zeros = 0;
  bool exhaustive = true;

  // sqrt(W+ W-) when both sides are present and finite.
  std::optional<double> bound() const;
};

WitnessExtrema witness_extrema(const SpanProgram& p, const AssignmentSet& domain, const Formula& f,
                               bool include_approx = false);

// Exact W+ and W- of a formula graph over the full input domain, by a
// recursion on the formula instead of enumeration. `weights` is indexed by
// variable.
struct FormulaExtrema {
  Rational w_plus;
  Rational w_minus;
};
FormulaExtrema formula_extrema(const Formula& f, const std::vector<Rational>& weights);

struct ScalingFactor {
  std::string subformula;  // rendered with the root's variable numbering
  GateKind parent = GateKind::kAnd;
  Rational factor;         // multiplier applied to the subformula's weights
};

struct WeightCertificate {
  std::vector<Rational> weights;  // indexed by variable
  Rational bound;                 // W+ W- <= bound, equal to N
  Rational w_plus;
  Rational w_minus;
  std::vector<ScalingFactor> factors;
};

// Recursive weights: under an AND the weights of child i are divided by the
// child's W-, under an OR they are multiplied by the child's W+ (so the
// dual weights are divided by it). This keeps W+ W- <= N at every node.
WeightCertificate optimal_weights(const Formula& f);

}  // namespace ff

#endif  // FF_SPANPROG_HPP_
