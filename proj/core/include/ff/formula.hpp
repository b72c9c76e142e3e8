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

#ifndef FF_FORMULA_HPP_
#define FF_FORMULA_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ff {

// A bit vector over variables x1..xN. Bit i (0-based) instantiates x_{i+1};
// in text form the leftmost character is x1.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t size, bool value = false) : bits_(size, value ? 1 : 0) {}
  explicit Assignment(std::vector<std::uint8_t> bits);

  // Accepts strings over {0,1}; throws ParseError otherwise.
  static Assignment parse(std::string_view text);
  // Bit i is bit (size-1-i) of `code`, so code 0b1100 over 4 variables
  // reads "1100".
  static Assignment from_index(std::uint64_t code, std::size_t size);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  std::size_t count_ones() const;
  Assignment complement() const;
  std::string to_string() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

enum class GateKind { kLeaf, kAnd, kOr };

// Read-once AND-OR formula with negations on leaves only.
//
// The constructors keep the tree normalized: same-kind children are
// flattened into their parent and leaves are renumbered 1..N from left to
// right, so two formulas are equal exactly when they have the same shape.
class Formula {
 public:
  // The single-variable formula x1 (or its negation).
  static Formula leaf(bool negated = false);
  static Formula conjunction(std::vector<Formula> children);
  static Formula disjunction(std::vector<Formula> children);
  static Formula gate(GateKind kind, std::vector<Formula> children);

  GateKind kind() const { return kind_; }
  bool is_leaf() const { return kind_ == GateKind::kLeaf; }
  // 1-based variable index; meaningful on leaves only.
  std::size_t variable() const { return variable_; }
  bool negated() const { return negated_; }
  const std::vector<Formula>& children() const { return children_; }
  std::size_t num_variables() const { return num_variables_; }

  // Number of gates on the longest root-to-leaf path.
  std::size_t depth() const;
  // Maximum number of AND (resp. OR) gates on any root-to-leaf path.
  std::size_t and_depth() const;
  std::size_t or_depth() const;
  std::size_t max_fan_in() const;

  friend bool operator==(const Formula&, const Formula&);

 private:
  Formula() = default;
  Formula shifted(std::size_t offset) const;

  GateKind kind_ = GateKind::kLeaf;
  std::size_t variable_ = 1;
  bool negated_ = false;
  std::vector<Formula> children_;
  std::size_t num_variables_ = 1;
};

// Grammar:
//   expr   := term ('|' term)*
//   term   := factor ('&' factor)*
//   factor := '~' factor | '(' expr ')' | var
//   var    := 'x' [1-9][0-9]*
// Whitespace is ignored. Negations are pushed to the leaves.
Formula parse_formula(std::string_view text);

// Inverse of parse_formula up to variable renaming: "(x1&x2)|x3".
std::string render_formula(const Formula& f);

// Multi-line indented tree dump for the CLI.
std::string describe_formula(const Formula& f);

bool eval_formula(const Formula& f, const Assignment& x);

// Full binary tree of depth d: OR at even height, AND at odd height.
Formula build_nand_tree(std::size_t depth);

// Swaps AND and OR; leaves (and their negation flags) are untouched.
Formula dual_formula(const Formula& f);

// Logical negation, pushed to the leaves.
Formula negate_formula(const Formula& f);

// Replaces every leaf of `outer` by a fresh copy of `inner` (negated where
// the leaf was negated).
Formula compose(const Formula& outer, const Formula& inner);

// Unbounded fan-in AND / OR over n fresh variables.
Formula and_formula(std::size_t n);
Formula or_formula(std::size_t n);

// One level of a composed promise: an AND gate restricted to
// D_{n,h} = {|x| = n or |x| <= n-h}, or an OR gate restricted to
// D'_{n,h} = {|x| = 0 or |x| >= h}.
struct PromiseLevel {
  GateKind kind = GateKind::kAnd;
  std::size_t n = 2;
  std::size_t h = 1;
};

class PromiseDomain {
 public:
  static PromiseDomain full(std::size_t num_variables);
  static PromiseDomain and_promise(std::size_t n, std::size_t h);
  static PromiseDomain or_promise(std::size_t n, std::size_t h);
  // Levels listed from the root downwards.
  static PromiseDomain composed(std::vector<PromiseLevel> levels);

  bool is_full() const { return full_; }
  const std::vector<PromiseLevel>& levels() const { return levels_; }
  std::size_t num_variables() const;

  // The formula whose gate structure the domain constrains.
  Formula formula() const;

  std::string describe() const;

 private:
  bool full_ = true;
  std::size_t num_variables_ = 0;
  std::vector<PromiseLevel> levels_;
};

// For a composed domain, every gate's input vector must satisfy its level's
// promise. Throws DomainError if `f` does not have the domain's structure.
bool promise_membership(const PromiseDomain& dom, const Formula& f, const Assignment& x);

}  // namespace ff

#endif  // FF_FORMULA_HPP_
