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

#include "ff/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "ff/error.hpp"

namespace ff {

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

Assignment Assignment::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError("assignment must be a 0/1 string", i);
    }
    bits.push_back(text[i] == '1');
  }
  return Assignment(std::move(bits));
}

Assignment Assignment::from_index(std::uint64_t code, std::size_t size) {
  Assignment x(size);
  for (std::size_t i = 0; i < size; ++i) {
    x.bits_[i] = (code >> (size - 1 - i)) & 1U;
  }
  return x;
}

std::size_t Assignment::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

Assignment Assignment::complement() const {
  Assignment x(*this);
  for (auto& b : x.bits_) b ^= 1;
  return x;
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
  return s;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::leaf(bool negated) {
  Formula f;
  f.kind_ = GateKind::kLeaf;
  f.variable_ = 1;
  f.negated_ = negated;
  f.num_variables_ = 1;
  return f;
}

Formula Formula::gate(GateKind kind, std::vector<Formula> children) {
  if (kind == GateKind::kLeaf) return leaf();
  std::vector<Formula> flat;
  for (auto& child : children) {
    if (child.kind_ == kind) {
      for (auto& grandchild : child.children_) flat.push_back(std::move(grandchild));
    } else {
      flat.push_back(std::move(child));
    }
  }
  if (flat.size() < 2) {
    throw DomainError("gates need fan-in at least 2 (got " + std::to_string(flat.size()) + ")");
  }
  Formula f;
  f.kind_ = kind;
  f.variable_ = 0;
  std::size_t offset = 0;
  for (auto& child : flat) {
    // Children are internally numbered 1..n_i, but spliced grandchildren
    // carry their old parent's numbering; shift each one to start at 1
    // first so the offset arithmetic stays uniform.
    std::size_t lowest = static_cast<std::size_t>(-1);
    std::function<void(const Formula&)> find_min = [&](const Formula& g) {
      if (g.is_leaf()) {
        lowest = std::min(lowest, g.variable_);
      } else {
        for (const auto& c : g.children_) find_min(c);
      }
    };
    find_min(child);
    Formula moved = child.shifted(offset + 1 - lowest);
    offset += moved.num_variables_;
    f.children_.push_back(std::move(moved));
  }
  f.num_variables_ = offset;
  return f;
}

Formula Formula::conjunction(std::vector<Formula> children) {
  return gate(GateKind::kAnd, std::move(children));
}

Formula Formula::disjunction(std::vector<Formula> children) {
  return gate(GateKind::kOr, std::move(children));
}

Formula Formula::shifted(std::size_t offset) const {
  // `offset` is applied modulo 2^64, which also lets callers shift down.
  Formula f(*this);
  std::function<void(Formula&)> walk = [&](Formula& g) {
    if (g.is_leaf()) {
      g.variable_ += offset;
    } else {
      for (auto& c : g.children_) walk(c);
    }
  };
  walk(f);
  return f;
}

std::size_t Formula::depth() const {
  std::size_t best = 0;
  for (const auto& c : children_) best = std::max(best, c.depth() + 1);
  return best;
}

std::size_t Formula::and_depth() const {
  std::size_t best = 0;
  for (const auto& c : children_) best = std::max(best, c.and_depth());
  return best + (kind_ == GateKind::kAnd ? 1 : 0);
}

std::size_t Formula::or_depth() const {
  std::size_t best = 0;
  for (const auto& c : children_) best = std::max(best, c.or_depth());
  return best + (kind_ == GateKind::kOr ? 1 : 0);
}

std::size_t Formula::max_fan_in() const {
  std::size_t best = children_.size();
  for (const auto& c : children_) best = std::max(best, c.max_fan_in());
  return best;
}

bool operator==(const Formula& a, const Formula& b) {
  return a.kind_ == b.kind_ && a.variable_ == b.variable_ && a.negated_ == b.negated_ &&
         a.children_ == b.children_;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

// Raw syntax tree before negations are pushed down.
struct Node {
  enum class Kind { kVar, kNot, kAnd, kOr } kind;
  std::size_t name = 0;      // variable index as written
  std::size_t position = 0;  // source offset of the variable token
  std::vector<std::unique_ptr<Node>> children;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<Node> parse() {
    auto root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::unique_ptr<Node> binary(Node::Kind kind, char op, std::unique_ptr<Node> (Parser::*next)()) {
    auto first = (this->*next)();
    if (!accept(op)) return first;
    auto node = std::make_unique<Node>();
    node->kind = kind;
    node->children.push_back(std::move(first));
    do {
      node->children.push_back((this->*next)());
    } while (accept(op));
    return node;
  }

  std::unique_ptr<Node> expr() { return binary(Node::Kind::kOr, '|', &Parser::term); }
  std::unique_ptr<Node> term() { return binary(Node::Kind::kAnd, '&', &Parser::factor); }

  std::unique_ptr<Node> factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('~')) {
      auto node = std::make_unique<Node>();
      node->kind = Node::Kind::kNot;
      node->children.push_back(factor());
      return node;
    }
    if (accept('(')) {
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (text_[pos_] != 'x') fail("expected variable, '(' or '~'");
    auto node = std::make_unique<Node>();
    node->kind = Node::Kind::kVar;
    node->position = pos_;
    ++pos_;
    if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '9') {
      fail("variable index must start with a nonzero digit");
    }
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > 100000000) fail("variable index too large");
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    node->name = value;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Formula lower(const Node& node, bool negate) {
  switch (node.kind) {
    case Node::Kind::kVar:
      return Formula::leaf(negate);
    case Node::Kind::kNot:
      return lower(*node.children[0], !negate);
    case Node::Kind::kAnd:
    case Node::Kind::kOr: {
      // De Morgan: a negated AND becomes an OR of negated children.
      bool is_and = (node.kind == Node::Kind::kAnd) != negate;
      std::vector<Formula> children;
      for (const auto& c : node.children) children.push_back(lower(*c, negate));
      return is_and ? Formula::conjunction(std::move(children))
                    : Formula::disjunction(std::move(children));
    }
  }
  throw std::logic_error("unreachable");
}

void check_read_once(const Node& node, std::unordered_map<std::size_t, std::size_t>& seen) {
  if (node.kind == Node::Kind::kVar) {
    if (!seen.emplace(node.name, node.position).second) {
      throw ParseError("variable x" + std::to_string(node.name) +
                           " appears twice (formula is not read-once)",
                       node.position);
    }
    return;
  }
  for (const auto& c : node.children) check_read_once(*c, seen);
}

}  // namespace

Formula parse_formula(std::string_view text) {
  auto root = Parser(text).parse();
  std::unordered_map<std::size_t, std::size_t> seen;
  check_read_once(*root, seen);
  return lower(*root, false);
}

std::string render_formula(const Formula& f) {
  if (f.is_leaf()) return (f.negated() ? "~x" : "x") + std::to_string(f.variable());
  std::string out;
  const char* op = f.kind() == GateKind::kAnd ? "&" : "|";
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    const Formula& c = f.children()[i];
    if (i > 0) out += op;
    out += c.is_leaf() ? render_formula(c) : "(" + render_formula(c) + ")";
  }
  return out;
}

std::string describe_formula(const Formula& f) {
  std::ostringstream os;
  std::function<void(const Formula&, std::size_t)> walk = [&](const Formula& g, std::size_t indent) {
    os << std::string(indent * 2, ' ');
    if (g.is_leaf()) {
      os << (g.negated() ? "~x" : "x") << g.variable() << '\n';
      return;
    }
    os << (g.kind() == GateKind::kAnd ? "AND" : "OR") << '\n';
    for (const auto& c : g.children()) walk(c, indent + 1);
  };
  walk(f, 0);
  os << "N=" << f.num_variables() << " depth=" << f.depth() << " and-depth=" << f.and_depth()
     << " or-depth=" << f.or_depth() << " fan-in=" << f.max_fan_in() << '\n';
  return os.str();
}

bool eval_formula(const Formula& f, const Assignment& x) {
  if (x.size() != f.num_variables()) {
    throw DomainError("assignment has " + std::to_string(x.size()) + " bits but formula has " +
                      std::to_string(f.num_variables()) + " variables");
  }
  std::function<bool(const Formula&)> eval = [&](const Formula& g) -> bool {
    if (g.is_leaf()) return x[g.variable() - 1] != g.negated();
    if (g.kind() == GateKind::kAnd) {
      return std::all_of(g.children().begin(), g.children().end(), eval);
    }
    return std::any_of(g.children().begin(), g.children().end(), eval);
  };
  return eval(f);
}

Formula build_nand_tree(std::size_t depth) {
  if (depth == 0) return Formula::leaf();
  Formula child = build_nand_tree(depth - 1);
  GateKind kind = depth % 2 == 0 ? GateKind::kOr : GateKind::kAnd;
  return Formula::gate(kind, {child, child});
}

Formula dual_formula(const Formula& f) {
  if (f.is_leaf()) return f;
  std::vector<Formula> children;
  for (const auto& c : f.children()) children.push_back(dual_formula(c));
  return Formula::gate(f.kind() == GateKind::kAnd ? GateKind::kOr : GateKind::kAnd,
                       std::move(children));
}

Formula negate_formula(const Formula& f) {
  if (f.is_leaf()) return Formula::leaf(!f.negated());
  std::vector<Formula> children;
  for (const auto& c : f.children()) children.push_back(negate_formula(c));
  return Formula::gate(f.kind() == GateKind::kAnd ? GateKind::kOr : GateKind::kAnd,
                       std::move(children));
}

Formula compose(const Formula& outer, const Formula& inner) {
  if (outer.is_leaf()) return outer.negated() ? negate_formula(inner) : inner;
  std::vector<Formula> children;
  for (const auto& c : outer.children()) children.push_back(compose(c, inner));
  return Formula::gate(outer.kind(), std::move(children));
}

Formula and_formula(std::size_t n) {
  if (n == 1) return Formula::leaf();
  return Formula::conjunction(std::vector<Formula>(n, Formula::leaf()));
}

Formula or_formula(std::size_t n) {
  if (n == 1) return Formula::leaf();
  return Formula::disjunction(std::vector<Formula>(n, Formula::leaf()));
}

// ---------------------------------------------------------------------------
// Promise domains

namespace {

void validate_level(const PromiseLevel& level) {
  if (level.kind == GateKind::kLeaf) throw DomainError("promise level must be an AND or OR gate");
  if (level.n < 2) throw DomainError("promise level needs n >= 2");
  if (level.h < 1 || level.h > level.n) throw DomainError("promise level needs 1 <= h <= n");
}

}  // namespace

PromiseDomain PromiseDomain::full(std::size_t num_variables) {
  PromiseDomain d;
  d.full_ = true;
  d.num_variables_ = num_variables;
  return d;
}

PromiseDomain PromiseDomain::and_promise(std::size_t n, std::size_t h) {
  return composed({PromiseLevel{GateKind::kAnd, n, h}});
}

PromiseDomain PromiseDomain::or_promise(std::size_t n, std::size_t h) {
  return composed({PromiseLevel{GateKind::kOr, n, h}});
}

PromiseDomain PromiseDomain::composed(std::vector<PromiseLevel> levels) {
  if (levels.empty()) throw DomainError("composed promise needs at least one level");
  PromiseDomain d;
  d.full_ = false;
  d.num_variables_ = 1;
  for (const auto& level : levels) {
    validate_level(level);
    d.num_variables_ *= level.n;
  }
  d.levels_ = std::move(levels);
  return d;
}

std::size_t PromiseDomain::num_variables() const { return num_variables_; }

Formula PromiseDomain::formula() const {
  if (full_) throw DomainError("a full domain does not fix a formula");
  Formula f = Formula::leaf();
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    Formula gate = it->kind == GateKind::kAnd ? and_formula(it->n) : or_formula(it->n);
    f = compose(gate, f);
  }
  return f;
}

std::string PromiseDomain::describe() const {
  if (full_) return "full(" + std::to_string(num_variables_) + ")";
  std::string out;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i > 0) out += " o ";
    const auto& l = levels_[i];
    out += std::string(l.kind == GateKind::kAnd ? "and" : "or") + "(" + std::to_string(l.n) + "," +
           std::to_string(l.h) + ")";
  }
  return out;
}

namespace {

// Returns the block's value, or nullopt if some gate input breaks the
// promise. Block sizes shrink by the level fan-in at each step.
std::optional<bool> check_block(const std::vector<PromiseLevel>& levels, std::size_t level,
                                const Assignment& x, std::size_t begin, std::size_t size) {
  if (level == levels.size()) return x[begin];
  const PromiseLevel& l = levels[level];
  std::size_t child_size = size / l.n;
  std::size_t ones = 0;
  for (std::size_t i = 0; i < l.n; ++i) {
    auto v = check_block(levels, level + 1, x, begin + i * child_size, child_size);
    if (!v) return std::nullopt;
    ones += *v ? 1 : 0;
  }
  if (l.kind == GateKind::kAnd) {
    if (ones != l.n && ones > l.n - l.h) return std::nullopt;
    return ones == l.n;
  }
  if (ones != 0 && ones < l.h) return std::nullopt;
  return ones > 0;
}

}  // namespace

bool promise_membership(const PromiseDomain& dom, const Formula& f, const Assignment& x) {
  if (x.size() != f.num_variables()) {
    throw DomainError("assignment length does not match the formula");
  }
  if (dom.is_full()) {
    if (dom.num_variables() != f.num_variables()) {
      throw DomainError("domain and formula disagree on the variable count");
    }
    return true;
  }
  if (!(dom.formula() == f)) {
    throw DomainError("formula does not have the gate structure of " + dom.describe());
  }
  return check_block(dom.levels(), 0, x, 0, x.size()).has_value();
}

}  // namespace ff
