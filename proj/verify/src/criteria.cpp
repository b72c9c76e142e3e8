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

#include "ff/verify/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "ff/bounds.hpp"
#include "ff/electrical.hpp"
#include "ff/error.hpp"
#include "ff/formula.hpp"
#include "ff/nand.hpp"
#include "ff/network.hpp"
#include "ff/spanprog.hpp"
#include "ff/sweep.hpp"
#include "ff/verify/generators.hpp"
#include "ff/verify/oracles.hpp"

namespace ff::verify {

namespace {

// Collects failures without stopping at the first one, so the detail line
// reports how widespread a problem is.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_failure_.empty()) first_failure_ = what;
  }
  void absorb(std::size_t checks, std::size_t failures, const std::string& first_failure) {
    checks_ += checks;
    failures_ += failures;
    if (first_failure_.empty()) first_failure_ = first_failure;
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::string summary(const std::string& scope) const {
    std::ostringstream out;
    out << checks_ << " checks over " << scope << ", " << failures_ << " failures";
    if (!first_failure_.empty()) out << "; first: " << first_failure_;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

bool relative_close(const ExtReal& a, const ExtReal& b, double tolerance) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  double scale = std::max({1.0, std::fabs(a.value()), std::fabs(b.value())});
  return std::fabs(a.value() - b.value()) <= tolerance * scale;
}

ExtRational to_ext_rational(const ExtCount& c) {
  if (c.is_infinite()) return ExtRational::infinity();
  return ExtRational(Rational(static_cast<unsigned long>(c.value())));
}

std::string where(const Formula& f, const Assignment& x) {
  return render_formula(f) + " at x=" + x.to_string();
}

std::string where(const Network& net, const Assignment& x) {
  return std::to_string(net.num_edges()) + "-edge network at x=" + x.to_string();
}

Network without_decomposition(const Network& net) {
  return Network(net.vertices(), net.s(), net.t(), net.edges());
}

// Per-input outcome of a sweep, merged in index order so results do not
// depend on the number of workers.
struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (first_failure.empty()) first_failure = what();
  }
};

void merge(Tally& tally, const std::vector<Outcome>& outcomes) {
  for (const auto& o : outcomes) tally.absorb(o.checks, o.failures, o.first_failure);
}

// --- 1 ---------------------------------------------------------------------

CriterionResult witness_identity() {
  Rng rng(20260101);
  Tally tally;
  std::size_t inputs = 0;
  for (int n = 0; n < 200; ++n) {
    Network net = random_sp_network(rng, 12);
    SpanProgram p(net);
    SpanProgram contracted(without_decomposition(net));
    const Network& dual = *p.dual();
    std::size_t edges = net.num_edges();
    std::size_t count = std::size_t{1} << edges;
    inputs += count;
    auto outcomes = parallel_map<Outcome>(count, [&](std::size_t code) {
      Outcome o;
      Assignment x = Assignment::from_index(code, edges);
      SubgraphSelector primal{x, Polarity::kPrimal};
      SubgraphSelector dual_sel{x, Polarity::kDual};
      Network g = subgraph(net, primal);
      Network gd = subgraph(dual, dual_sel);
      ExtRational r = effective_resistance<Rational>(g, ResistanceBackend::kLaplacian);
      ExtRational rd = effective_resistance<Rational>(gd, ResistanceBackend::kLaplacian);
      ExtRational wp = positive_witness_size(p, x);
      ExtRational wn = negative_witness_size(p, x);
      auto at = [&] { return where(net, x); };
      o.check(wp == r / Rational(2), [&] { return "w+ != R/2 on " + at(); });
      o.check(wn == rd * Rational(2), [&] { return "w- != 2R' on " + at(); });
      // The negative size again, through the contracted graph G/G(x).
      o.check(negative_witness_size(contracted, x) == wn,
              [&] { return "contraction route disagrees on " + at(); });

      ExtReal rf = effective_resistance<double>(g, ResistanceBackend::kLaplacian);
      ExtReal rdf = effective_resistance<double>(gd, ResistanceBackend::kLaplacian);
      WitnessReport pos = positive_witness(p, x);
      WitnessReport neg = negative_witness(p, x);
      ExtReal half_rf = rf.is_infinite() ? rf : ExtReal(rf.value() / 2);
      ExtReal twice_rdf = rdf.is_infinite() ? rdf : ExtReal(rdf.value() * 2);
      o.check(relative_close(pos.size, half_rf, 1e-9), [&] { return "float w+ off on " + at(); });
      o.check(relative_close(neg.size, twice_rdf, 1e-9), [&] { return "float w- off on " + at(); });
      // The witness objects themselves must be feasible and have the
      // reported size.
      o.check(pos.constraint_residual <= 1e-9 && pos.size_residual <= 1e-9 * std::max(1.0, to_double(pos.size)),
              [&] { return "positive witness object off on " + at(); });
      o.check(neg.constraint_residual <= 1e-9 && neg.size_residual <= 1e-9 * std::max(1.0, to_double(neg.size)),
              [&] { return "negative witness object off on " + at(); });
      return o;
    });
    merge(tally, outcomes);
  }
  return {0, "", tally.passed(), tally.summary("200 networks, " + std::to_string(inputs) + " inputs"), 0};
}

// --- 2 ---------------------------------------------------------------------

// Union-find connectivity on a fixed edge list, cheap enough for millions
// of inputs.
class FastConnectivity {
 public:
  FastConnectivity(const Network& net, Polarity polarity)
      : n_(net.num_vertices()), s_(net.s()), t_(net.t()), polarity_(polarity) {
    for (const Edge& e : net.edges()) edges_.push_back({e.u, e.v, e.negated});
  }
  bool connected(const Assignment& x) const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      bool present = x[k] != edges_[k].negated;
      bool kept = polarity_ == Polarity::kPrimal ? present : !present;
      if (kept) parent[find(edges_[k].u)] = find(edges_[k].v);
    }
    return find(s_) == find(t_);
  }

 private:
  struct E {
    std::size_t u, v;
    bool negated;
  };
  std::size_t n_, s_, t_;
  Polarity polarity_;
  std::vector<E> edges_;
};

constexpr std::size_t kConnectivityExhaustiveBits = 18;
constexpr std::size_t kConnectivitySamples = 1 << 16;

CriterionResult connectivity() {
  std::vector<Formula> formulas = all_formulas(3, 3);
  Tally tally;
  std::size_t exhaustive = 0;
  std::size_t sampled = 0;
  std::size_t inputs = 0;
  std::size_t max_n = 0;
  for (std::size_t idx = 0; idx < formulas.size(); ++idx) {
    const Formula& f = formulas[idx];
    std::size_t n = f.num_variables();
    max_n = std::max(max_n, n);
    FastConnectivity primal(formula_graph(f), Polarity::kPrimal);
    FastConnectivity dual(dual_network(f), Polarity::kDual);
    bool full = n <= kConnectivityExhaustiveBits;
    std::size_t count = full ? (std::size_t{1} << n) : kConnectivitySamples;
    (full ? exhaustive : sampled) += 1;
    inputs += count;
    constexpr std::size_t kChunk = 4096;
    std::size_t chunks = (count + kChunk - 1) / kChunk;
    auto outcomes = parallel_map<Outcome>(chunks, [&](std::size_t chunk) {
      Outcome o;
      Rng rng(idx * 1000003 + chunk);
      std::size_t begin = chunk * kChunk;
      std::size_t end = std::min(count, begin + kChunk);
      Assignment x(n);
      for (std::size_t i = begin; i < end; ++i) {
        if (full) {
          x = Assignment::from_index(i, n);
        } else {
          for (std::size_t b = 0; b < n; ++b) x.set(b, (rng() & 1U) != 0);
        }
        bool value = eval_formula(f, x);
        o.check(primal.connected(x) == value, [&] { return "G(x) connectivity wrong for " + where(f, x); });
        o.check(dual.connected(x) == !value, [&] { return "G'(x) connectivity wrong for " + where(f, x); });
      }
      return o;
    });
    merge(tally, outcomes);
  }
  std::ostringstream scope;
  scope << formulas.size() << " formulas (N up to " << max_n << "; " << exhaustive << " exhaustive, " << sampled
        << " sampled with " << kConnectivitySamples << " inputs), " << inputs << " inputs";
  return {0, "", tally.passed(), tally.summary(scope.str()), 0};
}

// --- 3 ---------------------------------------------------------------------

CriterionResult weight_certificate() {
  std::vector<Formula> formulas;
  for (std::size_t d = 0; d <= 4; ++d) formulas.push_back(build_nand_tree(d));
  Rng rng(20260303);
  for (int i = 0; i < 100; ++i) formulas.push_back(random_formula(rng, FormulaShape{16, 4, 0.2}));
  Tally tally;
  std::size_t inputs = 0;
  for (const Formula& f : formulas) {
    std::size_t n = f.num_variables();
    WeightCertificate cert = optimal_weights(f);
    SpanProgram p(formula_graph(f, cert.weights));
    AssignmentSet domain = full_assignments(n);
    inputs += domain.points.size();
    WitnessExtrema ext = witness_extrema(p, domain, f);
    std::string name = render_formula(f);
    tally.check(cert.bound == Rational(static_cast<unsigned long>(n)), "bound != N for " + name);
    tally.check(ext.w_plus.has_value() && ext.w_minus.has_value(), "empty side for " + name);
    if (!ext.w_plus || !ext.w_minus) continue;
    tally.check(ext.w_plus->is_finite() && ext.w_minus->is_finite(), "infinite extremum for " + name);
    if (ext.w_plus->is_infinite() || ext.w_minus->is_infinite()) continue;
    Rational product = ext.w_plus->value() * ext.w_minus->value();
    tally.check(product <= cert.bound,
                "W+W- = " + format_rational(product) + " > " + format_rational(cert.bound) + " for " + name);
    tally.check(ext.w_plus->value() == cert.w_plus && ext.w_minus->value() == cert.w_minus,
                "certificate maxima differ from the sweep for " + name);
  }
  return {0, "", tally.passed(),
          tally.summary("NAND_0..4 and 100 random formulas, " + std::to_string(inputs) + " inputs"), 0};
}

// --- 4 ---------------------------------------------------------------------

constexpr std::size_t kMaxNandDepth = 4;
constexpr std::size_t kCutOracleVertices = 14;

CriterionResult nand_cut() {
  Tally tally;
  std::size_t zeros = 0;
  for (std::size_t d = 0; d <= kMaxNandDepth; ++d) {
    Formula f = build_nand_tree(d);
    Network host = formula_graph(f);
    std::size_t n = f.num_variables();
    unsigned long long expected = 1ULL << (d / 2);
    // Labelling enumeration is exponential in the vertex count.
    bool with_oracle = host.num_vertices() <= kCutOracleVertices;
    auto outcomes = parallel_map<Outcome>(std::size_t{1} << n, [&](std::size_t code) {
      Outcome o;
      Assignment x = Assignment::from_index(code, n);
      if (eval_formula(f, x)) return o;
      ExtCount flow = cut_size(host, x, CutBackend::kMaxFlow);
      ExtCount rec = cut_size(host, x, CutBackend::kSeriesParallel);
      o.check(flow == ExtCount(expected), [&] { return "max-flow cut " + to_string(flow) + " on " + where(f, x); });
      o.check(rec == ExtCount(expected), [&] { return "recursive cut " + to_string(rec) + " on " + where(f, x); });
      if (with_oracle) {
        ExtCount brute = brute_force_cut(host, x);
        o.check(brute == ExtCount(expected), [&] { return "enumerated cut " + to_string(brute) + " on " + where(f, x); });
      }
      return o;
    });
    for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
      if (!eval_formula(f, Assignment::from_index(code, n))) ++zeros;
    }
    merge(tally, outcomes);
  }
  return {0, "", tally.passed(), tally.summary(std::to_string(zeros) + " 0-instances of NAND_0..4 (max-flow, recursion and cut enumeration)"), 0};
}

// --- 5 ---------------------------------------------------------------------

CriterionResult fault_example() {
  // A depth-4 instance with two faults on the way to every A-winning leaf.
  const Assignment x = Assignment::parse("1110001100011101");
  Tally tally;
  Formula f = build_nand_tree(4);
  bool value = eval_formula(f, x);
  FaultReport report = fault_complexity(4, x);
  FaultOracle oracle = brute_force_fault(4, x);
  tally.check(value, "value is 0");
  tally.check(report.f_a == ExtCount(4), "F_A = " + to_string(report.f_a));
  tally.check(oracle.f_a == ExtCount(4), "path enumeration gives F_A = " + to_string(oracle.f_a));
  tally.check(report.f == ExtCount(4), "F = " + to_string(report.f));
  std::ostringstream detail;
  detail << "x=" << x.to_string() << " value=" << value << " F_A=" << to_string(report.f_a)
         << " F_B=" << to_string(report.f_b) << " F=" << to_string(report.f) << "; " << tally.summary("one input");
  return {0, "", tally.passed(), detail.str(), 0};
}

// --- 6 ---------------------------------------------------------------------

CriterionResult fault_resistance() {
  Tally tally;
  std::size_t inputs = 0;
  for (std::size_t d = 0; d <= kMaxNandDepth; ++d) {
    Formula f = build_nand_tree(d);
    std::size_t n = f.num_variables();
    inputs += std::size_t{1} << n;
    Rational factor = d % 2 == 0 ? Rational(1) : Rational(2);
    auto outcomes = parallel_map<Outcome>(std::size_t{1} << n, [&](std::size_t code) {
      Outcome o;
      Assignment x = Assignment::from_index(code, n);
      NandInstance tree(d, x);
      FaultReport fault = fault_complexity(d, x);
      FaultOracle oracle = brute_force_fault(d, x);
      auto at = [&] { return where(f, x); };
      o.check(fault.f_a == oracle.f_a && fault.f_b == oracle.f_b,
              [&] { return "fault recursion disagrees with path enumeration on " + at(); });
      o.check(fault.a_winnable == eval_formula(f, x), [&] { return "winnability != value on " + at(); });
      ExtRational r = tree.resistance(0);
      ExtRational rd = tree.dual_resistance(0);
      o.check(r <= to_ext_rational(fault.f_a) * factor, [&] { return "R > F_A bound on " + at(); });
      o.check(rd <= to_ext_rational(fault.f_b) * factor, [&] { return "R' > F_B bound on " + at(); });
      return o;
    });
    merge(tally, outcomes);
  }
  return {0, "", tally.passed(), tally.summary(std::to_string(inputs) + " inputs of NAND_0..4"), 0};
}

// --- 7 ---------------------------------------------------------------------

constexpr std::size_t kProductExhaustiveLimit = 12;
constexpr std::size_t kProductStructuralLimit = 256;
constexpr std::size_t kProductLimit = 1 << 16;
constexpr std::size_t kProductSamples = 2000;

// Every level structure whose product of fan-ins is at most `limit`:
// ordered sequences of (kind, N >= 2, 1 <= h <= N).
void level_structures(std::size_t limit, std::vector<PromiseLevel>& prefix, std::size_t product,
                      const std::function<void(const std::vector<PromiseLevel>&)>& visit) {
  if (!prefix.empty()) visit(prefix);
  for (std::size_t n = 2; product * n <= limit; ++n) {
    for (GateKind kind : {GateKind::kAnd, GateKind::kOr}) {
      for (std::size_t h = 1; h <= n; ++h) {
        prefix.push_back({kind, n, h});
        level_structures(limit, prefix, product * n, visit);
        prefix.pop_back();
      }
    }
  }
}

std::vector<PromiseLevel> random_structure(Rng& rng) {
  std::vector<PromiseLevel> levels;
  std::size_t product = 1;
  std::uniform_int_distribution<int> levels_wanted(1, 6);
  int target = levels_wanted(rng);
  for (int i = 0; i < target && product * 2 <= kProductLimit; ++i) {
    std::size_t room = kProductLimit / product;
    // Log-uniform fan-in so that small and large levels both show up.
    std::uniform_real_distribution<double> log_n(std::log(2.0), std::log(static_cast<double>(room) + 0.999));
    auto n = static_cast<std::size_t>(std::exp(log_n(rng)));
    n = std::clamp<std::size_t>(n, 2, room);
    std::uniform_int_distribution<std::size_t> pick_h(1, n);
    std::bernoulli_distribution and_kind(0.5);
    levels.push_back({and_kind(rng) ? GateKind::kAnd : GateKind::kOr, n, pick_h(rng)});
    product *= n;
  }
  return levels;
}

std::string describe_levels(const std::vector<PromiseLevel>& levels) {
  std::string out;
  for (const auto& l : levels) {
    if (!out.empty()) out += " o ";
    out += (l.kind == GateKind::kAnd ? "and(" : "or(") + std::to_string(l.n) + "," + std::to_string(l.h) + ")";
  }
  return out;
}

std::vector<ProductReport>& exhaustive_product_reports() {
  static std::vector<ProductReport> reports;
  return reports;
}

CriterionResult resistance_product() {
  Tally tally;
  std::vector<std::vector<PromiseLevel>> small;
  std::vector<std::vector<PromiseLevel>> medium;
  std::vector<PromiseLevel> prefix;
  level_structures(kProductExhaustiveLimit, prefix, 1, [&](const auto& l) { small.push_back(l); });
  level_structures(kProductStructuralLimit, prefix, 1, [&](const auto& l) { medium.push_back(l); });

  auto exhaustive = parallel_map<ProductReport>(small.size(), [&](std::size_t i) {
    return verify_resistance_product(small[i], ProductMode::kExhaustive);
  });
  for (std::size_t i = 0; i < small.size(); ++i) {
    ProductReport structural = verify_resistance_product(small[i], ProductMode::kStructural);
    std::string name = describe_levels(small[i]);
    tally.check(exhaustive[i].equal, "enumerated product " + format_rational(exhaustive[i].product) +
                                         " != " + format_rational(exhaustive[i].expected) + " for " + name);
    tally.check(structural.r_max == exhaustive[i].r_max && structural.r_dual_max == exhaustive[i].r_dual_max,
                "level recursion disagrees with enumeration for " + name);
  }
  exhaustive_product_reports() = exhaustive;

  std::size_t structural_count = 0;
  auto check_structural = [&](const std::vector<PromiseLevel>& levels) {
    ProductReport r = verify_resistance_product(levels, ProductMode::kStructural);
    ++structural_count;
    tally.check(r.equal, "product " + format_rational(r.product) + " != " + format_rational(r.expected) + " for " +
                             describe_levels(levels));
  };
  for (const auto& levels : medium) check_structural(levels);
  Rng rng(20260707);
  for (std::size_t i = 0; i < kProductSamples; ++i) check_structural(random_structure(rng));

  std::ostringstream scope;
  scope << small.size() << " structures enumerated (prod N <= " << kProductExhaustiveLimit << "), "
        << structural_count << " by level recursion (all with prod N <= " << kProductStructuralLimit << " plus "
        << kProductSamples << " random up to " << kProductLimit << ")";
  return {0, "", tally.passed(), tally.summary(scope.str()), 0};
}

// --- 8 ---------------------------------------------------------------------

double log_log_slope(const std::vector<double>& n, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    mx += std::log(n[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(n.size());
  my /= static_cast<double>(n.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    double dx = std::log(n[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::vector<BoundReport>& family_reports() {
  static std::vector<BoundReport> reports;
  return reports;
}

CriterionResult example_families() {
  Tally tally;
  std::vector<BoundReport> unit_reports;
  std::vector<double> ns, cut_bounds, new_bounds, old_bounds;
  for (std::size_t n : {4, 9, 16, 25}) {
    auto h = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n))));
    ExampleFamily fam = line_family(n, h);
    BoundReport r = compute_bounds(fam.network, fam.domain);
    unit_reports.push_back(r);
    std::string name = "line(" + std::to_string(n) + "," + std::to_string(h) + ")";
    bool complete = r.r_max && r.r_dual_max && r.c_max && r.bound_cut && r.bound_new && r.bound_old;
    tally.check(complete, "missing maxima for " + name);
    if (!complete) continue;
    tally.check(r.r_max->value == Rational(static_cast<unsigned long>(n)), name + " R_max=" + format_rational(r.r_max->value));
    tally.check(r.r_dual_max->value == Rational(1, static_cast<unsigned long>(h)),
                name + " R'_max=" + format_rational(r.r_dual_max->value));
    tally.check(r.c_max->value == 1, name + " C_max=" + std::to_string(r.c_max->value));
    ns.push_back(static_cast<double>(n));
    cut_bounds.push_back(*r.bound_cut);
    new_bounds.push_back(*r.bound_new);
    old_bounds.push_back(*r.bound_old);
  }
  double cut_slope = ns.size() == 4 ? log_log_slope(ns, cut_bounds) : NAN;
  double new_slope = ns.size() == 4 ? log_log_slope(ns, new_bounds) : NAN;
  double old_slope = ns.size() == 4 ? log_log_slope(ns, old_bounds) : NAN;
  tally.check(std::fabs(cut_slope - 0.5) <= 0.1, "cut-bound exponent " + std::to_string(cut_slope));
  tally.check(std::fabs(new_slope - 0.25) <= 0.1, "new-bound exponent " + std::to_string(new_slope));

  for (std::size_t n : {4, 8, 16}) {
    ExampleFamily fam = balloon_family(n);
    BoundReport r = compute_bounds(fam.network, fam.domain);
    unit_reports.push_back(compute_bounds(fam.network.with_unit_weights(), fam.domain));
    std::string name = "balloon(" + std::to_string(n) + ")";
    bool complete = r.r_max && r.r_dual_max && r.c_max && r.r_max_unit;
    tally.check(complete, "missing maxima for " + name);
    if (!complete) continue;
    auto nn = static_cast<unsigned long>(n);
    tally.check(r.r_max->value == Rational(2 * nn), name + " R_max=" + format_rational(r.r_max->value));
    tally.check(r.r_dual_max->value <= 1, name + " R'_max=" + format_rational(r.r_dual_max->value));
    tally.check(r.c_max->value == n, name + " C_max=" + std::to_string(r.c_max->value));
    tally.check(r.r_max_unit->value == Rational(nn + 1), name + " unweighted R_max=" + format_rational(r.r_max_unit->value));
  }
  family_reports() = unit_reports;
  std::ostringstream scope;
  scope << "line N=4,9,16,25 and balloon N=4,8,16 (exponents: cut " << format_double(cut_slope) << ", new "
        << format_double(new_slope) << ", old " << format_double(old_slope) << ")";
  return {0, "", tally.passed(), tally.summary(scope.str()), 0};
}

// --- 9 ---------------------------------------------------------------------

// With unit weights: R' <= C <= |E|, which squares to the bound ordering.
void check_dominance(Tally& tally, const BoundReport& r, const std::string& name, std::size_t& compared) {
  if (!r.r_max || !r.r_dual_max || !r.c_max) return;
  for (const Rational& w : r.weights) {
    if (w != 1) {
      tally.check(false, name + " does not have unit weights");
      return;
    }
  }
  ++compared;
  Rational cut(static_cast<unsigned long>(r.c_max->value));
  Rational edges(static_cast<unsigned long>(r.num_edges));
  tally.check(r.r_max->value * r.r_dual_max->value <= r.r_max_unit->value * cut,
              "bound_new > bound_cut on " + name);
  tally.check(r.r_max_unit->value * cut <= r.r_max_unit->value * edges, "bound_cut > bound_old on " + name);
  tally.check(*r.bound_new <= *r.bound_cut * (1 + 1e-12) && *r.bound_cut <= *r.bound_old * (1 + 1e-12),
              "floating bounds out of order on " + name);
}

CriterionResult bound_dominance() {
  Tally tally;
  std::size_t compared = 0;
  for (std::size_t d = 0; d <= kMaxNandDepth; ++d) {
    Formula f = build_nand_tree(d);
    BoundReport full = compute_bounds(formula_graph(f), full_assignments(f.num_variables()));
    check_dominance(tally, full, "NAND_" + std::to_string(d), compared);
    for (std::size_t k = 0; 2 * k <= d; ++k) {
      ExampleFamily fam = nand_kfault_family(d, k);
      check_dominance(tally, compute_bounds(fam.network, fam.domain), fam.name + fam.parameters, compared);
    }
  }
  if (exhaustive_product_reports().empty()) resistance_product();
  for (const auto& p : exhaustive_product_reports()) {
    if (p.bounds) check_dominance(tally, *p.bounds, describe_levels(p.levels), compared);
  }
  if (family_reports().empty()) example_families();
  for (const auto& r : family_reports()) check_dominance(tally, r, r.domain, compared);
  return {0, "", tally.passed(), tally.summary(std::to_string(compared) + " domains"), 0};
}

// --- 10 --------------------------------------------------------------------

constexpr std::size_t kGameInstances = 50;
constexpr std::size_t kGamesPerInstance = 1000;

CriterionResult game_cost() {
  Tally tally;
  Rng rng(20261010);
  std::size_t games = 0;
  std::size_t calls = 0;
  double worst_ratio = 0.0;
  for (std::size_t d = 2; d <= 10; ++d) {
    Formula f = build_nand_tree(d);
    std::size_t n = f.num_variables();
    std::vector<Assignment> instances;
    while (instances.size() < kGameInstances) {
      Assignment x(n);
      for (std::size_t b = 0; b < n; ++b) x.set(b, (rng() & 1U) != 0);
      if (eval_formula(f, x)) instances.push_back(x);
    }
    std::vector<std::uint64_t> seeds(instances.size());
    for (auto& s : seeds) s = rng();
    auto stats = parallel_map<GameStats>(instances.size(), [&](std::size_t i) {
      return simulate_game(NandInstance(d, instances[i]), seeds[i], kGamesPerInstance);
    });
    for (std::size_t i = 0; i < stats.size(); ++i) {
      const GameStats& s = stats[i];
      std::string at = "d=" + std::to_string(d) + " x=" + instances[i].to_string();
      games += s.games.size();
      calls += s.select_calls;
      worst_ratio = std::max(worst_ratio, s.mean_cost / s.bound);
      tally.check(s.games.size() == kGamesPerInstance, "wrong number of games at " + at);
      tally.check(s.wins == s.games.size(), "A lost a game at " + at);
      tally.check(s.within_bound(), "mean cost " + format_double(s.mean_cost) + " above bound at " + at);
      tally.check(s.guarantee_violations == 0, "Select guarantee violated at " + at);
    }
  }
  std::ostringstream scope;
  scope << "d=2..10, " << kGameInstances << " instances each, " << games << " games, " << calls
        << " Select calls, worst mean/bound " << format_double(worst_ratio);
  return {0, "", tally.passed(), tally.summary(scope.str()), 0};
}

// --- 11 --------------------------------------------------------------------

constexpr std::size_t kQpMaxEdges = 6;

CriterionResult approx_witness() {
  Tally tally;
  Rng rng(20261111);
  std::size_t inputs = 0;
  std::size_t qp_inputs = 0;
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(rng, FormulaShape{10, 4, 0.2});
    Network net = formula_graph(f);
    SpanProgram p(net);
    std::size_t n = f.num_variables();
    double l = static_cast<double>(std::max<std::size_t>(f.max_fan_in(), 1));
    double plus_bound = 0.5 * std::pow(l, static_cast<double>(f.and_depth()));
    double minus_bound = 2.0 * std::pow(l, static_cast<double>(f.or_depth()));
    std::string name = render_formula(f);
    std::size_t longest = longest_self_avoiding_path(net);
    tally.check(static_cast<double>(longest) <= std::pow(l, static_cast<double>(f.and_depth())),
                "longest path " + std::to_string(longest) + " too long in " + name);
    bool with_qp = n <= kQpMaxEdges;
    inputs += std::size_t{1} << n;
    if (with_qp) qp_inputs += std::size_t{1} << n;
    auto outcomes = parallel_map<Outcome>(std::size_t{1} << n, [&](std::size_t code) {
      Outcome o;
      Assignment x = Assignment::from_index(code, n);
      WitnessReport pos = approx_positive_witness(p, x);
      WitnessReport neg = approx_negative_witness(p, x);
      double wp = to_double(pos.size);
      double wn = to_double(neg.size);
      o.check(wp <= plus_bound * (1 + 1e-9), [&] { return "w~+ = " + format_double(wp) + " on " + where(f, x); });
      o.check(wn <= minus_bound * (1 + 1e-9), [&] { return "w~- = " + format_double(wn) + " on " + where(f, x); });
      if (with_qp) {
        QpWitness qp = qp_positive_witness(net, x);
        QpWitness qn = qp_negative_witness(net, x);
        o.check(std::fabs(pos.error - qp.error) <= 1e-7 && std::fabs(wp - qp.size) <= 1e-7,
                [&] { return "positive two-stage solve differs from the QP on " + where(f, x); });
        o.check(std::fabs(neg.error - qn.error) <= 1e-7 && std::fabs(wn - qn.size) <= 1e-7,
                [&] { return "negative two-stage solve differs from the QP on " + where(f, x); });
      }
      return o;
    });
    merge(tally, outcomes);
  }
  return {0, "", tally.passed(),
          tally.summary("200 formulas, " + std::to_string(inputs) + " inputs (" + std::to_string(qp_inputs) +
                        " against the QP)"),
          0};
}

// --- 12 --------------------------------------------------------------------

CriterionResult flow_decomposition() {
  Tally tally;
  Rng rng(20261212);
  std::vector<Network> nets;
  for (int i = 0; i < 100; ++i) nets.push_back(random_sp_network(rng, 10));
  for (std::size_t d = 0; d <= 3; ++d) nets.push_back(formula_graph(build_nand_tree(d)));
  std::size_t flows = 0;
  for (const Network& net : nets) {
    std::size_t edges = net.num_edges();
    SpEvaluator eval(net);
    auto outcomes = parallel_map<Outcome>(std::size_t{1} << edges, [&](std::size_t code) {
      Outcome o;
      Assignment x = Assignment::from_index(code, edges);
      SubgraphSelector sel{x, Polarity::kPrimal};
      ExtRational r = eval.resistance<Rational>(sel);
      if (r.is_infinite()) return o;
      Network g = subgraph(net, sel);
      auto at = [&] { return where(net, x); };
      OptimalFlow<Rational> best = optimal_flow<Rational>(g);
      auto axioms = check_flow_axioms<Rational>(g, best.flow);
      o.check(axioms.ok() && axioms.max_violation == 0, [&] { return "flow axioms fail on " + at(); });
      o.check(best.energy == r.value() && flow_energy(g, best.flow) == r.value(),
              [&] { return "flow energy != R on " + at(); });
      auto terms = decompose_flow(g, best.flow);
      o.check(recompose_flow(g, terms) == best.flow, [&] { return "recomposition differs on " + at(); });
      Rational path_sum = 0;
      bool positive = true;
      for (const auto& term : terms) {
        if (!term.is_cycle) path_sum += term.coefficient;
        positive = positive && term.coefficient > 0;
      }
      o.check(path_sum == 1 && positive, [&] { return "path coefficients do not sum to 1 on " + at(); });
      return o;
    });
    for (const auto& o : outcomes) flows += o.checks > 0 ? 1 : 0;
    merge(tally, outcomes);
  }
  return {0, "", tally.passed(), tally.summary(std::to_string(flows) + " optimal flows"), 0};
}

using CriterionFn = CriterionResult (*)();

struct Entry {
  CriterionInfo info;
  CriterionFn run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{1, "witness-identity", "w+ = R/2 and w- = 2R' on random series-parallel networks"}, witness_identity},
      {{2, "connectivity", "G(x) connects iff phi(x)=1 and G'(x) connects iff phi(x)=0"}, connectivity},
      {{3, "weight-certificate", "recursive weights give W+ W- <= N"}, weight_certificate},
      {{4, "nand-cut", "cut size 2^floor(d/2) on every 0-instance of NAND_d"}, nand_cut},
      {{5, "fault-example", "the depth-4 example instance has value 1 and F_A = 4"}, fault_example},
      {{6, "fault-resistance", "resistances bounded by fault complexity"}, fault_resistance},
      {{7, "resistance-product", "max R times max R' equals prod N_i / h_i"}, resistance_product},
      {{8, "example-families", "line and balloon maxima and bound exponents"}, example_families},
      {{9, "bound-dominance", "bound_new <= bound_cut <= bound_old with unit weights"}, bound_dominance},
      {{10, "game-cost", "Select-driven games win and stay under the cost bound"}, game_cost},
      {{11, "approx-witness", "approximate witness bounds and quadratic-program agreement"}, approx_witness},
      {{12, "flow-decomposition", "optimal flows satisfy the axioms and decompose exactly"}, flow_decomposition},
  };
  return table;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CriterionResult run_criterion(int id) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = e.run();
    } catch (const std::exception& ex) {
      result.passed = false;
      result.detail = std::string("exception: ") + ex.what();
    }
    result.id = id;
    result.name = e.info.name;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  throw DomainError("no criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_suite(std::string_view suite) {
  std::vector<CriterionResult> out;
  for (const auto& e : entries()) {
    bool wanted = suite == "all" || suite == e.info.name || suite == std::to_string(e.info.id);
    if (wanted) out.push_back(run_criterion(e.info.id));
  }
  if (out.empty()) throw DomainError("unknown suite '" + std::string(suite) + "'");
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.1f", r.seconds);
  out << (r.passed ? "PASS" : "FAIL") << " " << (r.id < 10 ? " " : "") << r.id << " " << r.name << " (" << seconds
      << " s): " << r.detail;
  return out.str();
}

}  // namespace ff::verify
