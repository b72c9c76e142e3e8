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

// Command-line front end: `ff <subcommand> [options]`. Exit codes are 0 on
// success, 1 when the library rejects an input and 2 on usage errors.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ff/ff.hpp"
#include "ff/verify/criteria.hpp"

namespace {

using namespace ff;

struct Options {
  bool json = false;
  std::size_t jobs = 0;

  std::string formula;
  std::string input;
  std::string output;
  std::string weights;
  std::string x;
  bool dual = false;
  std::string format = "dot";
  bool exact = false;
  bool as_float = false;
  std::string backend;
  bool show_witness = false;
  std::string kind = "pos";
  bool approx = false;
  std::size_t depth = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t reps = 1;
  std::string family;
  std::size_t n = 0;
  std::size_t h = 0;
  std::size_t samples = 4096;
  std::string levels;
  std::string mode = "exhaustive";
  std::string suite = "all";
};

std::vector<Rational> parse_weights(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    Rational w = parse_rational(item);
    if (w <= 0) throw DomainError("weights must be positive, got " + item);
    out.push_back(w);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw DomainError("cannot write " + o.output);
  out << text;
}

// The network named on the command line: the graph of -f (with -w
// weights) or an imported JSON file.
Network load_network(const Options& o) {
  if (!o.input.empty()) {
    Network net = import_network(read_file(o.input));
    if (!o.weights.empty()) net = net.with_weights(parse_weights(o.weights));
    return net;
  }
  if (o.formula.empty()) throw CLI::ValidationError("one of --formula or --input is required");
  return formula_graph(parse_formula(o.formula), parse_weights(o.weights));
}

Formula load_formula(const Options& o) {
  if (o.formula.empty()) throw CLI::ValidationError("--formula is required");
  return parse_formula(o.formula);
}

Assignment load_assignment(const Options& o) {
  if (o.x.empty()) throw CLI::ValidationError("--input-bits is required");
  return Assignment::parse(o.x);
}

std::string vertex_name(const Network& net, std::size_t v) { return net.vertices()[v]; }

// Left-aligned two-column table.
std::string table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& r : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << r.first << r.second << '\n';
  return out.str();
}

template <typename T>
std::string show(const std::optional<Maximum<T>>& m) {
  if (!m) return "-";
  std::ostringstream out;
  if constexpr (std::is_same_v<T, Rational>) {
    out << format_rational(m->value);
  } else {
    out << m->value;
  }
  out << "  (x=" << m->input.to_string() << ")";
  return out.str();
}

std::string show(const std::optional<double>& v) { return v ? format_double(*v) : "-"; }

// --- subcommands -------------------------------------------------------------

int cmd_parse(const Options& o) {
  Formula f = load_formula(o);
  if (o.json) {
    std::cout << json::formula(f);
  } else {
    std::cout << render_formula(f) << '\n' << describe_formula(f);
  }
  return 0;
}

int cmd_graph(const Options& o) {
  Network net = load_network(o);
  if (o.dual) net = dual_network(net);
  GraphFormat format = o.format == "json" || o.json ? GraphFormat::kJson : GraphFormat::kDot;
  write_output(o, export_network(net, format));
  return 0;
}

int cmd_resist(const Options& o) {
  Network net = load_network(o);
  Assignment x = load_assignment(o);
  if (x.size() != net.num_edges()) {
    throw DomainError("assignment has " + std::to_string(x.size()) + " bits for " + std::to_string(net.num_edges()) +
                      " edges");
  }
  Network host = o.dual ? dual_network(net) : net;
  Network g = subgraph(host, SubgraphSelector{x, o.dual ? Polarity::kDual : Polarity::kPrimal});
  ResistanceBackend backend = ResistanceBackend::kLaplacian;
  if (o.backend == "sp" || (o.backend.empty() && host.sp_tree())) backend = ResistanceBackend::kSeriesParallel;
  // The series-parallel rules run on the host's decomposition with absent
  // edges removed, so they need the host's tree rather than the subgraph's.
  auto compute = [&]<typename Scalar>() -> Extended<Scalar> {
    if (backend == ResistanceBackend::kSeriesParallel) {
      if (!host.sp_tree()) throw DomainError("the series-parallel backend needs a series-parallel network");
      SpEvaluator eval(host);
      return eval.resistance<Scalar>(SubgraphSelector{x, o.dual ? Polarity::kDual : Polarity::kPrimal});
    }
    return effective_resistance<Scalar>(g, backend);
  };
  if (o.as_float) {
    ExtReal r = compute.operator()<double>();
    std::cout << (o.json ? json::resistance(r) : to_string(r) + "\n");
  } else {
    ExtRational r = compute.operator()<Rational>();
    std::cout << (o.json ? json::resistance(r) : to_string(r) + "\n");
  }
  return 0;
}

int cmd_flow(const Options& o) {
  Network net = load_network(o);
  Assignment x = load_assignment(o);
  Network g = subgraph(net, SubgraphSelector{x, Polarity::kPrimal});
  if (!terminals_connected(g)) throw DomainError("s and t are not connected in G(x); no unit flow exists");
  OptimalFlow<Rational> best = optimal_flow<Rational>(g);
  auto terms = decompose_flow(g, best.flow);
  if (o.json) {
    std::cout << json::flow(g, best, terms);
    return 0;
  }
  std::cout << "energy " << format_rational(best.energy) << '\n';
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edges()[k];
    std::cout << "  " << vertex_name(g, e.u) << " -> " << vertex_name(g, e.v) << " [" << e.label
              << "]  " << format_rational(best.flow.forward_values()[k]) << '\n';
  }
  std::cout << "decomposition\n";
  for (const auto& term : terms) {
    std::cout << "  " << (term.is_cycle ? "cycle " : "path  ") << format_rational(term.coefficient) << " :";
    for (const auto& d : term.edges) {
      const Edge& e = g.edges()[d.edge];
      std::cout << ' ' << (d.forward ? "+" : "-") << e.label;
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_cut(const Options& o) {
  Network net = load_network(o);
  Assignment x = load_assignment(o);
  CutBackend backend = o.backend == "sp" ? CutBackend::kSeriesParallel : CutBackend::kMaxFlow;
  ExtCount size = cut_size(net, x, backend);
  std::optional<CutAssignment> witness;
  if (o.show_witness && size.is_finite()) witness = witness_cut(net, x);
  if (o.json) {
    std::cout << json::cut(net, size, witness ? &*witness : nullptr);
    return 0;
  }
  std::cout << to_string(size) << '\n';
  if (witness) {
    std::cout << "s side:";
    for (std::size_t v = 0; v < net.num_vertices(); ++v) {
      if (witness->side[v]) std::cout << ' ' << vertex_name(net, v);
    }
    std::cout << "\ncrossing " << witness->crossing << '\n';
  }
  return 0;
}

WitnessKind parse_kind(const std::string& kind) {
  static const std::map<std::string, WitnessKind> kinds = {{"pos", WitnessKind::kPositive},
                                                           {"neg", WitnessKind::kNegative},
                                                           {"approx-pos", WitnessKind::kApproxPositive},
                                                           {"approx-neg", WitnessKind::kApproxNegative}};
  return kinds.at(kind);
}

int cmd_witness(const Options& o) {
  Network net = load_network(o);
  Assignment x = load_assignment(o);
  SpanProgram p(net);
  WitnessReport r = witness(p, x, parse_kind(o.kind));
  if (o.json) {
    std::cout << json::witness(r);
    return 0;
  }
  std::vector<std::pair<std::string, std::string>> rows = {
      {"kind", to_string(r.kind)},
      {"size", r.exact_size ? to_string(*r.exact_size) : to_string(r.size)},
      {"error", format_double(r.error)},
      {"constraint residual", format_double(r.constraint_residual)},
      {"size residual", format_double(r.size_residual)},
  };
  if (r.bound) rows.emplace_back("bound", format_double(*r.bound) + (r.bound_holds ? " (holds)" : " (VIOLATED)"));
  std::string vec;
  for (double v : r.witness) vec += (vec.empty() ? "" : " ") + format_double(v);
  rows.emplace_back("witness", vec.empty() ? "-" : vec);
  std::cout << table(rows);
  return 0;
}

int cmd_weights(const Options& o) {
  Formula f = load_formula(o);
  WeightCertificate cert = optimal_weights(f);
  if (o.json) {
    std::cout << json::certificate(cert);
    return 0;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (std::size_t i = 0; i < cert.weights.size(); ++i) {
    rows.emplace_back("x" + std::to_string(i + 1), format_rational(cert.weights[i]));
  }
  rows.emplace_back("W+", format_rational(cert.w_plus));
  rows.emplace_back("W-", format_rational(cert.w_minus));
  rows.emplace_back("bound", format_rational(cert.bound));
  std::cout << table(rows);
  return 0;
}

int cmd_extrema(const Options& o) {
  Formula f = load_formula(o);
  SpanProgram p(formula_graph(f, parse_weights(o.weights)));
  WitnessExtrema e = witness_extrema(p, full_assignments(f.num_variables()), f, o.approx);
  if (o.json) {
    std::cout << json::extrema(e);
    return 0;
  }
  auto side = [](const std::optional<ExtRational>& v, const std::optional<Assignment>& arg) {
    if (!v) return std::string("-");
    return to_string(*v) + "  (x=" + arg->to_string() + ")";
  };
  std::vector<std::pair<std::string, std::string>> rows = {
      {"W+", side(e.w_plus, e.argmax_plus)},
      {"W-", side(e.w_minus, e.argmax_minus)},
      {"sqrt(W+ W-)", show(e.bound())},
      {"1-inputs", std::to_string(e.ones)},
      {"0-inputs", std::to_string(e.zeros)},
  };
  if (o.approx) {
    rows.emplace_back("approx W+", show(e.approx_plus));
    rows.emplace_back("approx W-", show(e.approx_minus));
  }
  std::cout << table(rows);
  return 0;
}

int cmd_fault(const Options& o) {
  FaultReport r = fault_complexity(o.depth, load_assignment(o));
  if (o.json) {
    std::cout << json::fault(r);
  } else {
    std::cout << "F_A=" << to_string(r.f_a) << " F_B=" << to_string(r.f_b) << " F=" << to_string(r.f) << '\n';
  }
  return 0;
}

int cmd_kfault(const Options& o) {
  Assignment x = load_assignment(o);
  bool member = is_k_fault(o.depth, o.k, x);
  FaultReport r = fault_complexity(o.depth, x);
  if (o.json) {
    std::cout << "{\n  \"k_fault\": " << (member ? "true" : "false") << ",\n  \"F\": \"" << to_string(r.f)
              << "\"\n}\n";
  } else {
    std::cout << (member ? "yes" : "no") << " (F=" << to_string(r.f) << ", k=" << o.k << ")\n";
  }
  return 0;
}

int cmd_game(const Options& o) {
  GameStats stats = simulate_game(o.depth, load_assignment(o), o.seed, o.reps);
  if (o.json) {
    std::cout << json::game(stats);
    return 0;
  }
  std::cout << table({
      {"seed", std::to_string(stats.seed)},
      {"games", std::to_string(stats.games.size())},
      {"A wins", std::to_string(stats.wins)},
      {"Select calls", std::to_string(stats.select_calls)},
      {"guarantee violations", std::to_string(stats.guarantee_violations)},
      {"R", format_double(stats.root_resistance)},
      {"mean cost", format_double(stats.mean_cost)},
      {"bound", format_double(stats.bound)},
      {"within bound", stats.within_bound() ? "yes" : "no"},
      {"naive cost", format_double(naive_cost(std::max<std::size_t>(o.depth, 1)))},
  });
  return 0;
}

int cmd_bounds(const Options& o) {
  ExampleFamily fam = [&] {
    if (o.family == "line") return line_family(o.n, o.h);
    if (o.family == "balloon") return balloon_family(o.n);
    return nand_kfault_family(o.depth, o.k, o.samples, o.seed);
  }();
  BoundReport r = compute_bounds(fam.network, fam.domain);
  if (o.json) {
    std::cout << json::bounds(r);
    return 0;
  }
  std::cout << table({
      {"family", fam.name + " " + fam.parameters},
      {"domain", r.domain + (r.exhaustive ? "" : " (sampled: maxima are lower estimates)")},
      {"1-inputs / 0-inputs", std::to_string(r.ones) + " / " + std::to_string(r.zeros)},
      {"|E|", std::to_string(r.num_edges)},
      {"R_max", show(r.r_max)},
      {"R'_max", show(r.r_dual_max)},
      {"C_max", show(r.c_max)},
      {"R_max (unit weights)", show(r.r_max_unit)},
      {"bound_old", show(r.bound_old)},
      {"bound_cut", show(r.bound_cut)},
      {"bound_new", show(r.bound_new)},
  });
  return 0;
}

// "and:4:2,or:2:1" -> levels from the root down.
std::vector<PromiseLevel> parse_levels(const std::string& text) {
  std::vector<PromiseLevel> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::stringstream parts(item);
    std::string kind, n, h;
    if (!std::getline(parts, kind, ':') || !std::getline(parts, n, ':') || !std::getline(parts, h, ':') ||
        (kind != "and" && kind != "or")) {
      throw CLI::ValidationError("--levels", "expected kind:N:h items such as and:4:2, got '" + item + "'");
    }
    out.push_back({kind == "and" ? GateKind::kAnd : GateKind::kOr, std::stoul(n), std::stoul(h)});
  }
  if (out.empty()) throw CLI::ValidationError("--levels", "at least one level is required");
  return out;
}

int cmd_product(const Options& o) {
  ProductMode mode = o.mode == "structural" ? ProductMode::kStructural : ProductMode::kExhaustive;
  ProductReport r = verify_resistance_product(parse_levels(o.levels), mode);
  if (o.json) {
    std::cout << json::product(r);
    return 0;
  }
  std::cout << table({
      {"mode", mode == ProductMode::kStructural ? "structural" : "exhaustive"},
      {"domain size", mode == ProductMode::kStructural ? "-" : std::to_string(r.domain_size)},
      {"max R", format_rational(r.r_max)},
      {"max R'", format_rational(r.r_dual_max)},
      {"product", format_rational(r.product)},
      {"prod N/h", format_rational(r.expected)},
      {"equal", r.equal ? "yes" : "no"},
      {"quantum bound", format_double(r.quantum_bound)},
  });
  return r.equal ? 0 : 1;
}

int cmd_verify(const Options& o) {
  bool all = true;
  std::vector<verify::CriterionResult> results;
  for (const auto& r : verify::run_suite(o.suite)) {
    if (!o.json) {
      std::cout << verify::format_result(r) << std::endl;
    }
    all = all && r.passed;
    results.push_back(r);
  }
  if (o.json) {
    std::cout << "[\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      std::string detail;
      for (char c : r.detail) {
        if (c == '"' || c == '\\') detail += '\\';
        detail += c;
      }
      std::cout << "  {\"id\": " << r.id << ", \"name\": \"" << r.name << "\", \"passed\": "
                << (r.passed ? "true" : "false") << ", \"seconds\": " << format_double(r.seconds)
                << ", \"detail\": \"" << detail << "\"}" << (i + 1 < results.size() ? "," : "") << '\n';
    }
    std::cout << "]\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Formula evaluation through st-connectivity: resistances, witnesses, cuts and games."};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_flag("--json", o.json, "Machine-readable output");
  const char* env_jobs = std::getenv("FF_JOBS");
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps (default: FF_JOBS, else hardware threads)");

  auto formula_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-f,--formula", o.formula, "Formula such as \"(x1&x2)|x3\"");
    if (required) opt->required();
  };
  auto network_opts = [&](CLI::App* sub) {
    formula_opt(sub, false);
    sub->add_option("-i,--input", o.input, "Network JSON file instead of a formula");
    sub->add_option("-w,--weights", o.weights, "Comma-separated edge weights, e.g. 1,1/2,3");
  };
  auto bits_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-x,--input-bits", o.x, "Assignment bitstring, leftmost bit is x1");
    if (required) opt->required();
  };

  auto* parse = app.add_subcommand("parse", "Parse and normalize a formula");
  formula_opt(parse, true);

  auto* graph = app.add_subcommand("graph", "Export the formula graph or its dual");
  network_opts(graph);
  graph->add_flag("--dual", o.dual, "Export the dual network");
  graph->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("-o,--output", o.output, "Write to a file instead of stdout");

  auto* resist = app.add_subcommand("resist", "Effective resistance of G(x), or of G'(x) with --dual");
  network_opts(resist);
  bits_opt(resist, true);
  resist->add_flag("--dual", o.dual, "Use the dual network and the dual selection");
  auto* exact = resist->add_flag("--exact", o.exact, "Exact rational arithmetic (default)");
  auto* as_float = resist->add_flag("--float", o.as_float, "Double precision");
  exact->excludes(as_float);
  resist->add_option("--backend", o.backend, "Solver")->check(CLI::IsMember({"sp", "laplacian"}));

  auto* flow = app.add_subcommand("flow", "Optimal unit flow on G(x) and its path/cycle decomposition");
  network_opts(flow);
  bits_opt(flow, true);

  auto* cut = app.add_subcommand("cut", "Cut size C_{s,t}(G(x))");
  network_opts(cut);
  bits_opt(cut, true);
  cut->add_option("--backend", o.backend, "Algorithm")->check(CLI::IsMember({"maxflow", "sp"}));
  cut->add_flag("--witness", o.show_witness, "Also print a minimum cut");

  auto* wit = app.add_subcommand("witness", "Span-program witness for one input");
  network_opts(wit);
  bits_opt(wit, true);
  wit->add_option("--kind", o.kind, "Witness kind")->check(CLI::IsMember({"pos", "neg", "approx-pos", "approx-neg"}));

  auto* weights = app.add_subcommand("weights", "Recursive edge weights with W+ W- <= N");
  formula_opt(weights, true);

  auto* extrema = app.add_subcommand("extrema", "W+ and W- over all inputs");
  formula_opt(extrema, true);
  extrema->add_option("-w,--weights", o.weights, "Comma-separated edge weights");
  extrema->add_flag("--approx", o.approx, "Also maximise the approximate witness sizes");

  auto* fault = app.add_subcommand("fault", "Fault complexity of a NAND-tree input");
  fault->add_option("-d,--depth", o.depth, "Tree depth")->required();
  bits_opt(fault, true);

  auto* kfault = app.add_subcommand("kfault", "k-fault membership of a NAND-tree input");
  kfault->add_option("-d,--depth", o.depth, "Tree depth")->required();
  kfault->add_option("-k", o.k, "Fault level")->required();
  bits_opt(kfault, true);

  auto* game = app.add_subcommand("game", "Play Select against a random opponent");
  game->add_option("-d,--depth", o.depth, "Tree depth")->required();
  bits_opt(game, true);
  game->add_option("--seed", o.seed, "Seed for the opponent's coin")->required();
  game->add_option("--reps", o.reps, "Number of games")->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "Query-complexity bounds for an example family");
  // --h is the promise parameter here, so help is only reachable as --help.
  bounds->set_help_flag("--help", "Print this help message and exit");
  bounds->add_option("--family", o.family, "Family")->required()->check(CLI::IsMember({"line", "balloon", "nand"}));
  bounds->add_option("--n", o.n, "N (line, balloon)");
  bounds->add_option("--h", o.h, "h (line)");
  bounds->add_option("--d", o.depth, "Depth (nand)");
  bounds->add_option("--k", o.k, "Fault level (nand)");
  bounds->add_option("--samples", o.samples, "Sampled inputs when d > 4 (nand)");
  bounds->add_option("--seed", o.seed, "Sampling seed when d > 4 (nand)");

  auto* product = app.add_subcommand("product", "Resistance product over a composed promise");
  product->add_option("--levels", o.levels, "Levels from the root down, e.g. or:2:1,and:2:1")->required();
  product->add_option("--mode", o.mode, "Maximisation method")->check(CLI::IsMember({"exhaustive", "structural"}));

  auto* verify = app.add_subcommand("verify", "Run acceptance checks");
  verify->add_option("--suite", o.suite, "Criterion number, name, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (o.jobs == 0 && env_jobs != nullptr) o.jobs = std::strtoul(env_jobs, nullptr, 10);
    if (o.jobs > 0) set_sweep_jobs(o.jobs);
    if (*bounds && o.family == "line" && (o.n == 0 || o.h == 0)) throw CLI::ValidationError("line needs --n and --h");
    if (*bounds && o.family == "balloon" && o.n == 0) throw CLI::ValidationError("balloon needs --n");
    if (*game && o.reps == 0) o.reps = 1;

    if (*parse) return cmd_parse(o);
    if (*graph) return cmd_graph(o);
    if (*resist) return cmd_resist(o);
    if (*flow) return cmd_flow(o);
    if (*cut) return cmd_cut(o);
    if (*wit) return cmd_witness(o);
    if (*weights) return cmd_weights(o);
    if (*extrema) return cmd_extrema(o);
    if (*fault) return cmd_fault(o);
    if (*kfault) return cmd_kfault(o);
    if (*game) return cmd_game(o);
    if (*bounds) return cmd_bounds(o);
    if (*product) return cmd_product(o);
    if (*verify) return cmd_verify(o);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
