#include "kham/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>

#include "kham/conditions.hpp"
#include "kham/constructive.hpp"
#include "kham/enumerate.hpp"
#include "kham/error.hpp"
#include "kham/extremal.hpp"
#include "kham/io.hpp"
#include "kham/oracle.hpp"

namespace kham {

namespace {

struct Config {
  int k = 0;
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  int oracle_cap = kDefaultOracleCap;
  std::string input;
  std::string output;
  bool record = false;
  bool theorem11 = false;
  std::string cycle;
  int min_edges = 0;
  std::optional<int> max_edges;
  int min_degree = 0;
  int jobs = 1;
  std::string counterexamples;
  int deletions = 0;
  std::uint64_t trials = 0;
  bool override_budget = false;
  bool exhaustive = false;
  std::string failures;
};

KPartiteGraph load(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

void add_shape(CLI::App* sub, Config& c) {
  sub->add_option("k", c.k, "number of parts")->required();
  sub->add_option("n", c.n, "vertices per part")->required();
}

void add_file(CLI::App* sub, Config& c) {
  sub->add_option("file", c.input, "graph file")->required();
}

std::string oracle_text(const OracleAnswer& a) {
  std::string out = std::string("hamiltonian=") + (a.hamiltonian ? "true" : "false");
  if (a.cycle) {
    out += " cycle=";
    for (std::size_t i = 0; i < a.cycle->vertices.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(a.cycle->vertices[i]);
    }
  }
  return out + "\n";
}

std::string dispatch(const std::string& name, const Config& c) {
  if (name == "gen-complete") return write_graph(new_complete(c.k, c.n));
  if (name == "gen-tight") return write_graph(tight_non_hamiltonian(c.k, c.n));
  if (name == "gen-random") return write_graph(random_graph_at_edge_count(c.k, c.n, c.m, c.seed));
  if (name == "check") {
    const ConditionReport report = evaluate(load(c.input));
    return c.record ? to_record(report) + "\n" : to_text_block(report);
  }
  if (name == "solve") {
    const KPartiteGraph g = load(c.input);
    return to_text(c.theorem11 ? solve_theorem11(g) : solve(g));
  }
  if (name == "validate") {
    const KPartiteGraph g = load(c.input);
    const CycleCheck check = validate_cycle(g.graph(), parse_cycle(c.cycle));
    return check.valid ? "valid\n" : "invalid " + check.reason + "\n";
  }
  if (name == "oracle") {
    const KPartiteGraph g = load(c.input);
    return oracle_text(is_hamiltonian(g.graph(), c.oracle_cap));
  }
  if (name == "enumerate") {
    SweepOptions options;
    options.min_edges = c.min_edges;
    options.max_edges = c.max_edges;
    options.min_degree = c.min_degree;
    options.mode = c.theorem11 ? SolverMode::Relaxed : SolverMode::Threshold;
    options.jobs = c.jobs;
    options.oracle_cap = c.oracle_cap;
    const EnumerationSummary summary = sweep(c.k, c.n, options);
    if (!c.counterexamples.empty()) write_text_file(c.counterexamples, counterexamples_text(summary));
    return to_record(summary) + "\n";
  }
  if (name == "faults") {
    FaultOptions options;
    options.allow_over_budget = c.override_budget;
    options.jobs = c.jobs;
    options.oracle_cap = c.oracle_cap;
    const FaultReport report =
        c.exhaustive ? fault_tolerance_exhaustive(c.k, c.n, c.deletions, options)
                     : fault_tolerance_trial(c.k, c.n, c.deletions, c.trials, c.seed, options);
    if (!c.failures.empty()) write_text_file(c.failures, failures_text(report));
    return to_record(report) + "\n";
  }
  throw Error(ErrorKind::InvalidArgument, "unknown subcommand " + name);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Hamilton cycles in balanced k-partite graphs", "kham"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.add_option("--oracle-cap", c.oracle_cap, "largest order the oracle accepts")
      ->check(CLI::Range(3, kMaxOracleCap));
  app.add_option("-o,--output", c.output, "write output to this file instead of stdout");

  auto* gen_complete = app.add_subcommand("gen-complete", "write CG(k,n)");
  add_shape(gen_complete, c);
  auto* gen_tight = app.add_subcommand("gen-tight", "write the tight non-Hamiltonian graph");
  add_shape(gen_tight, c);
  auto* gen_random = app.add_subcommand("gen-random", "write a uniform m-edge subgraph of CG(k,n)");
  add_shape(gen_random, c);
  gen_random->add_option("m", c.m, "edge count")->required();
  gen_random->add_option("--seed", c.seed, "RNG seed")->required();

  auto* check = app.add_subcommand("check", "evaluate every sufficient condition");
  add_file(check, c);
  check->add_flag("--record", c.record, "single-line record");

  auto* solve_cmd = app.add_subcommand("solve", "construct a Hamilton cycle");
  add_file(solve_cmd, c);
  solve_cmd->add_flag("--theorem11", c.theorem11, "accept threshold-1 edges with min degree >= 2");

  auto* validate = app.add_subcommand("validate", "check a proposed Hamilton cycle");
  add_file(validate, c);
  validate->add_option("--cycle", c.cycle, "vertex ids, space or comma separated")->required();

  auto* oracle = app.add_subcommand("oracle", "exact Hamiltonicity by search");
  add_file(oracle, c);

  auto* enumerate = app.add_subcommand("enumerate", "sweep every edge subset of CG(k,n)");
  add_shape(enumerate, c);
  enumerate->add_option("--min-edges", c.min_edges, "smallest subset size")->required();
  enumerate->add_option("--max-edges", c.max_edges, "largest subset size");
  enumerate->add_option("--min-degree", c.min_degree, "skip subsets below this minimum degree");
  enumerate->add_flag("--theorem11", c.theorem11, "check solve_theorem11 instead of solve");
  enumerate->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--counterexamples", c.counterexamples, "write non-Hamiltonian graphs here");

  auto* faults = app.add_subcommand("faults", "random edge deletions from CG(k,n)");
  add_shape(faults, c);
  faults->add_option("--deletions", c.deletions, "edges deleted per trial")->required();
  auto* trials = faults->add_option("--trials", c.trials, "number of trials");
  auto* seed = faults->add_option("--seed", c.seed, "RNG seed");
  auto* exhaustive = faults->add_flag("--exhaustive", c.exhaustive, "every deletion set instead of trials");
  trials->excludes(exhaustive)->needs(seed);
  seed->excludes(exhaustive)->needs(trials);
  faults->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  faults->add_flag("--override-budget", c.override_budget, "allow more than (k-1)n-2 deletions");
  faults->add_option("--failures", c.failures, "write graphs that lost Hamiltonicity here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (faults->parsed() && !c.exhaustive && trials->count() == 0) {
      throw CLI::RequiredError("--trials and --seed (or --exhaustive)");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    err << "error: " << e.what() << "\n" << failing->help();
    return 2;
  }

  try {
    const std::string text = dispatch(app.get_subcommands().front()->get_name(), c);
    if (c.output.empty()) {
      out << text;
    } else {
      write_text_file(c.output, text);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace kham
