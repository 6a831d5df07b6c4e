#include "kham/enumerate.hpp"

#include <algorithm>

#include "kham/conditions.hpp"
#include "kham/error.hpp"
#include "kham/io.hpp"
#include "parallel.hpp"

namespace kham {

namespace {

void merge_into(EnumerationSummary& into, EnumerationSummary&& part) {
  into.total += part.total;
  into.hamiltonian += part.hamiltonian;
  into.non_hamiltonian += part.non_hamiltonian;
  into.solver_runs += part.solver_runs;
  into.solver_agreements += part.solver_agreements;
  into.solver_disagreements += part.solver_disagreements;
  into.solver_fallbacks += part.solver_fallbacks;
  for (int b = 0; b < kBranchCount; ++b) into.branch_counts[b] += part.branch_counts[b];
  for (auto& c : part.counterexamples) into.counterexamples.push_back(std::move(c));
}

struct SweepJob {
  int k;
  int n;
  const SweepOptions& options;
  const std::vector<Edge>& host;
  int threshold;
  int max_edges;

  bool solver_applies(int edges, int min_degree) const {
    if (options.mode == SolverMode::Threshold) return edges >= threshold;
    return edges >= threshold - 1 && min_degree >= 2;
  }

  void visit(std::uint64_t mask, EnumerationSummary& out) const {
    std::vector<Edge> edges;
    edges.reserve(host.size());
    for (std::uint64_t s = mask; s; s &= s - 1) edges.push_back(host[std::countr_zero(s)]);
    const KPartiteGraph g = from_edge_list(k, n, edges);
    const int min_degree = g.graph().min_degree();
    if (min_degree < options.min_degree) return;

    ++out.total;
    const OracleAnswer truth = is_hamiltonian(g.graph(), options.oracle_cap);
    if (truth.hamiltonian) {
      ++out.hamiltonian;
    } else {
      ++out.non_hamiltonian;
      out.counterexamples.push_back(edges);
    }

    if (!solver_applies(static_cast<int>(edges.size()), min_degree)) return;
    const SolveResult result =
        options.mode == SolverMode::Threshold ? solve(g) : solve_theorem11(g);
    ++out.solver_runs;
    for (Branch b : result.trace) ++out.branch_counts[static_cast<int>(b)];
    if (result.used_fallback()) ++out.solver_fallbacks;
    if (result.cycle) {
      if (validate_cycle(g.graph(), *result.cycle).valid && truth.hamiltonian) {
        ++out.solver_agreements;
      } else {
        ++out.solver_disagreements;
      }
    } else if (result.failure != SolveFailure::NotHamiltonian || truth.hamiltonian) {
      ++out.solver_disagreements;
    }
  }

  void run_range(std::uint64_t begin, std::uint64_t end, EnumerationSummary& out) const {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const int edges = std::popcount(mask);
      if (edges < options.min_edges || edges > max_edges) continue;
      visit(mask, out);
    }
  }
};

}  // namespace

EnumerationSummary sweep(int k, int n, const SweepOptions& options) {
  if (k == 2 && n == 1) throw Error(ErrorKind::TooSmall, "G(2,1) has only 2 vertices");
  const std::vector<Edge> host = host_edges(k, n);
  const int host_size = static_cast<int>(host.size());
  if (host_size > kMaxSweepHostEdges) {
    throw Error(ErrorKind::TooLarge, "host has " + std::to_string(host_size) +
                                         " edges; sweeps are limited to " +
                                         std::to_string(kMaxSweepHostEdges));
  }
  if (k * n > options.oracle_cap) {
    throw Error(ErrorKind::TooLarge, "k*n exceeds oracle cap " + std::to_string(options.oracle_cap));
  }

  const SweepJob job{k, n, options, host, edge_threshold(k, n),
                     std::min(options.max_edges.value_or(host_size), host_size)};
  const std::uint64_t masks = std::uint64_t{1} << host_size;
  const std::uint64_t chunks = std::min<std::uint64_t>(masks, 256);
  const std::uint64_t chunk_size = masks / chunks;

  std::vector<EnumerationSummary> parts(chunks);
  detail::parallel_chunks(chunks, options.jobs, [&](std::uint64_t c) {
    job.run_range(c * chunk_size, (c + 1) * chunk_size, parts[c]);
  });

  EnumerationSummary summary;
  summary.k = k;
  summary.n = n;
  for (auto& part : parts) merge_into(summary, std::move(part));
  return summary;
}

EnumerationSummary enumerate_threshold_sweep(int k, int n, int min_edges, int jobs) {
  SweepOptions options;
  options.min_edges = min_edges;
  options.jobs = jobs;
  return sweep(k, n, options);
}

std::string to_record(const EnumerationSummary& s) {
  std::string out = "total=" + std::to_string(s.total) +
                    " non_hamiltonian=" + std::to_string(s.non_hamiltonian) +
                    " hamiltonian=" + std::to_string(s.hamiltonian) +
                    " solver_runs=" + std::to_string(s.solver_runs) +
                    " solver_agreements=" + std::to_string(s.solver_agreements) +
                    " solver_disagreements=" + std::to_string(s.solver_disagreements) +
                    " solver_fallbacks=" + std::to_string(s.solver_fallbacks);
  for (int b = 0; b < kBranchCount; ++b) {
    out += " branch.";
    out += to_string(static_cast<Branch>(b));
    out += "=" + std::to_string(s.branch_counts[b]);
  }
  out += " k=" + std::to_string(s.k) + " n=" + std::to_string(s.n);
  return out;
}

std::string counterexamples_text(const EnumerationSummary& s) {
  std::string out;
  for (std::size_t i = 0; i < s.counterexamples.size(); ++i) {
    if (i) out += "\n";
    out += write_graph(from_edge_list(s.k, s.n, s.counterexamples[i]));
  }
  return out;
}

}  // namespace kham
