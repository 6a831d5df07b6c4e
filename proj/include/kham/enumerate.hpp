#pragma once

// Exhaustive sweeps over edge subsets of CG_{k,n}, cross-checking the oracle
// against the constructive solver on every instance.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kham/constructive.hpp"
#include "kham/graph.hpp"
#include "kham/oracle.hpp"

namespace kham {

// Subset enumeration is limited to hosts with at most this many edges.
inline constexpr int kMaxSweepHostEdges = 28;

enum class SolverMode {
  Threshold,  // run `solve` on instances with edge_count >= threshold
  Relaxed,    // run `solve_theorem11` on instances with >= threshold-1 edges and δ >= 2
};

struct SweepOptions {
  int min_edges = 0;
  std::optional<int> max_edges;
  int min_degree = 0;  // instances below this minimum degree are skipped
  SolverMode mode = SolverMode::Threshold;
  int jobs = 1;
  int oracle_cap = kDefaultOracleCap;
};

struct EnumerationSummary {
  int k = 0;
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t hamiltonian = 0;
  std::uint64_t non_hamiltonian = 0;
  std::uint64_t solver_runs = 0;
  std::uint64_t solver_agreements = 0;     // solver cycle validated and oracle agrees
  std::uint64_t solver_disagreements = 0;  // any other solver/oracle mismatch
  std::uint64_t solver_fallbacks = 0;      // solved instances whose trace used SearchFallback
  std::array<std::uint64_t, kBranchCount> branch_counts{};  // tag occurrences over all traces
  std::vector<std::vector<Edge>> counterexamples;          // non-Hamiltonian instances, colex order
};

// Edge subsets are visited in colexicographic order of the sorted host edge
// list, i.e. ascending bitmask. Work is split into fixed chunks merged in
// order, so the summary is identical for any `jobs`.
EnumerationSummary sweep(int k, int n, const SweepOptions& options);

// Every edge subset with at least `min_edges` edges, checked against `solve`.
EnumerationSummary enumerate_threshold_sweep(int k, int n, int min_edges, int jobs = 1);

// Single-line `key=value` record, no trailing newline.
std::string to_record(const EnumerationSummary& summary);

// Counterexamples in the graph text format, separated by blank lines.
std::string counterexamples_text(const EnumerationSummary& summary);

}  // namespace kham
