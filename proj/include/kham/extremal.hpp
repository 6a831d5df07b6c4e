#pragma once

// Sharpness witnesses and the edge-fault experiment on CG_{k,n}.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kham/graph.hpp"
#include "kham/oracle.hpp"

namespace kham {

// Name of the generator behind every seeded routine here.
inline constexpr const char* kRngName = "mt19937_64";

// Uniform integer in [0, bound) by rejection on raw 64-bit draws, so results
// do not depend on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// CG_{k,n} with every edge at vertex 0 removed except the one to vertex n:
// threshold − 1 edges and a degree-1 vertex.
KPartiteGraph tight_non_hamiltonian(int k, int n);

// Uniform m-edge subgraph of CG_{k,n}.
KPartiteGraph random_graph_at_edge_count(int k, int n, int m, std::uint64_t seed);

// (k−1)n − 2, the number of deletions CG_{k,n} absorbs under the edge threshold.
int deletion_budget(int k, int n);

struct FaultOptions {
  bool allow_over_budget = false;
  int jobs = 1;
  int oracle_cap = kDefaultOracleCap;
};

struct FaultReport {
  int k = 0;
  int n = 0;
  std::uint64_t trials = 0;
  int deletions_per_trial = 0;
  std::uint64_t survived = 0;
  std::vector<std::vector<Edge>> failures;  // deleted edge sets that broke Hamiltonicity
  std::uint64_t seed = 0;
  std::string rng = kRngName;
  bool exhaustive = false;
  std::uint64_t oracle_checked = 0;
  std::uint64_t solver_fallbacks = 0;
  std::uint64_t disagreements = 0;  // solver and oracle differ on a trial
};

// Trial t deletes `deletions` uniform distinct edges drawn with seed + t.
// Throws BudgetExceeded past the deletion budget unless allowed.
FaultReport fault_tolerance_trial(int k, int n, int deletions, std::uint64_t trials,
                                  std::uint64_t seed, const FaultOptions& options = {});

// Every `deletions`-subset of the host edges, in colex order.
FaultReport fault_tolerance_exhaustive(int k, int n, int deletions,
                                       const FaultOptions& options = {});

// Single-line `key=value` record, no trailing newline.
std::string to_record(const FaultReport& report);

// Multi-line `key=value` block.
std::string to_text_block(const FaultReport& report);

// The graphs left by each failing deletion set, in the graph text format.
std::string failures_text(const FaultReport& report);

}  // namespace kham
