#pragma once

// Ground-truth Hamiltonicity by exhaustive search. Nothing here shares code
// with the constructive solver; the validator is what every test trusts.

#include <cstdint>
#include <optional>
#include <string>

#include "kham/constructive.hpp"
#include "kham/graph.hpp"

namespace kham {

inline constexpr int kDefaultOracleCap = 16;
inline constexpr int kMaxOracleCap = 24;
// At or above this order the subset DP is used instead of backtracking.
inline constexpr int kSubsetDpFrom = 13;

struct OracleAnswer {
  bool hamiltonian = false;
  std::optional<HamCycle> cycle;
  std::uint64_t nodes_expanded = 0;
};

// Dispatches on order; throws TooSmall below 3 and TooLarge above `cap`.
OracleAnswer is_hamiltonian(const Graph& g, int cap = kDefaultOracleCap);

// Backtracking anchored at vertex 0, pruned by connectivity of the unvisited
// part, dead-vertex detection and forced edges at degree-2 vertices.
OracleAnswer backtrack_hamiltonian(const Graph& g);

// Subset DP over (visited set, endpoint) with vertex 0 as anchor; order <= kMaxOracleCap.
OracleAnswer subset_dp_hamiltonian(const Graph& g);

struct CycleCheck {
  bool valid = false;
  std::string reason;  // empty when valid
};

// Distinct vertices, every vertex present, consecutive pairs (with wrap) adjacent.
CycleCheck validate_cycle(const Graph& g, const HamCycle& cycle);

}  // namespace kham
