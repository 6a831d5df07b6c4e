#pragma once

/**
 * Constructive Hamilton-cycle extraction for balanced k-partite graphs whose
 * edge count meets the threshold returned by `edge_threshold`.
 *
 * The solver follows the inductive argument for the threshold:
 *
 *   n == 1          Ore's condition holds, so a rotation-extension pass closes
 *                   a cycle on the k vertices.
 *   k == 2          every nonadjacent cross pair has degree sum > n, and the
 *                   bipartite rotation pass closes an alternating cycle.
 *   n == 2          induction on k: drop the part holding the low-degree end of
 *                   the minimizing pair, solve the rest, reinsert the two
 *                   vertices and close the Hamilton path by rotation.
 *   k >= 3, n >= 3  either the degree-sum bound holds (rotation pass), or the
 *                   low-degree vertex u1 anchors one transversal path (Case 1)
 *                   or two disjoint ones (Case 2). The remainder is solved
 *                   recursively and stitched to the path through an edge of an
 *                   alternate-edge matching of its cycle.
 *
 * Every branch that cannot be carried out on a concrete instance falls back to
 * an exact backtracking search and is logged in `SolveResult::fallbacks`.
 */

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kham/graph.hpp"

namespace kham {

struct VertexPath {
  std::vector<Vertex> vertices;

  bool operator==(const VertexPath&) const = default;
};

struct HamCycle {
  std::vector<Vertex> vertices;

  bool operator==(const HamCycle&) const = default;
};

// Smallest id first, then the direction whose second vertex is smaller.
HamCycle canonical(HamCycle cycle);

enum class Branch {
  BaseN1,
  BaseK2,
  BaseN2,
  Case1,
  Case2,
  LemmaClosure,
  MatchStitch,
  OreRotation,
  T11AddEdge,
  SearchFallback,
};

inline constexpr int kBranchCount = 10;

std::string_view to_string(Branch b);

enum class SolveFailure { HypothesisNotMet, TooSmall, NotHamiltonian };

std::string_view to_string(SolveFailure f);

// A branch that could not be carried out on a concrete (sub)instance.
struct FallbackEvent {
  Branch at;
  std::string reason;
  int k = 0;
  int n = 0;
  std::vector<Edge> edges;
};

struct SolveResult {
  std::optional<HamCycle> cycle;
  std::vector<Branch> trace;
  std::optional<SolveFailure> failure;
  std::vector<FallbackEvent> fallbacks;

  bool used_fallback() const;
};

// `cycle <ids>` or `none <reason>`, then `trace <tags>`; each line LF-terminated.
std::string to_text(const SolveResult& result);

// ---- rotation-extension --------------------------------------------------

// Hamilton cycle under Ore's condition via gap-repair rotations on a cyclic
// arrangement. Throws HypothesisNotMet when Ore fails, TooSmall below 3 vertices.
HamCycle ore_build_cycle(const Graph& g);

// Closes a Hamilton path of `g` whose end degrees sum to at least
// the order. Throws InvalidPath or HypothesisNotMet.
HamCycle close_hamilton_path(const Graph& g, const VertexPath& path);

// The crossing-chord rotation without the degree-sum check; nullopt when no
// crossing pair exists.
std::optional<HamCycle> rotate_closed(const Graph& g, const VertexPath& path);

// Gap repair starting from a round-robin cross-part arrangement. Only
// cross-part gaps ever arise, so the pass is guaranteed whenever every
// nonadjacent cross pair has degree sum >= kn (and, for k = 2, > n).
// nullopt when the pass stalls.
std::optional<HamCycle> rotation_cycle(const KPartiteGraph& g);

// ---- proof steps ----------------------------------------------------------

// Case-1 transversal path: one vertex per part, u1 second, avoiding `forbidden`.
// When u1 has a neighbour in forbidden's part the path is u2-u1-u3-...-uk,
// otherwise u3-u1-u4-...-uk-u2 with u2 in forbidden's part. Without a
// forbidden vertex the lowest part other than u1's plays that role. Greedy
// choices take the lowest admissible id. Throws PreconditionViolated when
// N(u1) meets fewer than two parts; nullopt when the greedy walk gets stuck.
std::optional<VertexPath> build_transversal_path(const KPartiteGraph& g, Vertex u1,
                                                 std::optional<Vertex> forbidden);

// Case-2 paths P1 = u1-...-uk and P2 = u1-u2'-...-uk'-u1', sharing only u1.
// Throws PreconditionViolated unless N(u1) lies inside one part.
std::optional<std::pair<VertexPath, VertexPath>> build_two_disjoint_transversal_paths(
    const KPartiteGraph& g, Vertex u1, std::optional<Vertex> forbidden);

// Joins `path` (ends a, b) to `cycle` (a Hamilton cycle of the rest) through
// an edge {x, y} of the alternate-edge matching with a~x and b~y, giving
// a ... b y ... x. nullopt when no matching edge qualifies.
std::optional<HamCycle> stitch_matching(const Graph& g, const VertexPath& path,
                                        const HamCycle& cycle, std::optional<Vertex> avoid);

// Matching used by `stitch_matching`: {c0,c1}, {c2,c3}, ... after rotating the
// cycle so `avoid` (when present) is last.
std::vector<std::pair<Vertex, Vertex>> alternate_matching(const HamCycle& cycle,
                                                          std::optional<Vertex> avoid);

// Exact depth-first search with degree-sorted branching.
std::optional<HamCycle> search_cycle(const Graph& g);

// ---- entry points ---------------------------------------------------------

SolveResult solve(const KPartiteGraph& g);

// Threshold − 1 edges together with δ >= 2.
SolveResult solve_theorem11(const KPartiteGraph& g);

}  // namespace kham
