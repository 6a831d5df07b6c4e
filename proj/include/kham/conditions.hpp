#pragma once

// Sufficient conditions for Hamiltonicity, evaluated exactly in integers.
// None of these decide Hamiltonicity; they report whether a hypothesis holds.

#include <optional>
#include <string>
#include <utility>

#include "kham/graph.hpp"

namespace kham {

// 1 for (k,n) = (2,1), otherwise C(k,2)·n² − (k−1)·n + 2.
int edge_threshold(int k, int n);

struct OreCheck {
  bool holds = false;
  std::optional<std::pair<Vertex, Vertex>> violation;  // first nonadjacent pair with sum < N
};

// General-graph Ore condition over all nonadjacent pairs, regardless of parts.
OreCheck check_ore(const Graph& g);

// |E| >= C(N−1,2) + 2.
bool check_theorem2_edges(const Graph& g);

// Minimum-degree bound for balanced k-partite graphs:
//   odd k:  δ > (k/2 − 1/(k+1))·n
//   even k: δ > (k/2 − 2/(k+2))·n
bool check_theorem4_min_degree(const KPartiteGraph& g);
bool min_degree_bound_holds(int k, int n, int min_degree);

// Cross degree-sum bound:
//   odd k:  σ > (k − 2/(k+1))·n
//   even k: σ > (k − 4/(k+2))·n
// An infinite σ always passes.
bool check_theorem5_sigma(const KPartiteGraph& g);
bool sigma_bound_holds(int k, int n, int sigma);

struct ConditionReport {
  int k = 0;
  int n = 0;
  int edge_threshold_t1 = 0;
  bool meets_theorem1 = false;
  bool meets_ore = false;
  bool meets_theorem2_edges = false;
  bool meets_theorem4_min_degree = false;
  bool meets_theorem5_sigma = false;
  bool meets_theorem11 = false;

  GraphStats witness;
  std::optional<std::pair<Vertex, Vertex>> ore_violation;
  std::optional<Vertex> min_degree_vertex;                 // set when δ-based checks fail
  std::optional<std::pair<Vertex, Vertex>> sigma_witness;  // set when the σ check fails
};

ConditionReport evaluate(const KPartiteGraph& g);

// Multi-line `key=value` block.
std::string to_text_block(const ConditionReport& report);
// Single space-separated `key=value` line, no trailing newline.
std::string to_record(const ConditionReport& report);

}  // namespace kham
