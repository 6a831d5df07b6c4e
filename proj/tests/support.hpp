#pragma once

// Reference implementations used only by tests. Deliberately naive.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "kham/conditions.hpp"
#include "kham/constructive.hpp"
#include "kham/graph.hpp"

namespace kham::testing {

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.order(), std::vector<bool>(g.order(), false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

// Cycle check written against an explicit matrix, not the library validator.
inline bool is_ham_cycle(const Graph& g, const std::vector<Vertex>& c) {
  const auto adj = matrix(g);
  const int n = g.order();
  if (static_cast<int>(c.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : c) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!adj[c[i]][c[(i + 1) % n]]) return false;
  return true;
}

// Tries every permutation with vertex 0 fixed. Only for order <= 10.
inline bool permutation_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  const auto adj = matrix(g);
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (!adj[0][rest.front()] || !adj[rest.back()][0]) continue;
    bool ok = true;
    for (int i = 0; i + 1 < n - 1 && ok; ++i) ok = adj[rest[i]][rest[i + 1]];
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// Minimum degree sum over nonadjacent cross-part pairs, -1 when none exist.
inline int naive_sigma(const KPartiteGraph& g) {
  int best = -1;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (u / g.n() == v / g.n() || g.adjacent(u, v)) continue;
      const int s = g.degree(u) + g.degree(v);
      if (best < 0 || s < best) best = s;
    }
  return best;
}

inline Graph random_graph(int order, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline KPartiteGraph random_kpartite(int k, int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (const Edge& e : host_edges(k, n))
    if (coin(rng)) edges.push_back(e);
  return from_edge_list(k, n, edges);
}

inline std::vector<KPartiteGraph> subsets_with_edges(int k, int n, int m) {
  const auto host = host_edges(k, n);
  std::vector<KPartiteGraph> out;
  std::vector<bool> pick(host.size(), false);
  std::fill(pick.end() - m, pick.end(), true);
  do {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < host.size(); ++i)
      if (pick[i]) edges.push_back(host[i]);
    out.push_back(from_edge_list(k, n, edges));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Random graph plus a Hamilton path whose end degrees sum to at least the order.
inline VertexPath random_path_instance(std::mt19937_64& rng, Graph& g) {
  const int order = 4 + static_cast<int>(rng() % 17);
  g = testing::random_graph(order, 0.15 + 0.5 * (rng() % 100) / 100.0, rng);
  std::vector<Vertex> p(order);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  for (int i = 0; i + 1 < order; ++i)
    if (!g.adjacent(p[i], p[i + 1])) g.add_edge(p[i], p[i + 1]);
  while (g.degree(p.front()) + g.degree(p.back()) < order) {
    const Vertex end = rng() % 2 ? p.front() : p.back();
    const Vertex other = static_cast<Vertex>(rng() % order);
    if (other != end && !g.adjacent(end, other)) g.add_edge(end, other);
  }
  return VertexPath{p};
}

// Random graph on at most 14 vertices, densified until Ore's condition holds.
inline Graph random_ore_graph(std::mt19937_64& rng) {
  const int order = 3 + static_cast<int>(rng() % 12);
  Graph g = testing::random_graph(order, 0.3 + 0.6 * (rng() % 100) / 100.0, rng);
  while (true) {
    const OreCheck c = check_ore(g);
    if (c.holds) return g;
    g.add_edge(c.violation->first, c.violation->second);
  }
}

}  // namespace kham::testing
