#pragma once

/**
 * Dense bit-matrix graphs for desk-scale Hamiltonicity work.
 *
 * `Graph` is a plain simple undirected graph on at most `kMaxVertices`
 * vertices, one 64-bit adjacency word per row. `KPartiteGraph` wraps a
 * `Graph` with a balanced part structure where vertex `v` lives in part
 * `v / n`. Both are value types; the k-partite operations return copies.
 */

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace kham {

using Vertex = int;
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Normalizes so that u < v.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline Vertex lowest(VertexSet s) { return std::countr_zero(s); }

class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return order_; }
  VertexSet all() const {
    return order_ == kMaxVertices ? ~VertexSet{0} : bit(order_) - 1;
  }

  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(Vertex u) const { return rows_[u]; }
  int degree(Vertex u) const { return popcount(rows_[u]); }
  int edge_count() const;
  int min_degree() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  // Edges sorted ascending with u < v.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int order_ = 0;
  std::vector<VertexSet> rows_;
};

Graph complete_graph(int order);
Graph cycle_graph(int order);

// The subgraph induced by `keep`, relabelled to 0..|keep|-1 in ascending id
// order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

namespace detail {
struct KPartiteAccess;
}

class KPartiteGraph {
 public:
  int k() const { return k_; }
  int n() const { return n_; }
  int order() const { return k_ * n_; }
  int part(Vertex v) const { return v / n_; }
  VertexSet part_set(int p) const { return (bit(n_) - 1) << (p * n_); }

  const Graph& graph() const { return graph_; }
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  VertexSet neighbors(Vertex u) const { return graph_.neighbors(u); }
  int degree(Vertex u) const { return graph_.degree(u); }
  int edge_count() const { return graph_.edge_count(); }
  std::vector<Edge> edges() const { return graph_.edges(); }

  // Cross-part vertices of `u`, whether adjacent or not.
  VertexSet host_neighbors(Vertex u) const { return graph_.all() & ~part_set(part(u)); }

  bool operator==(const KPartiteGraph&) const = default;

  friend struct detail::KPartiteAccess;

 private:
  int k_ = 0;
  int n_ = 0;
  Graph graph_;
};

// C(k,2)·n², the edge count of the complete multipartite host.
int host_edge_count(int k, int n);

KPartiteGraph new_empty(int k, int n);
KPartiteGraph new_complete(int k, int n);

// Rejects out-of-range ids and intra-part pairs, naming the offending pair.
// Duplicate pairs collapse.
KPartiteGraph from_edge_list(int k, int n, std::span<const Edge> edges);

// Cross-part non-edges of `g`.
KPartiteGraph complement(const KPartiteGraph& g);

KPartiteGraph add_edge(const KPartiteGraph& g, Vertex u, Vertex v);

struct RemovalResult {
  KPartiteGraph graph;
  int removed = 0;
};

// Absent edges are skipped; `removed` counts only the edges that existed.
RemovalResult remove_edges(const KPartiteGraph& g, std::span<const Edge> edges);

// Sorted edge list of CG_{k,n}.
std::vector<Edge> host_edges(int k, int n);

inline constexpr int kSigmaInfinity = std::numeric_limits<int>::max();

struct GraphStats {
  int edge_count = 0;
  int min_degree = 0;
  int sigma = kSigmaInfinity;  // kSigmaInfinity when no nonadjacent cross pair exists

  bool operator==(const GraphStats&) const = default;
};

GraphStats stats(const KPartiteGraph& g);

// Lexicographically first nonadjacent cross-part pair attaining sigma,
// ordered (lower degree, higher degree) with ties kept in id order.
std::optional<std::pair<Vertex, Vertex>> sigma_pair(const KPartiteGraph& g);

// A balanced k-partite subgraph left after deleting the same number of
// vertices from every part, with the map back to the host labelling.
struct Remainder {
  KPartiteGraph graph;
  std::vector<Vertex> to_host;
};

Remainder remove_balanced(const KPartiteGraph& g, VertexSet removed);

// Drops every vertex of part `p`, giving a (k-1)-partite graph.
Remainder remove_part(const KPartiteGraph& g, int p);

}  // namespace kham
