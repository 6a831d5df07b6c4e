#include "kham/graph.hpp"

#include <algorithm>
#include <string>

#include "kham/error.hpp"

namespace kham {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxVertices) {
    throw Error(ErrorKind::TooLarge,
                "graph order " + std::to_string(order) + " outside 0.." +
                    std::to_string(kMaxVertices));
  }
  rows_.assign(order, 0);
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : rows_) twice += popcount(row);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = order_ == 0 ? 0 : order_;
  for (VertexSet row : rows_) best = std::min(best, popcount(row));
  return best;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_ || u == v) {
    throw Error(ErrorKind::InvalidArgument,
                "invalid edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) return;
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u) {
    VertexSet higher = rows_[u] & ~((bit(u) << 1) - 1);
    for (; higher; higher &= higher - 1) out.push_back({u, lowest(higher)});
  }
  return out;
}

Graph complete_graph(int order) {
  Graph g(order);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int order) {
  Graph g(order);
  for (Vertex u = 0; u < order; ++u) g.add_edge(u, (u + 1) % order);
  return g;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<Vertex> ids;
  for (VertexSet s = keep & g.all(); s; s &= s - 1) ids.push_back(lowest(s));
  Graph sub(static_cast<int>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j])) sub.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return sub;
}

namespace detail {

struct KPartiteAccess {
  static KPartiteGraph make(int k, int n) {
    KPartiteGraph g;
    g.k_ = k;
    g.n_ = n;
    g.graph_ = Graph(k * n);
    return g;
  }
  static Graph& graph(KPartiteGraph& g) { return g.graph_; }
};

}  // namespace detail

namespace {

using Access = detail::KPartiteAccess;

void require_shape(int k, int n) {
  if (k < 2 || n < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "need k >= 2 and n >= 1, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  if (k * n > kMaxVertices) {
    throw Error(ErrorKind::TooLarge, "k*n=" + std::to_string(k * n) + " exceeds the " +
                                         std::to_string(kMaxVertices) + "-vertex cap");
  }
}

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_cross_pair(const KPartiteGraph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw Error(ErrorKind::InvalidArgument, "vertex id out of range in pair " + pair_text(u, v));
  }
  if (g.part(u) == g.part(v)) {
    throw Error(ErrorKind::InvalidArgument, "intra-part pair " + pair_text(u, v));
  }
}

}  // namespace

int host_edge_count(int k, int n) { return k * (k - 1) / 2 * n * n; }

KPartiteGraph new_empty(int k, int n) {
  require_shape(k, n);
  return Access::make(k, n);
}

KPartiteGraph new_complete(int k, int n) {
  KPartiteGraph g = new_empty(k, n);
  Graph& adj = Access::graph(g);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.part(u) != g.part(v)) adj.add_edge(u, v);
  return g;
}

KPartiteGraph from_edge_list(int k, int n, std::span<const Edge> edges) {
  KPartiteGraph g = new_empty(k, n);
  Graph& adj = Access::graph(g);
  for (const Edge& e : edges) {
    check_cross_pair(g, e.u, e.v);
    adj.add_edge(e.u, e.v);
  }
  return g;
}

KPartiteGraph complement(const KPartiteGraph& g) {
  KPartiteGraph out = new_empty(g.k(), g.n());
  Graph& adj = Access::graph(out);
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexSet missing = g.host_neighbors(u) & ~g.neighbors(u) & ~((bit(u) << 1) - 1);
    for (; missing; missing &= missing - 1) adj.add_edge(u, lowest(missing));
  }
  return out;
}

KPartiteGraph add_edge(const KPartiteGraph& g, Vertex u, Vertex v) {
  check_cross_pair(g, u, v);
  KPartiteGraph out = g;
  Access::graph(out).add_edge(u, v);
  return out;
}

RemovalResult remove_edges(const KPartiteGraph& g, std::span<const Edge> edges) {
  RemovalResult result{g, 0};
  Graph& adj = Access::graph(result.graph);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order()) continue;
    if (adj.adjacent(e.u, e.v)) {
      adj.remove_edge(e.u, e.v);
      ++result.removed;
    }
  }
  return result;
}

std::vector<Edge> host_edges(int k, int n) { return new_complete(k, n).edges(); }

GraphStats stats(const KPartiteGraph& g) {
  GraphStats s;
  s.edge_count = g.edge_count();
  s.min_degree = g.graph().min_degree();
  if (auto pair = sigma_pair(g)) s.sigma = g.degree(pair->first) + g.degree(pair->second);
  return s;
}

std::optional<std::pair<Vertex, Vertex>> sigma_pair(const KPartiteGraph& g) {
  std::optional<std::pair<Vertex, Vertex>> best;
  int best_sum = kSigmaInfinity;
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexSet missing = g.host_neighbors(u) & ~g.neighbors(u) & ~((bit(u) << 1) - 1);
    for (; missing; missing &= missing - 1) {
      Vertex v = lowest(missing);
      int sum = g.degree(u) + g.degree(v);
      if (sum < best_sum) {
        best_sum = sum;
        best = g.degree(v) < g.degree(u) ? std::pair{v, u} : std::pair{u, v};
      }
    }
  }
  return best;
}

namespace {

Remainder relabel(const KPartiteGraph& g, int k, int n, VertexSet keep) {
  Remainder r{new_empty(k, n), {}};
  for (VertexSet s = keep; s; s &= s - 1) r.to_host.push_back(lowest(s));
  Graph& adj = Access::graph(r.graph);
  for (std::size_t i = 0; i < r.to_host.size(); ++i)
    for (std::size_t j = i + 1; j < r.to_host.size(); ++j)
      if (g.adjacent(r.to_host[i], r.to_host[j]))
        adj.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return r;
}

}  // namespace

Remainder remove_balanced(const KPartiteGraph& g, VertexSet removed) {
  removed &= g.graph().all();
  int per_part = popcount(removed & g.part_set(0));
  for (int p = 1; p < g.k(); ++p) {
    if (popcount(removed & g.part_set(p)) != per_part) {
      throw Error(ErrorKind::InvalidArgument, "removal is not balanced across parts");
    }
  }
  if (per_part >= g.n()) {
    throw Error(ErrorKind::InvalidArgument, "removal would empty every part");
  }
  // Ascending ids keep every part contiguous, so relabelled blocks stay aligned.
  return relabel(g, g.k(), g.n() - per_part, g.graph().all() & ~removed);
}

Remainder remove_part(const KPartiteGraph& g, int p) {
  if (p < 0 || p >= g.k() || g.k() < 3) {
    throw Error(ErrorKind::InvalidArgument, "cannot drop part " + std::to_string(p));
  }
  return relabel(g, g.k() - 1, g.n(), g.graph().all() & ~g.part_set(p));
}

}  // namespace kham
