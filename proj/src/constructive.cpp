#include "kham/constructive.hpp"

#include <algorithm>
#include <stdexcept>

#include "kham/conditions.hpp"
#include "kham/error.hpp"

namespace kham {

HamCycle canonical(HamCycle cycle) {
  auto& c = cycle.vertices;
  if (c.empty()) return cycle;
  auto smallest = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), smallest, c.end());
  if (c.size() >= 3 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return cycle;
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::BaseN1: return "BaseN1";
    case Branch::BaseK2: return "BaseK2";
    case Branch::BaseN2: return "BaseN2";
    case Branch::Case1: return "Case1";
    case Branch::Case2: return "Case2";
    case Branch::LemmaClosure: return "LemmaClosure";
    case Branch::MatchStitch: return "MatchStitch";
    case Branch::OreRotation: return "OreRotation";
    case Branch::T11AddEdge: return "T11AddEdge";
    case Branch::SearchFallback: return "SearchFallback";
  }
  return "Unknown";
}

std::string_view to_string(SolveFailure f) {
  switch (f) {
    case SolveFailure::HypothesisNotMet: return "HypothesisNotMet";
    case SolveFailure::TooSmall: return "TooSmall";
    case SolveFailure::NotHamiltonian: return "NotHamiltonian";
  }
  return "Unknown";
}

bool SolveResult::used_fallback() const {
  return std::find(trace.begin(), trace.end(), Branch::SearchFallback) != trace.end();
}

std::string to_text(const SolveResult& result) {
  std::string out;
  if (result.cycle) {
    out += "cycle";
    for (Vertex v : result.cycle->vertices) out += " " + std::to_string(v);
  } else {
    out += "none ";
    out += to_string(result.failure.value_or(SolveFailure::NotHamiltonian));
  }
  out += "\ntrace ";
  if (result.trace.empty()) out += "-";
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    if (i) out += ",";
    out += to_string(result.trace[i]);
  }
  out += "\n";
  return out;
}

// ---- proof steps ----------------------------------------------------------

namespace {

int parts_touched(const KPartiteGraph& g, VertexSet s) {
  int count = 0;
  for (int p = 0; p < g.k(); ++p)
    if (s & g.part_set(p)) ++count;
  return count;
}

void require_vertex(const KPartiteGraph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
  }
}

std::optional<Vertex> pick(VertexSet candidates, VertexSet discouraged) {
  if (!candidates) return std::nullopt;
  const VertexSet preferred = candidates & ~discouraged;
  return lowest(preferred ? preferred : candidates);
}

}  // namespace

std::optional<VertexPath> build_transversal_path(const KPartiteGraph& g, Vertex u1,
                                                 std::optional<Vertex> forbidden) {
  require_vertex(g, u1);
  const int home = g.part(u1);
  VertexSet blocked = bit(u1);
  int forbidden_part = home == 0 ? 1 : 0;
  if (forbidden) {
    require_vertex(g, *forbidden);
    if (g.part(*forbidden) == home) {
      throw Error(ErrorKind::InvalidArgument, "forbidden vertex shares the anchor's part");
    }
    forbidden_part = g.part(*forbidden);
    blocked |= bit(*forbidden);
  }

  const VertexSet nb = g.neighbors(u1) & ~blocked;
  if (parts_touched(g, nb) < 2) {
    throw Error(ErrorKind::PreconditionViolated,
                "anchor " + std::to_string(u1) + " must have neighbours in two parts");
  }

  std::vector<Vertex> path;
  std::vector<int> visited_parts{home};
  const VertexSet in_forbidden_part = nb & g.part_set(forbidden_part);
  if (in_forbidden_part) {
    const Vertex u2 = lowest(in_forbidden_part);
    const Vertex u3 = lowest(nb & ~g.part_set(forbidden_part));
    path = {u2, u1, u3};
    visited_parts.push_back(forbidden_part);
    visited_parts.push_back(g.part(u3));
  } else {
    const Vertex u3 = lowest(nb);
    const Vertex u4 = lowest(nb & ~g.part_set(g.part(u3)));
    path = {u3, u1, u4};
    visited_parts.push_back(g.part(u3));
    visited_parts.push_back(g.part(u4));
  }

  auto step_into = [&](int p) {
    const VertexSet cand = g.neighbors(path.back()) & g.part_set(p) & ~blocked;
    if (!cand) return false;
    path.push_back(lowest(cand));
    return true;
  };
  for (int p = 0; p < g.k(); ++p) {
    if (p == forbidden_part ||
        std::find(visited_parts.begin(), visited_parts.end(), p) != visited_parts.end())
      continue;
    if (!step_into(p)) return std::nullopt;
  }
  if (!in_forbidden_part && !step_into(forbidden_part)) return std::nullopt;
  return VertexPath{std::move(path)};
}

std::optional<std::pair<VertexPath, VertexPath>> build_two_disjoint_transversal_paths(
    const KPartiteGraph& g, Vertex u1, std::optional<Vertex> forbidden) {
  require_vertex(g, u1);
  const int home = g.part(u1);
  const VertexSet nb = g.neighbors(u1);
  if (parts_touched(g, nb) != 1) {
    throw Error(ErrorKind::PreconditionViolated,
                "anchor " + std::to_string(u1) + " must have neighbours in exactly one part");
  }
  if (popcount(nb) < 2) return std::nullopt;
  const int first_part = g.part(lowest(nb));

  VertexSet discouraged = 0;
  std::vector<int> order;
  if (forbidden) {
    require_vertex(g, *forbidden);
    discouraged = bit(*forbidden);
    const int fp = g.part(*forbidden);
    if (fp != first_part && fp != home) order.push_back(fp);
  }
  for (int p = 0; p < g.k(); ++p) {
    if (p == home || p == first_part || std::find(order.begin(), order.end(), p) != order.end())
      continue;
    order.push_back(p);
  }

  const Vertex u2 = *pick(nb, discouraged);
  const Vertex u2_alt = *pick(nb & ~bit(u2), discouraged);
  VertexSet used = bit(u1) | bit(u2) | bit(u2_alt);

  auto walk = [&](std::vector<Vertex>& path) {
    for (int p : order) {
      auto next = pick(g.neighbors(path.back()) & g.part_set(p) & ~used, discouraged);
      if (!next) return false;
      path.push_back(*next);
      used |= bit(*next);
    }
    return true;
  };

  std::vector<Vertex> p1{u1, u2};
  if (!walk(p1)) return std::nullopt;
  std::vector<Vertex> p2{u1, u2_alt};
  if (!walk(p2)) return std::nullopt;
  const VertexSet closing = g.neighbors(p2.back()) & g.part_set(home) & ~bit(u1);
  if (!closing) return std::nullopt;
  p2.push_back(lowest(closing));
  return std::pair{VertexPath{std::move(p1)}, VertexPath{std::move(p2)}};
}

namespace {

std::vector<Vertex> rotated_for_matching(const HamCycle& cycle, std::optional<Vertex> avoid) {
  std::vector<Vertex> c = cycle.vertices;
  if (avoid) {
    auto it = std::find(c.begin(), c.end(), *avoid);
    if (it != c.end()) std::rotate(c.begin(), it + 1, c.end());
  }
  return c;
}

std::size_t matching_size(std::size_t length) {
  if (length < 2) return 0;
  return length % 2 == 1 ? (length - 1) / 2 : (length - 2) / 2;
}

}  // namespace

std::vector<std::pair<Vertex, Vertex>> alternate_matching(const HamCycle& cycle,
                                                          std::optional<Vertex> avoid) {
  const std::vector<Vertex> c = rotated_for_matching(cycle, avoid);
  std::vector<std::pair<Vertex, Vertex>> m;
  for (std::size_t i = 0; i < matching_size(c.size()); ++i) m.emplace_back(c[2 * i], c[2 * i + 1]);
  return m;
}

std::optional<HamCycle> stitch_matching(const Graph& g, const VertexPath& path,
                                        const HamCycle& cycle, std::optional<Vertex> avoid) {
  if (path.vertices.empty()) throw Error(ErrorKind::InvalidArgument, "empty path");
  VertexSet covered = 0;
  for (const auto* seq : {&path.vertices, &cycle.vertices}) {
    for (Vertex v : *seq) {
      if (v < 0 || v >= g.order() || (covered & bit(v))) {
        throw Error(ErrorKind::InvalidArgument, "path and cycle must partition the vertices");
      }
      covered |= bit(v);
    }
  }
  if (covered != g.all()) {
    throw Error(ErrorKind::InvalidArgument, "path and cycle must partition the vertices");
  }

  const Vertex a = path.vertices.front();
  const Vertex b = path.vertices.back();
  const std::vector<Vertex> c = rotated_for_matching(cycle, avoid);
  const std::size_t len = c.size();
  for (std::size_t i = 0; i < matching_size(len); ++i) {
    const std::size_t x = 2 * i;
    const std::size_t y = 2 * i + 1;
    std::vector<Vertex> out = path.vertices;
    if (g.adjacent(a, c[x]) && g.adjacent(b, c[y])) {
      for (std::size_t s = 0; s < len; ++s) out.push_back(c[(y + s) % len]);
    } else if (g.adjacent(a, c[y]) && g.adjacent(b, c[x])) {
      for (std::size_t s = 0; s < len; ++s) out.push_back(c[(x + len - s) % len]);
    } else {
      continue;
    }
    return HamCycle{std::move(out)};
  }
  return std::nullopt;
}

// ---- solver ---------------------------------------------------------------

namespace {

HamCycle to_host(const HamCycle& cycle, const std::vector<Vertex>& map) {
  HamCycle out;
  out.vertices.reserve(cycle.vertices.size());
  for (Vertex v : cycle.vertices) out.vertices.push_back(map[v]);
  return out;
}

VertexSet vertex_set(const std::vector<Vertex>& vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= bit(v);
  return s;
}

class Solver {
 public:
  SolveResult result;

  void tag(Branch b) { result.trace.push_back(b); }

  std::optional<HamCycle> fallback(const KPartiteGraph& g, Branch at, std::string reason) {
    tag(Branch::SearchFallback);
    result.fallbacks.push_back({at, std::move(reason), g.k(), g.n(), g.edges()});
    return search_cycle(g.graph());
  }

  std::optional<HamCycle> solve_level(const KPartiteGraph& g) {
    const int k = g.k();
    const int n = g.n();
    if (n == 1) {
      tag(Branch::BaseN1);
      if (!check_theorem2_edges(g.graph()) || !check_ore(g.graph()).holds) {
        return fallback(g, Branch::BaseN1, "Ore's condition fails");
      }
      tag(Branch::OreRotation);
      return ore_build_cycle(g.graph());
    }
    if (k == 2) {
      tag(Branch::BaseK2);
      return rotation_route(g, Branch::BaseK2);
    }

    const auto pair = sigma_pair(g);
    const int sigma = pair ? g.degree(pair->first) + g.degree(pair->second) : kSigmaInfinity;
    if (n == 2) tag(Branch::BaseN2);
    if (sigma_bound_holds(k, n, sigma)) return rotation_route(g, Branch::OreRotation);

    if (n == 2) {
      if (k == 3) return fallback(g, Branch::BaseN2, "G(3,2) with sigma 5");
      return two_per_part(g, pair->first, pair->second, sigma);
    }

    const Vertex u1 = pair->first;
    const Vertex v = pair->second;
    const VertexSet nb = g.neighbors(u1);
    if (parts_touched(g, nb) >= 2) {
      tag(Branch::Case1);
      return single_path_case(g, u1, v);
    }
    tag(Branch::Case2);
    return two_path_case(g, u1, v);
  }

 private:
  std::optional<HamCycle> rotation_route(const KPartiteGraph& g, Branch at) {
    tag(Branch::OreRotation);
    auto cycle = rotation_cycle(g);
    if (cycle) return cycle;
    return fallback(g, at, "rotation pass stalled");
  }

  std::optional<HamCycle> close_path(const KPartiteGraph& g, const std::vector<Vertex>& path,
                                     Branch at) {
    tag(Branch::LemmaClosure);
    const int sum = g.degree(path.front()) + g.degree(path.back());
    if (sum < g.order()) return fallback(g, at, "path end degrees below order");
    return close_hamilton_path(g.graph(), VertexPath{path});
  }

  // n = 2, sigma = 2k - 1, k >= 5: drop u1's part, solve, reinsert u1 and its
  // partner, then close a Hamilton path by rotation.
  std::optional<HamCycle> two_per_part(const KPartiteGraph& g, Vertex u1, Vertex u2, int sigma) {
    const int k = g.k();
    (void)u2;
    if (sigma != 2 * k - 1) return fallback(g, Branch::BaseN2, "sigma below 2k-1");
    const int home = g.part(u1);
    const Vertex partner = lowest(g.part_set(home) & ~bit(u1));
    Remainder rest = remove_part(g, home);
    if (rest.graph.edge_count() < edge_threshold(k - 1, 2)) {
      return fallback(g, Branch::BaseN2, "remainder below threshold");
    }
    auto sub = solve_level(rest.graph);
    if (!sub) return fallback(g, Branch::BaseN2, "remainder not solved");
    const std::vector<Vertex> c = to_host(*sub, rest.to_host).vertices;
    const int len = static_cast<int>(c.size());
    auto at = [&](int i) { return c[((i % len) + len) % len]; };

    for (int i = 0; i < len; ++i) {
      if (!g.adjacent(u1, at(i)) || !g.adjacent(u1, at(i + 1))) continue;
      std::vector<Vertex> ring(c.begin(), c.begin() + i + 1);
      ring.push_back(u1);
      ring.insert(ring.end(), c.begin() + i + 1, c.end());
      const VertexSet nb = g.neighbors(partner);
      if (!nb) return fallback(g, Branch::BaseN2, "partner isolated");
      const int size = static_cast<int>(ring.size());
      const int q = static_cast<int>(std::find(ring.begin(), ring.end(), lowest(nb)) - ring.begin());
      const int dir = ring[(q + size - 1) % size] == u1 ? -1 : 1;
      std::vector<Vertex> path{partner};
      for (int s = 0; s < size; ++s) path.push_back(ring[((q + dir * s) % size + size) % size]);
      return close_path(g, path, Branch::BaseN2);
    }

    std::vector<int> hits;
    for (int i = 0; i < len && hits.size() < 2; ++i)
      if (g.adjacent(u1, c[i])) hits.push_back(i);
    if (hits.size() < 2) return fallback(g, Branch::BaseN2, "anchor has fewer than two neighbours");
    const int i = hits[0];
    const int j = hits[1];
    std::vector<Vertex> path{partner};
    if (g.adjacent(partner, at(j + 1))) {
      for (int s = j + 1; s <= i + len; ++s) path.push_back(at(s));
      path.push_back(u1);
      for (int s = j; s >= i + 1; --s) path.push_back(at(s));
    } else if (g.adjacent(partner, at(i + 1))) {
      for (int s = i + 1; s <= j; ++s) path.push_back(at(s));
      path.push_back(u1);
      for (int s = i + len; s >= j + 1; --s) path.push_back(at(s));
    } else {
      return fallback(g, Branch::BaseN2, "partner misses both successors");
    }
    return close_path(g, path, Branch::BaseN2);
  }

  std::optional<HamCycle> stitch(const KPartiteGraph& g, const std::vector<Vertex>& path,
                                 const Remainder& rest, Vertex avoid, Branch at) {
    auto sub = solve_level(rest.graph);
    if (!sub) return fallback(g, at, "remainder not solved");
    tag(Branch::MatchStitch);
    auto joined = stitch_matching(g.graph(), VertexPath{path}, to_host(*sub, rest.to_host), avoid);
    if (joined) return joined;
    return fallback(g, at, "no matching edge joins the path ends");
  }

  std::optional<HamCycle> single_path_case(const KPartiteGraph& g, Vertex u1, Vertex v) {
    auto path = build_transversal_path(g, u1, v);
    if (!path) return fallback(g, Branch::Case1, "transversal path stuck");
    Remainder rest = remove_balanced(g, vertex_set(path->vertices));
    const int k = g.k();
    const int n = g.n();
    if (complement(rest.graph).edge_count() > (k - 1) * (n - 1) - 2) {
      throw std::logic_error("Case 1 remainder exceeds its complement budget");
    }
    return stitch(g, path->vertices, rest, v, Branch::Case1);
  }

  std::optional<HamCycle> two_path_case(const KPartiteGraph& g, Vertex u1, Vertex v) {
    const int k = g.k();
    const int m = g.n() - 2;
    // C(k,2)m² − m >= threshold(k,m) reduces to (k−2)m >= 2; fails only at (3,3).
    if ((k - 2) * m < 2) return fallback(g, Branch::Case2, "remainder bound fails at this size");
    auto paths = build_two_disjoint_transversal_paths(g, u1, v);
    if (!paths) return fallback(g, Branch::Case2, "disjoint transversal paths stuck");
    const auto& [p1, p2] = *paths;
    std::vector<Vertex> joined(p2.vertices.rbegin(), p2.vertices.rend());
    joined.insert(joined.end(), p1.vertices.begin() + 1, p1.vertices.end());
    Remainder rest = remove_balanced(g, vertex_set(joined));
    if (rest.graph.edge_count() < edge_threshold(k, m)) {
      return fallback(g, Branch::Case2, "remainder below threshold");
    }
    return stitch(g, joined, rest, v, Branch::Case2);
  }
};

bool cycle_uses(const HamCycle& cycle, Vertex a, Vertex b) {
  const auto& c = cycle.vertices;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex x = c[i];
    const Vertex y = c[(i + 1) % c.size()];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

// The cycle minus edge ab, read as a path from b to a.
VertexPath open_at(const HamCycle& cycle, Vertex a, Vertex b) {
  const auto& c = cycle.vertices;
  const std::size_t len = c.size();
  const auto pa = static_cast<std::size_t>(std::find(c.begin(), c.end(), a) - c.begin());
  const bool forward = c[(pa + 1) % len] == b;
  VertexPath path;
  for (std::size_t s = 0; s < len; ++s) {
    path.vertices.push_back(forward ? c[(pa + 1 + s) % len] : c[(pa + 2 * len - 1 - s) % len]);
  }
  return path;
}

}  // namespace

SolveResult solve(const KPartiteGraph& g) {
  SolveResult r;
  if (g.k() == 2 && g.n() == 1) {
    r.failure = SolveFailure::TooSmall;
    return r;
  }
  if (g.edge_count() < edge_threshold(g.k(), g.n())) {
    r.failure = SolveFailure::HypothesisNotMet;
    return r;
  }
  Solver solver;
  auto cycle = solver.solve_level(g);
  r = std::move(solver.result);
  if (cycle) {
    r.cycle = canonical(std::move(*cycle));
  } else {
    r.failure = SolveFailure::NotHamiltonian;
  }
  return r;
}

SolveResult solve_theorem11(const KPartiteGraph& g) {
  SolveResult r;
  if (g.k() == 2 && g.n() == 1) {
    r.failure = SolveFailure::TooSmall;
    return r;
  }
  const int threshold = edge_threshold(g.k(), g.n());
  const GraphStats s = stats(g);
  if (s.edge_count < threshold - 1 || s.min_degree < 2) {
    r.failure = SolveFailure::HypothesisNotMet;
    return r;
  }
  if (s.edge_count >= threshold) return solve(g);

  Solver solver;
  solver.tag(Branch::T11AddEdge);
  std::optional<HamCycle> cycle;
  const auto pair = sigma_pair(g);
  const VertexSet excluded = pair ? bit(pair->first) | bit(pair->second) : 0;
  std::optional<Edge> added;
  for (const Edge& e : complement(g).edges()) {
    if (!(excluded & (bit(e.u) | bit(e.v)))) {
      added = e;
      break;
    }
  }
  if (added) {
    const KPartiteGraph augmented = add_edge(g, added->u, added->v);
    auto with_edge = solver.solve_level(augmented);
    if (with_edge && !cycle_uses(*with_edge, added->u, added->v)) {
      cycle = std::move(with_edge);
    } else if (with_edge) {
      auto rerouted = rotate_closed(g.graph(), open_at(*with_edge, added->u, added->v));
      if (rerouted) {
        solver.tag(Branch::LemmaClosure);
        cycle = std::move(rerouted);
      }
    }
  }
  if (!cycle) {
    cycle = solver.fallback(g, Branch::T11AddEdge,
                            added ? "reroute around the added edge failed"
                                  : "no missing edge away from the minimizing pair");
  }

  r = std::move(solver.result);
  if (cycle) {
    r.cycle = canonical(std::move(*cycle));
  } else {
    r.failure = SolveFailure::NotHamiltonian;
  }
  return r;
}

}  // namespace kham
