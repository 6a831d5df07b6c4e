#include "kham/oracle.hpp"

#include <vector>

#include "kham/error.hpp"

namespace kham {

namespace {

void require_valid_order(int order) {
  if (order < 3) {
    throw Error(ErrorKind::TooSmall,
                "oracle needs at least 3 vertices, got " + std::to_string(order));
  }
}

class Backtracker {
 public:
  explicit Backtracker(const Graph& g) : g_(g) {}

  OracleAnswer run() {
    OracleAnswer answer;
    path_.assign(1, 0);
    if (extend(0, g_.all() & ~bit(0))) {
      answer.hamiltonian = true;
      answer.cycle = HamCycle{path_};
    }
    answer.nodes_expanded = nodes_;
    return answer;
  }

 private:
  // Every unvisited vertex must keep two possible cycle neighbours.
  bool alive(Vertex cur, VertexSet unvisited) const {
    const VertexSet reachable = unvisited | bit(cur) | bit(0);
    for (VertexSet s = unvisited; s; s &= s - 1)
      if (popcount(g_.neighbors(lowest(s)) & reachable) < 2) return false;
    if (cur != 0 && !(g_.neighbors(0) & unvisited)) return false;
    return true;
  }

  // Unvisited vertices must all be reachable from cur through unvisited vertices.
  bool connected(Vertex cur, VertexSet unvisited) const {
    VertexSet seen = bit(cur);
    VertexSet frontier = bit(cur);
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s; s &= s - 1) next |= g_.neighbors(lowest(s));
      next &= unvisited & ~seen;
      seen |= next;
      frontier = next;
    }
    return (seen & unvisited) == unvisited;
  }

  bool extend(Vertex cur, VertexSet unvisited) {
    ++nodes_;
    if (!unvisited) return g_.adjacent(cur, 0);
    if (!alive(cur, unvisited) || !connected(cur, unvisited)) return false;

    const VertexSet reachable = unvisited | bit(cur) | bit(0);
    VertexSet candidates = g_.neighbors(cur) & unvisited;
    VertexSet forced = 0;
    for (VertexSet s = candidates; s; s &= s - 1) {
      const Vertex w = lowest(s);
      if (popcount(g_.neighbors(w) & reachable) == 2) forced |= bit(w);
    }
    // A degree-2 neighbour of cur must sit next to cur on the cycle. Vertex 0
    // has two open slots, every later vertex only one.
    const int slots = cur == 0 ? 2 : 1;
    if (popcount(forced) > slots) return false;
    if (cur != 0 && forced) candidates = forced;

    for (VertexSet s = candidates; s; s &= s - 1) {
      const Vertex w = lowest(s);
      path_.push_back(w);
      if (extend(w, unvisited & ~bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> path_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleAnswer backtrack_hamiltonian(const Graph& g) {
  require_valid_order(g.order());
  return Backtracker(g).run();
}

OracleAnswer subset_dp_hamiltonian(const Graph& g) {
  const int order = g.order();
  require_valid_order(order);
  if (order > kMaxOracleCap) {
    throw Error(ErrorKind::TooLarge, "subset DP limited to " + std::to_string(kMaxOracleCap) +
                                         " vertices");
  }
  // Masks range over vertices 1..order-1 (bit v-1); dp[mask] holds the
  // possible endpoints of a path from 0 covering exactly mask.
  const int rest = order - 1;
  const std::size_t full = (std::size_t{1} << rest) - 1;
  std::vector<std::uint32_t> dp(full + 1, 0);
  auto others = [&](Vertex v) { return static_cast<std::uint32_t>(g.neighbors(v) >> 1); };

  for (Vertex v = 1; v < order; ++v)
    if (g.adjacent(0, v)) dp[std::size_t{1} << (v - 1)] |= std::uint32_t{1} << (v - 1);

  OracleAnswer answer;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::uint32_t ends = dp[mask]; ends; ends &= ends - 1) {
      ++answer.nodes_expanded;
      const int e = std::countr_zero(ends);
      for (std::uint32_t ext = others(e + 1) & ~static_cast<std::uint32_t>(mask); ext;
           ext &= ext - 1) {
        const int w = std::countr_zero(ext);
        dp[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }

  const std::uint32_t closing = dp[full] & others(0);
  if (!closing) return answer;

  answer.hamiltonian = true;
  std::vector<Vertex> reversed;
  std::size_t mask = full;
  int end = std::countr_zero(closing);
  while (true) {
    reversed.push_back(end + 1);
    const std::size_t before = mask & ~(std::size_t{1} << end);
    if (!before) break;
    const std::uint32_t prev = dp[before] & others(end + 1);
    end = std::countr_zero(prev);
    mask = before;
  }
  HamCycle cycle{{0}};
  cycle.vertices.insert(cycle.vertices.end(), reversed.rbegin(), reversed.rend());
  answer.cycle = std::move(cycle);
  return answer;
}

OracleAnswer is_hamiltonian(const Graph& g, int cap) {
  require_valid_order(g.order());
  if (cap > kMaxOracleCap) {
    throw Error(ErrorKind::InvalidArgument,
                "oracle cap " + std::to_string(cap) + " exceeds " + std::to_string(kMaxOracleCap));
  }
  if (g.order() > cap) {
    throw Error(ErrorKind::TooLarge, "graph order " + std::to_string(g.order()) +
                                         " exceeds oracle cap " + std::to_string(cap));
  }
  return g.order() >= kSubsetDpFrom ? subset_dp_hamiltonian(g) : backtrack_hamiltonian(g);
}

CycleCheck validate_cycle(const Graph& g, const HamCycle& cycle) {
  const auto& c = cycle.vertices;
  if (static_cast<int>(c.size()) != g.order()) {
    return {false, "length " + std::to_string(c.size()) + " != order " +
                       std::to_string(g.order())};
  }
  if (c.size() < 3) return {false, "fewer than 3 vertices"};
  std::vector<bool> seen(c.size(), false);
  for (Vertex v : c) {
    if (v < 0 || v >= g.order()) return {false, "vertex " + std::to_string(v) + " out of range"};
    if (seen[v]) return {false, "vertex " + std::to_string(v) + " repeated"};
    seen[v] = true;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex a = c[i];
    const Vertex b = c[(i + 1) % c.size()];
    if (!g.adjacent(a, b)) {
      return {false, "non-edge (" + std::to_string(a) + "," + std::to_string(b) + ")"};
    }
  }
  return {true, {}};
}

}  // namespace kham
