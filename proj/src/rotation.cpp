// Rotation-extension closures: gap repair on cyclic arrangements and the
// crossing-chord rotation that turns a Hamilton path into a cycle.

#include <algorithm>
#include <stdexcept>

#include "kham/conditions.hpp"
#include "kham/constructive.hpp"
#include "kham/error.hpp"

namespace kham {

namespace {

// Reverses ring positions start, start+1, ..., start+len-1 (mod size).
void reverse_arc(std::vector<Vertex>& ring, int start, int len) {
  const int size = static_cast<int>(ring.size());
  for (int x = 0; x < len / 2; ++x)
    std::swap(ring[(start + x) % size], ring[(start + len - 1 - x) % size]);
}

// Repeatedly takes a gap (a,b) between ring neighbours and looks for a chord
// pair a~p_t, b~p_{t+1} along the arc b=p_0 ... p_{N-1}=a. Reversing p_0..p_t
// replaces the gap and (p_t,p_{t+1}) with two edges, so the gap count strictly
// drops. Returns nullopt when some gaps remain and none can be repaired.
std::optional<std::vector<Vertex>> repair_gaps(const Graph& g, std::vector<Vertex> ring) {
  const int size = static_cast<int>(ring.size());
  while (true) {
    bool gap_seen = false;
    bool repaired = false;
    for (int i = 0; i < size && !repaired; ++i) {
      const Vertex a = ring[i];
      const Vertex b = ring[(i + 1) % size];
      if (g.adjacent(a, b)) continue;
      gap_seen = true;
      for (int t = 1; t + 1 <= size - 2; ++t) {
        const Vertex pt = ring[(i + 1 + t) % size];
        const Vertex next = ring[(i + 2 + t) % size];
        if (g.adjacent(a, pt) && g.adjacent(b, next)) {
          reverse_arc(ring, i + 1, t + 1);
          repaired = true;
          break;
        }
      }
    }
    if (!gap_seen) return ring;
    if (!repaired) return std::nullopt;
  }
}

void require_hamilton_path(const Graph& g, const VertexPath& path) {
  const auto& p = path.vertices;
  if (static_cast<int>(p.size()) != g.order()) {
    throw Error(ErrorKind::InvalidPath, "path has " + std::to_string(p.size()) +
                                            " vertices, graph has " +
                                            std::to_string(g.order()));
  }
  VertexSet seen = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.order() || (seen & bit(p[i]))) {
      throw Error(ErrorKind::InvalidPath, "vertex " + std::to_string(p[i]) +
                                              " repeated or out of range");
    }
    seen |= bit(p[i]);
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) {
      throw Error(ErrorKind::InvalidPath, "non-edge (" + std::to_string(p[i - 1]) + "," +
                                              std::to_string(p[i]) + ") on path");
    }
  }
}

}  // namespace

HamCycle ore_build_cycle(const Graph& g) {
  if (!check_ore(g).holds) {
    throw Error(ErrorKind::HypothesisNotMet, "Ore's degree-sum condition fails");
  }
  std::vector<Vertex> ring(g.order());
  for (Vertex v = 0; v < g.order(); ++v) ring[v] = v;
  auto repaired = repair_gaps(g, std::move(ring));
  if (!repaired) throw std::logic_error("gap repair stalled under Ore's condition");
  return canonical(HamCycle{std::move(*repaired)});
}

std::optional<HamCycle> rotate_closed(const Graph& g, const VertexPath& path) {
  const auto& p = path.vertices;
  const int size = static_cast<int>(p.size());
  if (size < 3) return std::nullopt;
  const Vertex first = p.front();
  const Vertex last = p.back();
  if (g.adjacent(first, last)) return HamCycle{p};
  // first~p_i and last~p_{i-1}: p_0..p_{i-1}, p_{N-1}, ..., p_i closes back at p_0.
  for (int i = 2; i <= size - 2; ++i) {
    if (g.adjacent(first, p[i]) && g.adjacent(last, p[i - 1])) {
      std::vector<Vertex> out(p.begin(), p.begin() + i);
      out.insert(out.end(), p.rbegin(), p.rend() - i);
      return HamCycle{std::move(out)};
    }
  }
  return std::nullopt;
}

HamCycle close_hamilton_path(const Graph& g, const VertexPath& path) {
  require_hamilton_path(g, path);
  if (g.order() < 3) throw Error(ErrorKind::TooSmall, "closure needs at least 3 vertices");
  const int sum = g.degree(path.vertices.front()) + g.degree(path.vertices.back());
  if (sum < g.order()) {
    throw Error(ErrorKind::HypothesisNotMet,
                "end degree sum " + std::to_string(sum) + " below order " +
                    std::to_string(g.order()));
  }
  auto cycle = rotate_closed(g, path);
  if (!cycle) throw std::logic_error("no crossing pair despite end degree sum >= order");
  return canonical(std::move(*cycle));
}

std::optional<HamCycle> rotation_cycle(const KPartiteGraph& g) {
  if (g.order() < 3) return std::nullopt;
  std::vector<Vertex> ring;
  ring.reserve(g.order());
  for (int i = 0; i < g.n(); ++i)
    for (int p = 0; p < g.k(); ++p) ring.push_back(p * g.n() + i);
  auto repaired = repair_gaps(g.graph(), std::move(ring));
  if (!repaired) return std::nullopt;
  return canonical(HamCycle{std::move(*repaired)});
}

namespace {

class DegreeSortedSearch {
 public:
  explicit DegreeSortedSearch(const Graph& g) : g_(g) {}

  std::optional<HamCycle> run() {
    const int order = g_.order();
    if (order < 3) return std::nullopt;
    path_.assign(1, 0);
    if (!extend(0, g_.all() & ~bit(0))) return std::nullopt;
    return HamCycle{path_};
  }

 private:
  bool extend(Vertex cur, VertexSet unvisited) {
    if (!unvisited) return g_.adjacent(cur, 0);
    const VertexSet reachable = unvisited | bit(cur) | bit(0);
    for (VertexSet s = unvisited; s; s &= s - 1) {
      if (popcount(g_.neighbors(lowest(s)) & reachable) < 2) return false;
    }
    std::vector<Vertex> next;
    for (VertexSet s = g_.neighbors(cur) & unvisited; s; s &= s - 1) next.push_back(lowest(s));
    std::stable_sort(next.begin(), next.end(), [&](Vertex x, Vertex y) {
      return g_.degree(x) < g_.degree(y);
    });
    for (Vertex w : next) {
      path_.push_back(w);
      if (extend(w, unvisited & ~bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> path_;
};

}  // namespace

std::optional<HamCycle> search_cycle(const Graph& g) {
  auto cycle = DegreeSortedSearch(g).run();
  if (!cycle) return std::nullopt;
  return canonical(std::move(*cycle));
}

}  // namespace kham
