#include "kham/conditions.hpp"

#include <cstdint>
#include <sstream>

#include "kham/error.hpp"

namespace kham {

namespace {

void require_min_order(const Graph& g) {
  if (g.order() < 3) {
    throw Error(ErrorKind::TooSmall, "condition needs at least 3 vertices, got " +
                                         std::to_string(g.order()));
  }
}

// Numerator/denominator of the fractional coefficient c with bound c·n.
struct Coefficient {
  std::int64_t num;
  std::int64_t den;
};

// k/2 − 1/(k+1) = (k(k+1) − 2) / (2(k+1)); k/2 − 2/(k+2) = (k(k+2) − 4) / (2(k+2)).
Coefficient min_degree_coefficient(std::int64_t k) {
  if (k % 2 == 1) return {k * (k + 1) - 2, 2 * (k + 1)};
  return {k * (k + 2) - 4, 2 * (k + 2)};
}

// k − 2/(k+1) = (k(k+1) − 2) / (k+1); k − 4/(k+2) = (k(k+2) − 4) / (k+2).
Coefficient sigma_coefficient(std::int64_t k) {
  if (k % 2 == 1) return {k * (k + 1) - 2, k + 1};
  return {k * (k + 2) - 4, k + 2};
}

bool exceeds(std::int64_t value, Coefficient c, std::int64_t n) { return value * c.den > c.num * n; }

std::string pair_value(const std::optional<std::pair<Vertex, Vertex>>& p) {
  if (!p) return "none";
  return std::to_string(p->first) + "," + std::to_string(p->second);
}

std::string sigma_value(int sigma) {
  return sigma == kSigmaInfinity ? "inf" : std::to_string(sigma);
}

}  // namespace

int edge_threshold(int k, int n) {
  if (k < 2 || n < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "edge threshold needs k >= 2 and n >= 1, got k=" + std::to_string(k) +
                    " n=" + std::to_string(n));
  }
  if (k == 2 && n == 1) return 1;
  return host_edge_count(k, n) - (k - 1) * n + 2;
}

OreCheck check_ore(const Graph& g) {
  require_min_order(g);
  const int order = g.order();
  for (Vertex u = 0; u < order; ++u) {
    VertexSet later = g.all() & ~g.neighbors(u) & ~((bit(u) << 1) - 1);
    for (; later; later &= later - 1) {
      Vertex v = lowest(later);
      if (g.degree(u) + g.degree(v) < order) return {false, std::pair{u, v}};
    }
  }
  return {true, std::nullopt};
}

bool check_theorem2_edges(const Graph& g) {
  require_min_order(g);
  const int m = g.order() - 1;
  return g.edge_count() >= m * (m - 1) / 2 + 2;
}

bool min_degree_bound_holds(int k, int n, int min_degree) {
  return exceeds(min_degree, min_degree_coefficient(k), n);
}

bool sigma_bound_holds(int k, int n, int sigma) {
  if (sigma == kSigmaInfinity) return true;
  return exceeds(sigma, sigma_coefficient(k), n);
}

bool check_theorem4_min_degree(const KPartiteGraph& g) {
  return min_degree_bound_holds(g.k(), g.n(), g.graph().min_degree());
}

bool check_theorem5_sigma(const KPartiteGraph& g) {
  return sigma_bound_holds(g.k(), g.n(), stats(g).sigma);
}

ConditionReport evaluate(const KPartiteGraph& g) {
  ConditionReport r;
  r.k = g.k();
  r.n = g.n();
  r.witness = stats(g);
  r.edge_threshold_t1 = edge_threshold(g.k(), g.n());

  // (2,1) is excluded from both edge-count bounds: a 2-vertex graph has no cycle.
  const bool excluded = g.k() == 2 && g.n() == 1;
  const int edges = r.witness.edge_count;
  r.meets_theorem1 = !excluded && edges >= r.edge_threshold_t1;
  r.meets_theorem11 = !excluded && edges >= r.edge_threshold_t1 - 1 && r.witness.min_degree >= 2;

  if (g.order() >= 3) {
    OreCheck ore = check_ore(g.graph());
    r.meets_ore = ore.holds;
    r.ore_violation = ore.violation;
    r.meets_theorem2_edges = check_theorem2_edges(g.graph());
  }
  r.meets_theorem4_min_degree = min_degree_bound_holds(g.k(), g.n(), r.witness.min_degree);
  r.meets_theorem5_sigma = sigma_bound_holds(g.k(), g.n(), r.witness.sigma);

  if (!r.meets_theorem4_min_degree || !r.meets_theorem11) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == r.witness.min_degree) {
        r.min_degree_vertex = v;
        break;
      }
    }
  }
  if (!r.meets_theorem5_sigma) r.sigma_witness = sigma_pair(g);
  return r;
}

std::string to_text_block(const ConditionReport& r) {
  std::ostringstream out;
  out << std::boolalpha << "k=" << r.k << '\n'
      << "n=" << r.n << '\n'
      << "edges=" << r.witness.edge_count << '\n'
      << "min_degree=" << r.witness.min_degree << '\n'
      << "sigma=" << sigma_value(r.witness.sigma) << '\n'
      << "edge_threshold_t1=" << r.edge_threshold_t1 << '\n'
      << "meets_theorem1=" << r.meets_theorem1 << '\n'
      << "meets_ore=" << r.meets_ore << '\n'
      << "meets_theorem2_edges=" << r.meets_theorem2_edges << '\n'
      << "meets_theorem4_min_degree=" << r.meets_theorem4_min_degree << '\n'
      << "meets_theorem5_sigma=" << r.meets_theorem5_sigma << '\n'
      << "meets_theorem11=" << r.meets_theorem11 << '\n'
      << "ore_violation=" << pair_value(r.ore_violation) << '\n'
      << "min_degree_vertex="
      << (r.min_degree_vertex ? std::to_string(*r.min_degree_vertex) : "none") << '\n'
      << "sigma_witness=" << pair_value(r.sigma_witness) << '\n';
  return out.str();
}

std::string to_record(const ConditionReport& r) {
  std::string block = to_text_block(r);
  block.pop_back();
  for (char& c : block)
    if (c == '\n') c = ' ';
  return block;
}

}  // namespace kham
