#include <doctest.h>

#include <cmath>
#include <random>

#include "kham/conditions.hpp"
#include "kham/error.hpp"
#include "support.hpp"

using namespace kham;

TEST_CASE("edge threshold") {
  CHECK(edge_threshold(2, 1) == 1);
  CHECK(edge_threshold(3, 2) == 10);
  CHECK(edge_threshold(4, 2) == 20);
  CHECK(edge_threshold(2, 3) == 8);
  CHECK(edge_threshold(4, 3) == 47);
  CHECK_THROWS_AS(edge_threshold(1, 2), Error);
  for (int k = 2; k <= 8; ++k)
    for (int n = 2; n <= 8; ++n) {
      CHECK(edge_threshold(k, n) == k * (k - 1) / 2 * n * n - (k - 1) * n + 2);
      CHECK(edge_threshold(k, n) - 1 == k * (k - 1) / 2 * n * n - (k - 1) * n + 1);
    }
}

TEST_CASE("ore") {
  CHECK(check_ore(complete_graph(4)).holds);
  const OreCheck c6 = check_ore(cycle_graph(6));
  CHECK_FALSE(c6.holds);
  REQUIRE(c6.violation);
  CHECK_FALSE(cycle_graph(6).adjacent(c6.violation->first, c6.violation->second));
  CHECK(check_ore(new_complete(2, 3).graph()).holds);
  CHECK_THROWS_AS(check_ore(complete_graph(2)), Error);
}

TEST_CASE("general edge bound") {
  auto with_edges = [](int order, int m) {
    Graph g(order);
    int added = 0;
    for (int u = 0; u < order && added < m; ++u)
      for (int v = u + 1; v < order && added < m; ++v, ++added) g.add_edge(u, v);
    return g;
  };
  CHECK(check_theorem2_edges(with_edges(4, 5)));
  CHECK_FALSE(check_theorem2_edges(with_edges(4, 4)));
  CHECK(check_theorem2_edges(with_edges(5, 8)));
  CHECK_FALSE(check_theorem2_edges(with_edges(5, 7)));
}

TEST_CASE("minimum degree bound") {
  CHECK(check_theorem4_min_degree(new_complete(3, 2)));
  CHECK(check_theorem4_min_degree(new_complete(2, 3)));
  CHECK_FALSE(check_theorem4_min_degree(new_empty(3, 2)));
  // k = 3, n = 4: bound (3/2 - 1/4)*4 = 5 exactly, strict
  CHECK_FALSE(min_degree_bound_holds(3, 4, 5));
  CHECK(min_degree_bound_holds(3, 4, 6));
  // k = 2, n = 4: bound 2 exactly
  CHECK_FALSE(min_degree_bound_holds(2, 4, 2));
  CHECK(min_degree_bound_holds(2, 4, 3));
}

TEST_CASE("degree sum bound") {
  CHECK(check_theorem5_sigma(new_complete(3, 2)));
  const std::vector<Edge> matching{{0, 3}, {1, 4}, {2, 5}};
  CHECK(check_theorem5_sigma(remove_edges(new_complete(2, 3), matching).graph));
  CHECK_FALSE(check_theorem5_sigma(new_empty(3, 2)));
  CHECK(sigma_bound_holds(3, 2, kSigmaInfinity));
  // k = 3, n = 2: (3 - 1/2)*2 = 5 exactly
  CHECK_FALSE(sigma_bound_holds(3, 2, 5));
  CHECK(sigma_bound_holds(3, 2, 6));
  // k = 4, n = 3: (4 - 2/3)*3 = 10 exactly
  CHECK_FALSE(sigma_bound_holds(4, 3, 10));
  CHECK(sigma_bound_holds(4, 3, 11));
}

TEST_CASE("exact bounds agree with floating evaluation") {
  for (int k = 2; k <= 12; ++k)
    for (int n = 1; n <= 12; ++n) {
      const long double kk = k;
      const long double degree_bound =
          (k % 2 ? kk / 2 - 1 / (kk + 1) : kk / 2 - 2 / (kk + 2)) * n;
      const long double sum_bound = (k % 2 ? kk - 2 / (kk + 1) : kk - 4 / (kk + 2)) * n;
      for (int d = 0; d <= (k - 1) * n; ++d) {
        if (std::fabs(d - degree_bound) > 1e-9L) {
          CHECK(min_degree_bound_holds(k, n, d) == (d > degree_bound));
        } else {
          CHECK_FALSE(min_degree_bound_holds(k, n, d));
        }
      }
      for (int s = 0; s <= 2 * (k - 1) * n; ++s) {
        if (std::fabs(s - sum_bound) > 1e-9L) {
          CHECK(sigma_bound_holds(k, n, s) == (s > sum_bound));
        } else {
          CHECK_FALSE(sigma_bound_holds(k, n, s));
        }
      }
    }
}

TEST_CASE("evaluate") {
  const ConditionReport full = evaluate(new_complete(3, 2));
  CHECK(full.meets_theorem1);
  CHECK(full.meets_ore);
  CHECK(full.meets_theorem2_edges);
  CHECK(full.meets_theorem4_min_degree);
  CHECK(full.meets_theorem5_sigma);
  CHECK(full.meets_theorem11);
  CHECK(full.edge_threshold_t1 == 10);

  const std::vector<Edge> at_zero{{0, 2}, {0, 3}, {0, 4}};
  const ConditionReport low = evaluate(remove_edges(new_complete(3, 2), at_zero).graph);
  CHECK(low.witness.edge_count == 9);
  CHECK(low.witness.min_degree == 1);
  CHECK_FALSE(low.meets_theorem1);
  CHECK_FALSE(low.meets_theorem11);

  for (const auto& g : testing::subsets_with_edges(3, 2, 10)) CHECK(evaluate(g).meets_theorem1);

  const ConditionReport pair = evaluate(new_complete(2, 1));
  CHECK_FALSE(pair.meets_theorem1);
  CHECK_FALSE(pair.meets_theorem11);
}

TEST_CASE("threshold bounds the complement") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 4);
    if (k == 2 && n == 1) continue;
    const auto g = testing::random_kpartite(k, n, 0.97, rng);
    if (evaluate(g).meets_theorem1) CHECK(complement(g).edge_count() <= (k - 1) * n - 2);
  }
}

TEST_CASE("adding an edge never clears a flag") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    if (k * n < 3) continue;
    const auto g = testing::random_kpartite(k, n, 0.85, rng);
    const auto missing = complement(g).edges();
    if (missing.empty()) continue;
    const Edge e = missing[rng() % missing.size()];
    const ConditionReport a = evaluate(g);
    const ConditionReport b = evaluate(add_edge(g, e.u, e.v));
    CHECK((!a.meets_theorem1 || b.meets_theorem1));
    CHECK((!a.meets_ore || b.meets_ore));
    CHECK((!a.meets_theorem2_edges || b.meets_theorem2_edges));
    CHECK((!a.meets_theorem4_min_degree || b.meets_theorem4_min_degree));
    CHECK((!a.meets_theorem5_sigma || b.meets_theorem5_sigma));
    CHECK((!a.meets_theorem11 || b.meets_theorem11));
  }
}

TEST_CASE("report serialization") {
  const ConditionReport r = evaluate(new_complete(3, 2));
  const std::string block = to_text_block(r);
  CHECK(block.find("meets_theorem1=true\n") != std::string::npos);
  CHECK(block.find("sigma=inf\n") != std::string::npos);
  const std::string record = to_record(r);
  CHECK(record.find('\n') == std::string::npos);
  CHECK(record.find("edge_threshold_t1=10") != std::string::npos);
}
