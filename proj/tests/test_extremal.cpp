#include <doctest.h>

#include "kham/conditions.hpp"
#include "kham/error.hpp"
#include "kham/extremal.hpp"
#include "kham/oracle.hpp"
#include "support.hpp"

using namespace kham;

TEST_CASE("tight witnesses") {
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {2, 4}, {5, 2}}) {
    const auto g = tight_non_hamiltonian(k, n);
    CHECK(g.edge_count() == edge_threshold(k, n) - 1);
    CHECK(g.graph().min_degree() == 1);
    CHECK(g.degree(0) == 1);
    CHECK_FALSE(is_hamiltonian(g.graph()).hamiltonian);
  }
  CHECK_FALSE(testing::permutation_hamiltonian(tight_non_hamiltonian(3, 2).graph()));
  CHECK(tight_non_hamiltonian(2, 3).edge_count() == 7);
  CHECK(tight_non_hamiltonian(4, 2).edge_count() == 19);
  CHECK_THROWS_AS(tight_non_hamiltonian(2, 1), Error);
}

TEST_CASE("uniform_below") {
  std::mt19937_64 a(1);
  std::mt19937_64 b(1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = uniform_below(a, 7);
    CHECK(x < 7);
    CHECK(x == uniform_below(b, 7));
  }
  std::mt19937_64 c(2);
  CHECK(uniform_below(c, 1) == 0);
  CHECK_THROWS_AS(uniform_below(c, 0), Error);
}

TEST_CASE("random graphs by edge count") {
  CHECK(random_graph_at_edge_count(3, 2, 12, 1) == new_complete(3, 2));
  CHECK(random_graph_at_edge_count(3, 2, 0, 1) == new_empty(3, 2));
  CHECK(random_graph_at_edge_count(3, 2, 10, 7) == random_graph_at_edge_count(3, 2, 10, 7));
  CHECK(random_graph_at_edge_count(4, 3, 30, 9).edge_count() == 30);
  CHECK_THROWS_AS(random_graph_at_edge_count(3, 2, 13, 1), Error);
  CHECK_THROWS_AS(random_graph_at_edge_count(3, 2, -1, 1), Error);
}

TEST_CASE("fault trials") {
  const FaultReport r = fault_tolerance_trial(4, 3, 7, 1000, 42);
  CHECK(deletion_budget(4, 3) == 7);
  CHECK(r.survived == 1000);
  CHECK(r.failures.empty());
  CHECK(r.oracle_checked == 1000);
  CHECK(r.disagreements == 0);
  CHECK(r.rng == "mt19937_64");

  FaultOptions parallel;
  parallel.jobs = 3;
  const FaultReport s = fault_tolerance_trial(4, 3, 7, 1000, 42, parallel);
  CHECK(to_record(r) == to_record(s));

  try {
    fault_tolerance_trial(4, 3, 8, 10, 1);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  FaultOptions over;
  over.allow_over_budget = true;
  CHECK(fault_tolerance_trial(4, 3, 8, 10, 1, over).trials == 10);
}

TEST_CASE("exhaustive deletions") {
  const FaultReport two = fault_tolerance_exhaustive(3, 2, 2);
  CHECK(two.trials == 66);
  CHECK(two.survived == 66);
  CHECK(two.exhaustive);

  FaultOptions over;
  over.allow_over_budget = true;
  const FaultReport three = fault_tolerance_exhaustive(3, 2, 3, over);
  CHECK(three.trials == 220);
  CHECK(three.failures.size() > 0);
  CHECK(three.survived + three.failures.size() == 220);
  int independent = 0;
  for (const auto& g : testing::subsets_with_edges(3, 2, 9))
    independent += !testing::permutation_hamiltonian(g.graph());
  CHECK(three.failures.size() == static_cast<std::size_t>(independent));

  const std::string text = failures_text(three);
  CHECK(text.rfind("# deleted ", 0) == 0);
}

TEST_CASE("report formats") {
  const FaultReport r = fault_tolerance_exhaustive(2, 2, 0);
  CHECK(r.trials == 1);
  CHECK(r.survived == 1);
  const std::string record = to_record(r);
  CHECK(record.find('\n') == std::string::npos);
  CHECK(record.find("rng=mt19937_64") != std::string::npos);
  CHECK(to_text_block(r).find("survived=1\n") != std::string::npos);
}
