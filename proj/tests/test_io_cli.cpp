#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "kham/cli.hpp"
#include "kham/error.hpp"
#include "kham/extremal.hpp"
#include "kham/io.hpp"
#include "support.hpp"

using namespace kham;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("kham_test_" + name);
  write_text_file(path, text);
  return path.string();
}

}  // namespace

TEST_CASE("write format") {
  CHECK(write_graph(new_complete(2, 2)) == "kpartite 2 2 4\n0 2\n0 3\n1 2\n1 3\n");
}

TEST_CASE("parse diagnostics") {
  try {
    parse_graph("kpartite 2 2 1\n0 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("intra-part") != std::string::npos);
  }
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("kpartite 2 x 1\n0 2\n") == 1);
  CHECK(line_of("graph 2 2 1\n0 2\n") == 1);
  CHECK(line_of("kpartite 2 2 1\n0 9\n") == 2);
  CHECK(line_of("kpartite 2 2 2\n0 2\n") == 2);
  CHECK(line_of("kpartite 2 2 1\n2 0\n") == 2);
  CHECK(line_of("# c\n\nkpartite 2 2 1\n0 2 3\n") == 4);
  CHECK(line_of("kpartite 2 2 1\n0 2\n1 3\n") == 3);
  CHECK(line_of("kpartite 9 8 0\n") == 1);
  CHECK(line_of("") == 1);
  CHECK(parse_graph("# comment\nkpartite 2 2 1\r\n\n0 3\r\n") == from_edge_list(2, 2, std::vector<Edge>{{0, 3}}));
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto g = testing::random_kpartite(k, n, 0.5, rng);
    CHECK(parse_graph(write_graph(g)) == g);
  }
  const std::string two = write_graph(new_complete(2, 2)) + "\n" + write_graph(new_empty(3, 1));
  CHECK(parse_graphs(two).size() == 2);
}

TEST_CASE("cycle text") {
  CHECK(parse_cycle("0 2 1 3").vertices == std::vector<Vertex>{0, 2, 1, 3});
  CHECK(parse_cycle("0,2, 1,3").vertices == std::vector<Vertex>{0, 2, 1, 3});
  CHECK_THROWS_AS(parse_cycle("0 a"), Error);
}

TEST_CASE("cli check and solve") {
  const std::string full = temp_file("c32", write_graph(new_complete(3, 2)));
  const Run check = cli({"check", full});
  CHECK(check.code == 0);
  for (const char* key : {"meets_theorem1", "meets_ore", "meets_theorem2_edges",
                          "meets_theorem4_min_degree", "meets_theorem5_sigma", "meets_theorem11"})
    CHECK(check.out.find(std::string(key) + "=true\n") != std::string::npos);
  const Run record = cli({"check", full, "--record"});
  CHECK(record.out.find('\n') == record.out.size() - 1);

  const std::string tight = temp_file("t32", write_graph(tight_non_hamiltonian(3, 2)));
  const Run below = cli({"solve", tight});
  CHECK(below.code == 0);
  CHECK(below.out.rfind("none HypothesisNotMet\n", 0) == 0);

  const Run solved = cli({"solve", full});
  CHECK(solved.code == 0);
  REQUIRE(solved.out.rfind("cycle ", 0) == 0);
  const std::string ids = solved.out.substr(6, solved.out.find('\n') - 6);
  const Run valid = cli({"validate", full, "--cycle", ids});
  CHECK(valid.code == 0);
  CHECK(valid.out == "valid\n");
  const Run invalid = cli({"validate", tight, "--cycle", ids});
  CHECK(invalid.code == 0);
  CHECK(invalid.out.rfind("invalid ", 0) == 0);

  const Run oracle = cli({"oracle", tight});
  CHECK(oracle.out == "hamiltonian=false\n");
}

TEST_CASE("cli generators") {
  CHECK(cli({"gen-complete", "2", "2"}).out == write_graph(new_complete(2, 2)));
  CHECK(cli({"gen-tight", "3", "2"}).out == write_graph(tight_non_hamiltonian(3, 2)));
  const Run a = cli({"gen-random", "3", "2", "7", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == cli({"gen-random", "3", "2", "7", "--seed", "5"}).out);
  CHECK(cli({"gen-random", "3", "2", "7"}).code == 2);

  const auto path = std::filesystem::temp_directory_path() / "kham_test_out";
  CHECK(cli({"-o", path.string(), "gen-complete", "2", "3"}).out.empty());
  CHECK(read_text_file(path) == write_graph(new_complete(2, 3)));
}

TEST_CASE("cli sweeps") {
  const Run e = cli({"enumerate", "3", "2", "--min-edges", "10"});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("total=79 non_hamiltonian=0 ", 0) == 0);
  CHECK(e.out == cli({"enumerate", "3", "2", "--min-edges", "10", "--jobs", "3"}).out);

  const auto cx = std::filesystem::temp_directory_path() / "kham_test_cx";
  const Run nine = cli({"enumerate", "3", "2", "--min-edges", "9", "--counterexamples", cx.string()});
  CHECK(nine.code == 0);
  const auto at = nine.out.find("non_hamiltonian=") + 16;
  const std::size_t reported = std::stoul(nine.out.substr(at, nine.out.find(' ', at) - at));
  CHECK(reported > 0);
  CHECK(parse_graphs(read_text_file(cx)).size() == reported);

  const Run f = cli({"faults", "4", "3", "--deletions", "7", "--trials", "100", "--seed", "42"});
  CHECK(f.code == 0);
  CHECK(f.out.find("survived=100 failures=0") != std::string::npos);
  const Run over = cli({"faults", "4", "3", "--deletions", "8", "--trials", "5", "--seed", "1"});
  CHECK(over.code == 1);
  CHECK(over.err.find("BudgetExceeded") != std::string::npos);
  CHECK(cli({"faults", "4", "3", "--deletions", "8", "--trials", "5", "--seed", "1",
             "--override-budget"}).code == 0);
  CHECK(cli({"faults", "4", "3", "--deletions", "7", "--trials", "5"}).code == 2);
  const Run ex = cli({"faults", "3", "2", "--deletions", "2", "--exhaustive"});
  CHECK(ex.out.find("trials=66 ") != std::string::npos);
}

TEST_CASE("cli errors") {
  CHECK(cli({}).code == 2);
  const Run unknown = cli({"bogus"});
  CHECK(unknown.code == 2);
  const Run flag = cli({"check"});
  CHECK(flag.code == 2);
  CHECK(flag.err.find("--record") != std::string::npos);

  const Run missing = cli({"check", "/nonexistent/graph.txt"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("/nonexistent/graph.txt") != std::string::npos);

  const std::string broken = temp_file("broken", "kpartite 2 2 1\n0 1\n");
  const Run parse = cli({"solve", broken});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("line 2") != std::string::npos);
  CHECK(parse.err.find(broken) != std::string::npos);

  CHECK(cli({"--help"}).code == 0);
}
