#include "kham/extremal.hpp"

#include <algorithm>
#include <limits>

#include "kham/conditions.hpp"
#include "kham/constructive.hpp"
#include "kham/error.hpp"
#include "kham/io.hpp"
#include "parallel.hpp"

namespace kham {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "empty range");
  // 2^64 mod bound; draws below it would bias the low residues.
  const std::uint64_t reject_below = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= reject_below) return r % bound;
  }
}

KPartiteGraph tight_non_hamiltonian(int k, int n) {
  if (k == 2 && n == 1) {
    throw Error(ErrorKind::InvalidArgument, "no sharpness witness for G(2,1)");
  }
  const KPartiteGraph host = new_complete(k, n);
  std::vector<Edge> cut;
  for (VertexSet s = host.neighbors(0) & ~bit(n); s; s &= s - 1) cut.push_back({0, lowest(s)});
  return remove_edges(host, cut).graph;
}

namespace {

std::vector<Edge> sample_edges(std::vector<Edge> pool, int count, std::mt19937_64& rng) {
  const std::size_t size = pool.size();
  for (int i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_below(rng, size - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

KPartiteGraph random_graph_at_edge_count(int k, int n, int m, std::uint64_t seed) {
  std::vector<Edge> host = host_edges(k, n);
  if (m < 0 || m > static_cast<int>(host.size())) {
    throw Error(ErrorKind::InvalidArgument, "edge count " + std::to_string(m) + " outside 0.." +
                                                std::to_string(host.size()));
  }
  std::mt19937_64 rng(seed);
  return from_edge_list(k, n, sample_edges(std::move(host), m, rng));
}

int deletion_budget(int k, int n) { return (k - 1) * n - 2; }

namespace {

struct TrialOutcome {
  bool survived = false;
  bool oracle_checked = false;
  bool fallback = false;
  bool disagreement = false;
};

TrialOutcome run_trial(const KPartiteGraph& host, const std::vector<Edge>& deleted,
                       const FaultOptions& options) {
  const KPartiteGraph g = remove_edges(host, deleted).graph;
  TrialOutcome out;
  const SolveResult result = solve(g);
  out.fallback = result.used_fallback();
  const bool solver_applies = !result.failure || *result.failure == SolveFailure::NotHamiltonian;
  const bool solver_cycle = result.cycle && validate_cycle(g.graph(), *result.cycle).valid;

  std::optional<bool> truth;
  if (g.order() >= 3 && g.order() <= options.oracle_cap) {
    truth = is_hamiltonian(g.graph(), options.oracle_cap).hamiltonian;
    out.oracle_checked = true;
  }
  if (truth && solver_applies && *truth != solver_cycle) out.disagreement = true;
  if (truth) {
    out.survived = *truth;
  } else {
    out.survived = solver_cycle;
  }
  return out;
}

void check_budget(int k, int n, int deletions, const FaultOptions& options) {
  if (deletions < 0 || deletions > host_edge_count(k, n)) {
    throw Error(ErrorKind::InvalidArgument, "deletion count out of range");
  }
  if (deletions > deletion_budget(k, n) && !options.allow_over_budget) {
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(deletions) + " deletions exceed the budget (k-1)n-2 = " +
                    std::to_string(deletion_budget(k, n)));
  }
}

struct Tally {
  std::uint64_t survived = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t disagreements = 0;
  std::vector<std::vector<Edge>> failures;

  void add(const TrialOutcome& o, std::vector<Edge> deleted) {
    survived += o.survived;
    oracle_checked += o.oracle_checked;
    fallbacks += o.fallback;
    disagreements += o.disagreement;
    if (!o.survived) failures.push_back(std::move(deleted));
  }
};

void fold(FaultReport& report, std::vector<Tally>& tallies) {
  for (auto& t : tallies) {
    report.survived += t.survived;
    report.oracle_checked += t.oracle_checked;
    report.solver_fallbacks += t.fallbacks;
    report.disagreements += t.disagreements;
    for (auto& f : t.failures) report.failures.push_back(std::move(f));
  }
}

}  // namespace

FaultReport fault_tolerance_trial(int k, int n, int deletions, std::uint64_t trials,
                                  std::uint64_t seed, const FaultOptions& options) {
  check_budget(k, n, deletions, options);
  const KPartiteGraph host = new_complete(k, n);
  const std::vector<Edge> pool = host.edges();

  FaultReport report;
  report.k = k;
  report.n = n;
  report.trials = trials;
  report.deletions_per_trial = deletions;
  report.seed = seed;

  const std::uint64_t chunks = std::min<std::uint64_t>(trials, 256);
  std::vector<Tally> tallies(chunks);
  detail::parallel_chunks(chunks, options.jobs, [&](std::uint64_t c) {
    const std::uint64_t begin = trials * c / chunks;
    const std::uint64_t end = trials * (c + 1) / chunks;
    for (std::uint64_t t = begin; t < end; ++t) {
      std::mt19937_64 rng(seed + t);
      std::vector<Edge> deleted = sample_edges(pool, deletions, rng);
      const TrialOutcome outcome = run_trial(host, deleted, options);
      tallies[c].add(outcome, std::move(deleted));
    }
  });
  fold(report, tallies);
  return report;
}

FaultReport fault_tolerance_exhaustive(int k, int n, int deletions, const FaultOptions& options) {
  check_budget(k, n, deletions, options);
  const KPartiteGraph host = new_complete(k, n);
  const std::vector<Edge> pool = host.edges();
  if (pool.size() > 63) throw Error(ErrorKind::TooLarge, "host too large for exhaustive deletions");

  FaultReport report;
  report.k = k;
  report.n = n;
  report.deletions_per_trial = deletions;
  report.exhaustive = true;

  std::vector<Tally> tallies(1);
  const std::uint64_t limit = std::uint64_t{1} << pool.size();
  std::uint64_t mask = deletions == 0 ? 0 : (std::uint64_t{1} << deletions) - 1;
  while (mask < limit) {
    std::vector<Edge> deleted;
    for (std::uint64_t s = mask; s; s &= s - 1) deleted.push_back(pool[std::countr_zero(s)]);
    const TrialOutcome outcome = run_trial(host, deleted, options);
    tallies[0].add(outcome, std::move(deleted));
    ++report.trials;
    if (mask == 0) break;
    // Next mask with the same popcount (colex successor).
    const std::uint64_t low = mask & (0 - mask);
    const std::uint64_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  fold(report, tallies);
  return report;
}

std::string to_text_block(const FaultReport& r) {
  std::string out;
  out += "k=" + std::to_string(r.k) + "\n";
  out += "n=" + std::to_string(r.n) + "\n";
  out += "trials=" + std::to_string(r.trials) + "\n";
  out += "deletions=" + std::to_string(r.deletions_per_trial) + "\n";
  out += "survived=" + std::to_string(r.survived) + "\n";
  out += "failures=" + std::to_string(r.failures.size()) + "\n";
  out += "seed=" + std::to_string(r.seed) + "\n";
  out += "rng=" + r.rng + "\n";
  out += std::string("exhaustive=") + (r.exhaustive ? "true" : "false") + "\n";
  out += "oracle_checked=" + std::to_string(r.oracle_checked) + "\n";
  out += "solver_fallbacks=" + std::to_string(r.solver_fallbacks) + "\n";
  out += "disagreements=" + std::to_string(r.disagreements) + "\n";
  return out;
}

std::string to_record(const FaultReport& r) {
  std::string block = to_text_block(r);
  block.pop_back();
  std::replace(block.begin(), block.end(), '\n', ' ');
  return block;
}

std::string failures_text(const FaultReport& r) {
  const KPartiteGraph host = new_complete(r.k, r.n);
  std::string out;
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    if (i) out += "\n";
    out += "# deleted";
    for (const Edge& e : r.failures[i]) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    out += "\n";
    out += write_graph(remove_edges(host, r.failures[i]).graph);
  }
  return out;
}

}  // namespace kham
