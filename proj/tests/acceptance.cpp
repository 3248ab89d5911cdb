// Acceptance suite: prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wnc/cli/commands.hpp"
#include "wnc/cluster.hpp"
#include "wnc/decompose.hpp"
#include "wnc/detect.hpp"
#include "wnc/gen.hpp"
#include "wnc/oracle.hpp"

namespace {

using namespace wnc;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kCorpusSize = 5000;
constexpr std::uint64_t kCorpusSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure only; later checks still run so counts stay honest.
struct Checker {
  Outcome out;
  void expect(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::vector<EdgeId>> wn_sets(const SignedGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  for (auto& c : testing::subset_circles(g)) {
    if (testing::negatives_in(g, c) == 1) out.push_back(std::move(c));
  }
  return out;
}

const std::vector<SignedGraph>& corpus() {
  static const auto graphs = testing::small_corpus(kCorpusSize, kCorpusSeed);
  return graphs;
}

Outcome k4_benchmark() {
  Checker c;
  const auto t0 = Clock::now();
  const auto path = std::filesystem::temp_directory_path() / "wnc_acceptance_k4.txt";
  std::ofstream(path) << "4 6\n0 1 -\n0 2 +\n0 3 +\n1 2 +\n1 3 +\n2 3 -\n";

  std::ostringstream out, err;
  const int stats_code = cli::run({"stats", path.string()}, out, err);
  c.expect(stats_code == 0, "stats exit code " + std::to_string(stats_code));
  c.expect(out.str().rfind("t = 4\nw = 1\nQ = 2\n", 0) == 0, "stats output: " + out.str());

  std::ostringstream cout_, cerr_;
  const int check_code = cli::run({"check", path.string()}, cout_, cerr_);
  c.expect(check_code == 1, "check exit code " + std::to_string(check_code));
  c.expect(cout_.str().rfind("OVERLAP\n", 0) == 0, "check output: " + cout_.str());

  const auto g =
      build_graph(4, {{0, 1, Sign::negative}, {0, 2, Sign::positive}, {0, 3, Sign::positive},
                      {1, 2, Sign::positive}, {1, 3, Sign::positive}, {2, 3, Sign::negative}});
  c.expect(stats(g) == OracleStats{4, 1, 2}, "library stats differ");
  const auto r = check_structure(g);
  c.expect(!r.verdict(), "verdict true");
  if (!r.verdict()) {
    const auto& w = r.overlap().witness;
    c.expect(witness_is_valid(g, w), "invalid witness");
    c.expect(w.circle_a.size() == 3 && w.circle_b.size() == 3, "witness circles are not triangles");
    c.expect(!w.shared_edge_ids.empty(), "no shared edge");
  }
  std::filesystem::remove(path);
  const double secs = seconds_since(t0);
  c.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (c.out.pass) c.out.detail = "t=4 w=1 Q=2, overlap witness valid, " + std::to_string(secs) + " s";
  return c.out;
}

Outcome verdict_equivalence() {
  Checker c;
  std::size_t yes = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& g = corpus()[k];
    const bool verdict = check_structure(g).verdict();
    c.expect(verdict == !testing::naive_overlap(g), "mismatch on corpus graph " + std::to_string(k));
    yes += verdict;
  }
  if (c.out.pass) {
    c.out.detail = std::to_string(corpus().size()) + " graphs, " + std::to_string(yes) +
                   " structured, " + std::to_string(corpus().size() - yes) + " overlapping";
  }
  return c.out;
}

// disagreements(canonical) = Q = w = t = |intra negatives|, all from oracles.
void check_exact(Checker& c, const SignedGraph& g, const std::string& label) {
  const auto r = check_structure(g);
  c.expect(r.verdict(), label + ": verdict false");
  if (!r.verdict()) return;
  const auto& s = r.structured();
  const auto wn = wn_sets(g);
  const std::size_t d = disagreements(g, s.canonical_clustering).count;
  const std::size_t q = testing::brute_force_q(g);
  const std::size_t w = testing::brute_force_packing(wn);
  const std::size_t intra = s.intra_component_negative_edge_ids.size();
  c.expect(d == q && q == w && w == wn.size() && wn.size() == intra,
           label + ": d=" + std::to_string(d) + " Q=" + std::to_string(q) + " w=" + std::to_string(w) +
               " t=" + std::to_string(wn.size()) + " intra=" + std::to_string(intra));
}

Outcome exactness() {
  Checker c;
  std::size_t from_corpus = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    if (!check_structure(corpus()[k]).verdict()) continue;
    check_exact(c, corpus()[k], "corpus graph " + std::to_string(k));
    ++from_corpus;
  }
  std::size_t generated = 0;
  std::size_t infeasible = 0;
  std::size_t positive_q = 0;
  GenConfig cfg;
  cfg.mode = GenMode::structured;
  for (std::uint64_t seed = 0; generated < 1000; ++seed) {
    cfg.seed = seed;
    cfg.n = 1 + seed % 10;
    cfg.allow_parallel = seed % 4 == 0;
    // The subset circle oracle needs at most ~16 edges.
    const std::size_t cap = cfg.allow_parallel ? 14 : std::min<std::size_t>(14, cfg.n * (cfg.n - 1) / 2);
    cfg.m = cfg.n < 2 ? 0 : std::min<std::size_t>(cap, cfg.n - 1 + seed % 6);
    cfg.negative_fraction = 0.15 + 0.1 * static_cast<double>(seed % 5);
    SignedGraph g;
    try {
      g = structured_signed_graph(cfg);
    } catch (const InfeasibleBudget&) {
      ++infeasible;
      continue;
    }
    check_exact(c, g, "structured seed " + std::to_string(seed));
    positive_q += !check_structure(g).structured().intra_component_negative_edge_ids.empty();
    ++generated;
  }
  c.expect(positive_q > 200, "too few structured graphs with Q > 0: " + std::to_string(positive_q));
  if (c.out.pass) {
    c.out.detail = std::to_string(from_corpus) + " corpus + " + std::to_string(generated) +
                   " structured graphs (" + std::to_string(positive_q) + " with Q > 0, " +
                   std::to_string(infeasible) + " infeasible budgets skipped)";
  }
  return c.out;
}

Outcome proposition_suite() {
  Checker c;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& g = corpus()[k];
    const auto p = proposition_check(g);
    c.expect(p.consistent(), "inconsistent on corpus graph " + std::to_string(k));
    const auto s = stats(g);
    c.expect(s.w <= s.q && s.q <= s.t, "w <= Q <= t fails on corpus graph " + std::to_string(k));
  }
  if (c.out.pass) c.out.detail = std::to_string(corpus().size()) + " graphs";
  return c.out;
}

Outcome observation_suite() {
  Checker c;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    c.expect(observation_check(corpus()[k]), "fails on corpus graph " + std::to_string(k));
  }
  if (c.out.pass) c.out.detail = std::to_string(corpus().size()) + " graphs";
  return c.out;
}

// Invariants checked by hand here, independent of witness_is_valid.
bool witness_invariants(const SignedGraph& g, const WitnessPair& w) {
  const auto negatives = [&](const Circle& c) {
    return std::count_if(c.edges().begin(), c.edges().end(),
                         [&](EdgeId e) { return g.edge(e).negative(); });
  };
  if (negatives(w.circle_a) != 1 || negatives(w.circle_b) != 1) return false;
  if (w.circle_a == w.circle_b || w.shared_edge_ids.empty()) return false;
  const auto circles = testing::subset_circles(g);
  for (const Circle* c : {&w.circle_a, &w.circle_b}) {
    std::vector<EdgeId> s(c->edges().begin(), c->edges().end());
    std::sort(s.begin(), s.end());
    if (std::find(circles.begin(), circles.end(), s) == circles.end()) return false;
  }
  std::set<EdgeId> a(w.circle_a.edges().begin(), w.circle_a.edges().end());
  std::vector<EdgeId> shared;
  for (EdgeId e : w.circle_b.edges()) {
    if (a.count(e)) shared.push_back(e);
  }
  std::sort(shared.begin(), shared.end());
  return shared == w.shared_edge_ids;
}

Outcome witness_validity() {
  Checker c;
  std::size_t checked = 0;
  std::size_t step5 = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& g = corpus()[k];
    const auto r = check_structure(g);
    if (r.verdict()) continue;
    const auto& w = r.overlap().witness;
    c.expect(witness_is_valid(g, w), "witness_is_valid rejects corpus graph " + std::to_string(k));
    c.expect(witness_invariants(g, w), "invariants fail on corpus graph " + std::to_string(k));
    step5 += r.overlap().failed_step == FailedStep::step5;
    ++checked;
  }
  if (c.out.pass) {
    c.out.detail = std::to_string(checked) + " witnesses (" + std::to_string(checked - step5) +
                   " step4, " + std::to_string(step5) + " step5)";
  }
  return c.out;
}

Outcome generator_soundness() {
  Checker c;
  GenConfig cfg;
  cfg.mode = GenMode::structured;
  std::size_t count = 0;
  std::size_t infeasible = 0;
  std::size_t largest = 0;
  for (std::uint64_t seed = 0; count < 2000; ++seed) {
    cfg.seed = 1000 + seed;
    cfg.n = 1 + seed % 50;
    cfg.allow_parallel = seed % 3 == 0;
    const std::size_t simple_cap = cfg.n * (cfg.n - 1) / 2;
    const std::size_t want = cfg.n + seed % (cfg.n + 1);
    cfg.m = cfg.n < 2 ? 0 : (cfg.allow_parallel ? want : std::min(want, simple_cap / 2));
    cfg.negative_fraction = 0.05 * static_cast<double>(seed % 11);
    SignedGraph g;
    try {
      g = structured_signed_graph(cfg);
    } catch (const InfeasibleBudget&) {
      ++infeasible;
      continue;
    }
    c.expect(g.edge_count() == cfg.m, "wrong edge count for seed " + std::to_string(cfg.seed));
    c.expect(check_structure(g).verdict(), "verdict false for seed " + std::to_string(cfg.seed));
    largest = std::max(largest, cfg.n);
    ++count;
  }
  c.expect(infeasible * 20 < count, "too many infeasible budgets: " + std::to_string(infeasible));
  if (c.out.pass) {
    c.out.detail = std::to_string(count) + " outputs, n up to " + std::to_string(largest) + ", " +
                   std::to_string(infeasible) + " infeasible budgets skipped";
  }
  return c.out;
}

Outcome decomposition_oracles() {
  Checker c;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& g = corpus()[k];
    const std::string label = "corpus graph " + std::to_string(k);
    const auto all = testing::all_edge_ids(g);
    c.expect(bridges(g) == testing::naive_bridges(g, all), label + ": bridges");

    const auto circles = testing::subset_circles(g);
    std::vector<int> on_circles(g.edge_count(), 0);
    for (const auto& circ : circles) {
      for (EdgeId e : circ) ++on_circles[e];
    }
    std::vector<int> covered(g.edge_count(), 0);
    for (const auto& b : block_decomposition(g).blocks) {
      std::vector<EdgeId> s = b.edge_ids;
      std::sort(s.begin(), s.end());
      for (EdgeId e : s) ++covered[e];
      const bool is_circle = std::find(circles.begin(), circles.end(), s) != circles.end();
      const bool is_isthmus = s.size() == 1 && on_circles[s[0]] == 0;
      const BlockKind expected =
          is_isthmus ? BlockKind::isthmus : (is_circle ? BlockKind::circle : BlockKind::other);
      c.expect(b.kind == expected, label + ": block kind");
    }
    c.expect(std::all_of(covered.begin(), covered.end(), [](int x) { return x == 1; }),
             label + ": blocks do not partition the edges");

    const bool connected = testing::naive_component_count(g, all) == 1;
    const bool one_circle_each =
        std::all_of(on_circles.begin(), on_circles.end(), [](int x) { return x <= 1; });
    c.expect(is_cactus(g) == (connected && one_circle_each), label + ": is_cactus");
  }
  if (c.out.pass) c.out.detail = std::to_string(corpus().size()) + " graphs";
  return c.out;
}

Outcome performance() {
  Checker c;
  GenConfig cfg;
  cfg.mode = GenMode::structured;
  cfg.seed = 9;
  cfg.n = 10000;
  cfg.m = 50000;
  const auto g = structured_signed_graph(cfg);
  const auto t0 = Clock::now();
  const auto r = check_structure(g);
  const double secs = seconds_since(t0);
  c.expect(r.verdict(), "verdict false");
  c.expect(secs < 5.0, "took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << "n=10000 m=50000 in " << secs << " s";
  if (c.out.pass) c.out.detail = d.str();
  return c.out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"K4 benchmark", k4_benchmark},
      {"verdict equals oracle overlap predicate", verdict_equivalence},
      {"exactness on the structured class", exactness},
      {"three conditions agree and w <= Q <= t", proposition_suite},
      {"observation check", observation_suite},
      {"witness validity", witness_validity},
      {"generator soundness", generator_soundness},
      {"decomposition oracles", decomposition_oracles},
      {"performance smoke test", performance},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << k + 1 << ' ' << criteria[k].first << ": "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
