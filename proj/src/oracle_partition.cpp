#include <algorithm>
#include <atomic>
#include <limits>

#include "wnc/oracle.hpp"

namespace wnc {
namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct LowerEdge {
  VertexId other;
  bool negative;
};

// Vertex i's edges to vertices j < i, so the cost of placing i is known as
// soon as i is assigned.
std::vector<std::vector<LowerEdge>> lower_edges(const SignedGraph& g) {
  std::vector<std::vector<LowerEdge>> out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    const VertexId hi = std::max(e.u, e.v);
    const VertexId lo = std::min(e.u, e.v);
    out[hi].push_back({lo, e.negative()});
  }
  return out;
}

std::size_t placement_cost(const std::vector<LowerEdge>& lower, const std::vector<int>& rgs,
                           int block) {
  std::size_t cost = 0;
  for (const LowerEdge& le : lower) {
    const bool same = rgs[le.other] == block;
    if (same == le.negative) ++cost;
  }
  return cost;
}

// Depth-first walk over restricted-growth strings from a fixed prefix.
// Prunes on cost >= local best, and on cost > shared bound so that every
// subtree still finds its own lexicographically first optimum.
class RgsSearch {
 public:
  RgsSearch(const std::vector<std::vector<LowerEdge>>& lower, std::atomic<std::size_t>* shared)
      : lower_(lower), shared_(shared), rgs_(lower.size(), 0) {}

  void run(const std::vector<int>& prefix, std::size_t prefix_cost) {
    int max_block = -1;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      rgs_[i] = prefix[i];
      max_block = std::max(max_block, prefix[i]);
    }
    descend(prefix.size(), max_block, prefix_cost);
  }

  std::size_t best_cost() const { return best_; }
  const std::vector<int>& best_rgs() const { return best_rgs_; }

 private:
  void descend(std::size_t i, int max_block, std::size_t cost) {
    if (cost >= best_) return;
    if (shared_ != nullptr && cost > shared_->load(std::memory_order_relaxed)) return;
    if (i == rgs_.size()) {
      best_ = cost;
      best_rgs_ = rgs_;
      if (shared_ != nullptr) {
        std::size_t cur = shared_->load(std::memory_order_relaxed);
        while (cost < cur && !shared_->compare_exchange_weak(cur, cost)) {
        }
      }
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs_[i] = b;
      descend(i + 1, std::max(max_block, b), cost + placement_cost(lower_[i], rgs_, b));
    }
  }

  const std::vector<std::vector<LowerEdge>>& lower_;
  std::atomic<std::size_t>* shared_;
  std::vector<int> rgs_;
  std::size_t best_ = kUnbounded;
  std::vector<int> best_rgs_;
};

struct Prefix {
  std::vector<int> rgs;
  std::size_t cost;
};

void collect_prefixes(const std::vector<std::vector<LowerEdge>>& lower, std::size_t depth,
                      std::vector<int>& rgs, int max_block, std::size_t cost,
                      std::vector<Prefix>& out) {
  if (rgs.size() == depth) {
    out.push_back({rgs, cost});
    return;
  }
  const std::size_t i = rgs.size();
  rgs.push_back(0);
  for (int b = 0; b <= max_block + 1; ++b) {
    rgs[i] = b;
    collect_prefixes(lower, depth, rgs, std::max(max_block, b),
                     cost + placement_cost(lower[i], rgs, b), out);
  }
  rgs.pop_back();
}

void check_size(const SignedGraph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices) throw TooLargeForOracle(g.vertex_count(), max_vertices);
}

}  // namespace

PartitionSearchResult min_disagreement_partition_serial(const SignedGraph& g,
                                                        std::size_t max_vertices) {
  check_size(g, max_vertices);
  const auto lower = lower_edges(g);
  RgsSearch search(lower, nullptr);
  search.run({}, 0);
  return {search.best_cost(), Partition::from_labels(search.best_rgs())};
}

PartitionSearchResult min_disagreement_partition(const SignedGraph& g, std::size_t max_vertices) {
  check_size(g, max_vertices);
  const std::size_t n = g.vertex_count();
  const auto lower = lower_edges(g);

  // Fixing the first few vertices yields Bell(depth) independent subtrees.
  const std::size_t depth = std::min<std::size_t>(n, 6);
  std::vector<Prefix> prefixes;
  std::vector<int> scratch;
  collect_prefixes(lower, depth, scratch, -1, 0, prefixes);

  std::atomic<std::size_t> shared{kUnbounded};
  std::vector<std::size_t> task_cost(prefixes.size(), kUnbounded);
  std::vector<std::vector<int>> task_rgs(prefixes.size());
  const auto tasks = static_cast<std::ptrdiff_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < tasks; ++k) {
    RgsSearch search(lower, &shared);
    search.run(prefixes[k].rgs, prefixes[k].cost);
    task_cost[k] = search.best_cost();
    task_rgs[k] = search.best_rgs();
  }

  // Prefixes are in lexicographic order, so the first optimal task holds the
  // lexicographically first optimal string.
  std::size_t pick = 0;
  for (std::size_t k = 1; k < prefixes.size(); ++k) {
    if (task_cost[k] < task_cost[pick]) pick = k;
  }
  return {task_cost[pick], Partition::from_labels(task_rgs[pick])};
}

}  // namespace wnc
