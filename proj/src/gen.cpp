#include "wnc/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "wnc/decompose.hpp"

namespace wnc {

Xorshift64Star::Xorshift64Star(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  state_ = z != 0 ? z : 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

double Xorshift64Star::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

std::uint64_t pair_key(std::uint64_t a, std::uint64_t b) {
  if (a > b) std::swap(a, b);
  return (a << 32) | b;
}

std::uint64_t simple_capacity(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

void check_fraction(const GenConfig& cfg) {
  if (!(cfg.negative_fraction >= 0.0 && cfg.negative_fraction <= 1.0)) {
    throw PreconditionViolated("negative fraction must lie in [0, 1]");
  }
}

void check_budget(const GenConfig& cfg) {
  const bool ok = cfg.allow_parallel ? (cfg.m == 0 || cfg.n >= 2) : cfg.m <= simple_capacity(cfg.n);
  if (!ok) {
    throw InfeasibleBudget(std::to_string(cfg.m) + " edges do not fit on " + std::to_string(cfg.n) +
                           (cfg.allow_parallel ? " vertices" : " vertices without parallel edges"));
  }
}

Sign draw_sign(Xorshift64Star& rng, double fraction) {
  return rng.unit() < fraction ? Sign::negative : Sign::positive;
}

std::pair<std::int64_t, std::int64_t> distinct_pair(Xorshift64Star& rng, std::size_t n) {
  const auto u = static_cast<std::int64_t>(rng.below(n));
  auto v = static_cast<std::int64_t>(rng.below(n - 1));
  if (v >= u) ++v;
  return {u, v};
}

}  // namespace

SignedGraph random_signed_graph(const GenConfig& cfg) {
  if (cfg.mode != GenMode::uniform) throw PreconditionViolated("random_signed_graph needs uniform mode");
  check_fraction(cfg);
  check_budget(cfg);
  Xorshift64Star rng(cfg.seed);
  std::vector<EdgeInput> edges;
  edges.reserve(cfg.m);

  if (cfg.allow_parallel) {
    for (std::size_t k = 0; k < cfg.m; ++k) {
      auto [u, v] = distinct_pair(rng, cfg.n);
      edges.push_back({u, v, draw_sign(rng, cfg.negative_fraction)});
    }
  } else if (2 * cfg.m > simple_capacity(cfg.n)) {
    // Dense: partial Fisher-Yates over all vertex pairs.
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    pairs.reserve(simple_capacity(cfg.n));
    for (std::size_t u = 0; u < cfg.n; ++u) {
      for (std::size_t v = u + 1; v < cfg.n; ++v) pairs.emplace_back(u, v);
    }
    for (std::size_t k = 0; k < cfg.m; ++k) {
      std::swap(pairs[k], pairs[k + rng.below(pairs.size() - k)]);
      edges.push_back({pairs[k].first, pairs[k].second, draw_sign(rng, cfg.negative_fraction)});
    }
  } else {
    std::unordered_set<std::uint64_t> used;
    while (edges.size() < cfg.m) {
      auto [u, v] = distinct_pair(rng, cfg.n);
      if (!used.insert(pair_key(u, v)).second) continue;
      edges.push_back({u, v, draw_sign(rng, cfg.negative_fraction)});
    }
  }
  return build_graph(cfg.n, edges);
}

namespace {

class StructuredBuilder {
 public:
  StructuredBuilder(const GenConfig& cfg, Xorshift64Star& rng) : cfg_(cfg), rng_(rng) {}

  // One attempt with `components` positive components; false if a budget could
  // not be placed.
  bool attempt(std::size_t components, std::size_t negatives, std::vector<EdgeInput>& out) {
    out.clear();
    used_.clear();
    const std::size_t n = cfg_.n;
    const std::size_t positives = cfg_.m - negatives;

    // Random vertex order cut into `components` nonempty groups.
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    shuffle(order);
    std::vector<std::size_t> cuts(n - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    shuffle(cuts);
    cuts.resize(components - 1);
    cuts.push_back(0);
    cuts.push_back(n);
    std::sort(cuts.begin(), cuts.end());
    groups_.assign(components, {});
    comp_of_.assign(n, 0);
    for (std::size_t c = 0; c < components; ++c) {
      groups_[c].assign(order.begin() + cuts[c], order.begin() + cuts[c + 1]);
      for (VertexId v : groups_[c]) comp_of_[v] = static_cast<int>(c);
    }

    // Random spanning tree per component, then extra positive edges inside components.
    for (const auto& grp : groups_) {
      for (std::size_t k = 1; k < grp.size(); ++k) {
        if (!add(out, grp[k], grp[rng_.below(k)], Sign::positive)) return false;
      }
    }
    std::vector<std::size_t> roomy;
    for (std::size_t c = 0; c < components; ++c) {
      if (groups_[c].size() >= 2) roomy.push_back(c);
    }
    while (out.size() < positives) {
      if (roomy.empty()) return false;
      bool placed = false;
      for (int tries = 0; tries < 64 && !placed; ++tries) {
        const auto& grp = groups_[roomy[rng_.below(roomy.size())]];
        auto [a, b] = distinct_pair(rng_, grp.size());
        placed = add(out, grp[a], grp[b], Sign::positive);
      }
      if (!placed) return false;
    }

    // Bridge trees of the positive subgraph.
    const SignedGraph positive = build_graph(n, out);
    const auto forest = trivial_block_forest(positive, positive.positive_edges());
    std::vector<std::vector<VertexId>> tree_vertices(forest.tree_count);
    for (std::size_t v = 0; v < n; ++v) tree_vertices[forest.tree_of[v]].push_back(static_cast<VertexId>(v));
    std::vector<std::vector<EdgeInput>> tree_edges(forest.tree_count);
    for (EdgeId id : forest.isthmus_edge_ids) {
      const Edge& e = positive.edge(id);
      tree_edges[forest.tree_of[e.u]].push_back({e.u, e.v, Sign::positive});
    }
    std::vector<int> nontrivial_trees;
    for (std::size_t t = 0; t < forest.tree_count; ++t) {
      if (tree_vertices[t].size() >= 2) nontrivial_trees.push_back(static_cast<int>(t));
    }

    for (std::size_t k = 0; k < negatives; ++k) {
      bool placed = false;
      if (!nontrivial_trees.empty() && rng_.below(2) == 0) {
        for (int tries = 0; tries < 8 && !placed; ++tries) {
          const int t = nontrivial_trees[rng_.below(nontrivial_trees.size())];
          const auto& verts = tree_vertices[t];
          auto [a, b] = distinct_pair(rng_, verts.size());
          if (!cfg_.allow_parallel && used_.contains(pair_key(verts[a], verts[b]))) continue;
          tree_edges[t].push_back({verts[a], verts[b], Sign::negative});
          if (stays_cactus(verts, tree_edges[t])) {
            placed = add(out, verts[a], verts[b], Sign::negative);
          } else {
            tree_edges[t].pop_back();
          }
        }
      }
      for (int tries = 0; tries < 64 && !placed && components >= 2; ++tries) {
        auto [u, v] = distinct_pair(rng_, n);
        if (comp_of_[u] == comp_of_[v]) continue;
        placed = add(out, u, v, Sign::negative);
      }
      if (!placed) return false;
    }

    shuffle(out);
    for (auto& e : out) {
      if (rng_.below(2) == 1) std::swap(e.u, e.v);
    }
    return true;
  }

 private:
  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t k = xs.size(); k > 1; --k) std::swap(xs[k - 1], xs[rng_.below(k)]);
  }

  bool add(std::vector<EdgeInput>& out, std::int64_t u, std::int64_t v, Sign s) {
    if (!cfg_.allow_parallel && !used_.insert(pair_key(u, v)).second) return false;
    out.push_back({u, v, s});
    return true;
  }

  // The tree with its accepted internal negatives, reindexed locally.
  static bool stays_cactus(const std::vector<VertexId>& verts, const std::vector<EdgeInput>& edges) {
    std::vector<EdgeInput> local;
    local.reserve(edges.size());
    auto index = [&](std::int64_t x) {
      return static_cast<std::int64_t>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
    };
    for (const auto& e : edges) local.push_back({index(e.u), index(e.v), e.sign});
    return is_cactus(build_graph(verts.size(), local));
  }

  const GenConfig& cfg_;
  Xorshift64Star& rng_;
  std::unordered_set<std::uint64_t> used_;
  std::vector<std::vector<VertexId>> groups_;
  std::vector<int> comp_of_;
};

}  // namespace

SignedGraph structured_signed_graph(const GenConfig& cfg) {
  if (cfg.mode != GenMode::structured) {
    throw PreconditionViolated("structured_signed_graph needs structured mode");
  }
  check_fraction(cfg);
  check_budget(cfg);
  if (cfg.n == 0) return build_graph(0, {});

  const auto negatives = static_cast<std::size_t>(
      std::llround(static_cast<double>(cfg.m) * cfg.negative_fraction));
  const std::size_t positives = cfg.m - negatives;
  const std::size_t min_components = positives >= cfg.n ? 1 : cfg.n - positives;

  Xorshift64Star rng(cfg.seed);
  StructuredBuilder builder(cfg, rng);
  std::vector<EdgeInput> edges;
  constexpr int kAttempts = 64;
  for (int a = 0; a < kAttempts; ++a) {
    // Few components at first; later attempts spread out so more negative
    // edges can run between components.
    const std::size_t spread = cfg.n - min_components;
    const std::size_t width = a < kAttempts / 2 ? spread / 3 : spread;
    const std::size_t components = min_components + rng.below(width + 1);
    if (builder.attempt(components, negatives, edges)) return build_graph(cfg.n, edges);
  }
  throw InfeasibleBudget("could not place " + std::to_string(cfg.m) + " edges (" +
                         std::to_string(negatives) + " negative) in structured form on " +
                         std::to_string(cfg.n) + " vertices");
}

SignedGraph generate(const GenConfig& cfg) {
  return cfg.mode == GenMode::uniform ? random_signed_graph(cfg) : structured_signed_graph(cfg);
}

}  // namespace wnc
