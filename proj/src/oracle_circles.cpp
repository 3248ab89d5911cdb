#include <algorithm>
#include <cstdint>

#include "wnc/oracle.hpp"

namespace wnc {
namespace {

class CircleSearch {
 public:
  CircleSearch(const SignedGraph& g, std::size_t cap)
      : g_(g), cap_(cap), on_path_(g.vertex_count(), 0) {}

  std::vector<Circle> run() {
    for (std::size_t s = 0; s < g_.vertex_count(); ++s) {
      start_ = static_cast<VertexId>(s);
      on_path_[s] = 1;
      extend(start_, -1);
      on_path_[s] = 0;
    }
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Each circle is rooted at its smallest vertex and found once per direction;
  // keeping only the direction whose first edge id is below its closing edge id
  // reports it exactly once.
  void extend(VertexId x, EdgeId arrived_by) {
    for (EdgeId id : g_.incident(x)) {
      if (id == arrived_by) continue;
      const VertexId y = g_.edge(id).other(x);
      if (y == start_) {
        if (!path_.empty() && path_.front() < id) emit(id);
      } else if (y > start_ && !on_path_[y]) {
        on_path_[y] = 1;
        path_.push_back(id);
        extend(y, id);
        path_.pop_back();
        on_path_[y] = 0;
      }
    }
  }

  void emit(EdgeId closing) {
    if (found_.size() >= cap_) throw CapExceeded(cap_);
    std::vector<EdgeId> seq = path_;
    seq.push_back(closing);
    found_.push_back(Circle::from_sequence(std::move(seq)));
  }

  const SignedGraph& g_;
  std::size_t cap_;
  VertexId start_ = 0;
  std::vector<char> on_path_;
  std::vector<EdgeId> path_;
  std::vector<Circle> found_;
};

using Bits = std::vector<std::uint64_t>;

Bits edge_bits(const Circle& c, std::size_t words) {
  Bits b(words, 0);
  for (EdgeId e : c.edges()) b[e / 64] |= std::uint64_t{1} << (e % 64);
  return b;
}

bool disjoint(const Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] & b[k]) return false;
  }
  return true;
}

class DisjointPacking {
 public:
  DisjointPacking(std::vector<std::vector<Bits>> groups, std::size_t words)
      : groups_(std::move(groups)), used_(words, 0) {}

  std::size_t solve() {
    search(0, 0);
    return best_;
  }

 private:
  // At most one circle per negative edge; the bound counts remaining groups.
  void search(std::size_t k, std::size_t taken) {
    if (taken + (groups_.size() - k) <= best_) return;
    if (k == groups_.size()) {
      best_ = taken;
      return;
    }
    for (const Bits& c : groups_[k]) {
      if (!disjoint(c, used_)) continue;
      for (std::size_t w = 0; w < c.size(); ++w) used_[w] |= c[w];
      search(k + 1, taken + 1);
      for (std::size_t w = 0; w < c.size(); ++w) used_[w] &= ~c[w];
    }
    search(k + 1, taken);
  }

  std::vector<std::vector<Bits>> groups_;
  Bits used_;
  std::size_t best_ = 0;
};

}  // namespace

std::vector<Circle> enumerate_circles(const SignedGraph& g, std::size_t cap) {
  return CircleSearch(g, cap).run();
}

std::vector<Circle> weakly_negative_circles(const SignedGraph& g, std::size_t cap) {
  auto all = enumerate_circles(g, cap);
  std::erase_if(all, [&](const Circle& c) {
    return circle_sign_class(g, c) != CircleClass::weakly_negative;
  });
  return all;
}

std::size_t max_edge_disjoint(const SignedGraph& g, std::span<const Circle> weakly_negative) {
  const std::size_t words = g.edge_count() / 64 + 1;
  // Group by the single negative edge, shorter circles first inside a group.
  std::vector<std::pair<EdgeId, const Circle*>> keyed;
  for (const Circle& c : weakly_negative) {
    const auto neg = std::find_if(c.edges().begin(), c.edges().end(),
                                  [&](EdgeId e) { return g.edge(e).negative(); });
    keyed.emplace_back(*neg, &c);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second->size() < b.second->size();
  });
  std::vector<std::vector<Bits>> groups;
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    if (k == 0 || keyed[k].first != keyed[k - 1].first) groups.emplace_back();
    groups.back().push_back(edge_bits(*keyed[k].second, words));
  }
  // Negative edges with fewer options first tighten the search early.
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return DisjointPacking(std::move(groups), words).solve();
}

}  // namespace wnc
