#include "wnc/core.hpp"

#include <algorithm>
#include <unordered_map>

namespace wnc {

std::optional<Sign> parse_sign(char c) noexcept {
  switch (c) {
    case '+':
      return Sign::positive;
    case '-':
      return Sign::negative;
    default:
      return std::nullopt;
  }
}

char sign_char(Sign s) noexcept { return s == Sign::positive ? '+' : '-'; }

SignedGraph build_graph(std::size_t n, std::span<const EdgeInput> edge_list) {
  const auto limit = static_cast<std::int64_t>(n);
  SignedGraph g;
  g.n_ = n;
  g.edges_.reserve(edge_list.size());
  for (const auto& in : edge_list) {
    for (auto x : {in.u, in.v}) {
      if (x < 0 || x >= limit) throw VertexOutOfRange(x, limit);
    }
    if (in.u == in.v) throw LoopEdge(in.u);
    g.edges_.push_back({static_cast<VertexId>(in.u), static_cast<VertexId>(in.v), in.sign});
  }

  // CSR incidence; filling in edge order keeps each list sorted by id.
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.incidence_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    g.incidence_[fill[e.u]++] = static_cast<EdgeId>(id);
    g.incidence_[fill[e.v]++] = static_cast<EdgeId>(id);
  }
  return g;
}

SignedGraph build_graph(std::size_t n, std::initializer_list<EdgeInput> edge_list) {
  return build_graph(n, std::span<const EdgeInput>(edge_list.begin(), edge_list.size()));
}

std::vector<EdgeId> SignedGraph::positive_edges() const {
  std::vector<EdgeId> out;
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    if (edges_[id].positive()) out.push_back(static_cast<EdgeId>(id));
  }
  return out;
}

std::vector<EdgeId> SignedGraph::negative_edges() const {
  std::vector<EdgeId> out;
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    if (edges_[id].negative()) out.push_back(static_cast<EdgeId>(id));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Circle

std::vector<EdgeId> canonical_cycle_order(std::span<const EdgeId> cyclic_edges) {
  const std::size_t len = cyclic_edges.size();
  if (len == 0) return {};
  const auto first = static_cast<std::size_t>(
      std::min_element(cyclic_edges.begin(), cyclic_edges.end()) - cyclic_edges.begin());
  const EdgeId next = cyclic_edges[(first + 1) % len];
  const EdgeId prev = cyclic_edges[(first + len - 1) % len];
  const bool forward = next <= prev;
  std::vector<EdgeId> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t idx = forward ? (first + k) % len : (first + len - k) % len;
    out.push_back(cyclic_edges[idx]);
  }
  return out;
}

Circle Circle::from_sequence(std::vector<EdgeId> cyclic_edges) {
  if (cyclic_edges.size() < 2) throw InvalidCircle("a circle needs at least two edges");
  std::vector<EdgeId> sorted = cyclic_edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidCircle("circle repeats an edge");
  }
  return Circle(canonical_cycle_order(cyclic_edges));
}

Circle Circle::from_edges(const SignedGraph& g, std::vector<EdgeId> cyclic_edges) {
  Circle c = from_sequence(std::move(cyclic_edges));
  circle_vertices(g, c);  // throws when not a closed vertex-simple walk
  return c;
}

bool Circle::contains(EdgeId e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

namespace {

std::optional<std::vector<VertexId>> walk_from(const SignedGraph& g, std::span<const EdgeId> seq,
                                               VertexId start) {
  std::vector<VertexId> visited;
  visited.reserve(seq.size());
  VertexId cur = start;
  for (EdgeId id : seq) {
    const Edge& e = g.edge(id);
    if (e.u != cur && e.v != cur) return std::nullopt;
    visited.push_back(cur);
    cur = e.other(cur);
  }
  if (cur != start) return std::nullopt;
  std::vector<VertexId> sorted = visited;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return visited;
}

}  // namespace

std::vector<VertexId> circle_vertices(const SignedGraph& g, const Circle& c) {
  const auto seq = c.edges();
  if (seq.size() < 2) throw InvalidCircle("a circle needs at least two edges");
  for (EdgeId id : seq) {
    if (id < 0 || static_cast<std::size_t>(id) >= g.edge_count()) {
      throw InvalidCircle("circle references edge id " + std::to_string(id) +
                          " not present in the graph");
    }
  }
  const Edge& first = g.edge(seq.front());
  for (VertexId start : {first.u, first.v}) {
    if (auto walk = walk_from(g, seq, start)) return *walk;
  }
  throw InvalidCircle("edges do not form a vertex-simple closed walk");
}

CircleClass circle_sign_class(const SignedGraph& g, const Circle& c) {
  circle_vertices(g, c);
  const auto negatives = std::count_if(c.edges().begin(), c.edges().end(),
                                       [&](EdgeId id) { return g.edge(id).negative(); });
  if (negatives == 0) return CircleClass::all_positive;
  if (negatives == 1) return CircleClass::weakly_negative;
  return CircleClass::other;
}

std::vector<EdgeId> shared_edges(const Circle& a, const Circle& b) {
  std::vector<EdgeId> x(a.edges().begin(), a.edges().end());
  std::vector<EdgeId> y(b.edges().begin(), b.edges().end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<EdgeId> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Partition

Partition Partition::from_labels(std::span<const int> labels) {
  Partition p;
  p.cluster_of_.resize(labels.size());
  std::unordered_map<int, int> renumber;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = renumber.try_emplace(labels[v], static_cast<int>(renumber.size()));
    p.cluster_of_[v] = it->second;
  }
  p.cluster_count_ = renumber.size();
  return p;
}

Partition Partition::discrete(std::size_t n) {
  std::vector<int> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<int>(v);
  return from_labels(labels);
}

Partition Partition::single(std::size_t n) {
  std::vector<int> labels(n, 0);
  return from_labels(labels);
}

std::vector<std::vector<VertexId>> Partition::clusters() const {
  std::vector<std::vector<VertexId>> out(cluster_count_);
  for (std::size_t v = 0; v < cluster_of_.size(); ++v) {
    out[cluster_of_[v]].push_back(static_cast<VertexId>(v));
  }
  return out;
}

Disagreements disagreements(const SignedGraph& g, const Partition& p) {
  if (p.vertex_count() != g.vertex_count()) {
    throw PartitionMismatch(p.vertex_count(), g.vertex_count());
  }
  Disagreements d;
  const auto edges = g.edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const bool same = p.cluster_of(edges[id].u) == p.cluster_of(edges[id].v);
    if (same == edges[id].negative()) d.edge_ids.push_back(static_cast<EdgeId>(id));
  }
  d.count = d.edge_ids.size();
  return d;
}

}  // namespace wnc
