#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wnc/errors.hpp"

namespace wnc {

using VertexId = int;
using EdgeId = int;

enum class Sign : std::uint8_t { positive, negative };

/// Accepts exactly '+' and '-'.
std::optional<Sign> parse_sign(char c) noexcept;
char sign_char(Sign s) noexcept;

struct Edge {
  VertexId u;
  VertexId v;
  Sign sign;

  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  bool positive() const noexcept { return sign == Sign::positive; }
  bool negative() const noexcept { return sign == Sign::negative; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unvalidated edge as supplied by callers; endpoints may be out of range.
struct EdgeInput {
  std::int64_t u;
  std::int64_t v;
  Sign sign;
};

/// Immutable signed multigraph on vertices 0..n-1. Edge ids are list indices.
class SignedGraph {
 public:
  SignedGraph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incident edge ids of v in increasing id order.
  std::span<const EdgeId> incident(VertexId v) const noexcept {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }

  std::vector<EdgeId> positive_edges() const;
  std::vector<EdgeId> negative_edges() const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend SignedGraph build_graph(std::size_t n, std::span<const EdgeInput> edge_list);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incidence_;
};

/// Validates and builds a graph. Throws LoopEdge or VertexOutOfRange.
SignedGraph build_graph(std::size_t n, std::span<const EdgeInput> edge_list);
SignedGraph build_graph(std::size_t n, std::initializer_list<EdgeInput> edge_list);

/// A vertex-simple closed walk stored as a canonical cyclic edge-id sequence:
/// the smallest id first, followed by the smaller of its two cyclic neighbours.
class Circle {
 public:
  /// Canonicalizes without consulting a graph. Requires length >= 2 and
  /// distinct ids; throws InvalidCircle otherwise.
  static Circle from_sequence(std::vector<EdgeId> cyclic_edges);

  /// Canonicalizes and checks that the edges form a vertex-simple closed walk of g.
  static Circle from_edges(const SignedGraph& g, std::vector<EdgeId> cyclic_edges);

  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool contains(EdgeId e) const;

  friend bool operator==(const Circle&, const Circle&) = default;
  friend auto operator<=>(const Circle&, const Circle&) = default;

 private:
  explicit Circle(std::vector<EdgeId> edges) : edges_(std::move(edges)) {}
  std::vector<EdgeId> edges_;
};

/// Returns the canonical rotation/reflection of a cyclic sequence.
std::vector<EdgeId> canonical_cycle_order(std::span<const EdgeId> cyclic_edges);

/// Vertices of c in traversal order starting at the shared endpoint of its
/// last and first edges. Throws InvalidCircle if c is not a circle of g.
std::vector<VertexId> circle_vertices(const SignedGraph& g, const Circle& c);

enum class CircleClass { all_positive, weakly_negative, other };

CircleClass circle_sign_class(const SignedGraph& g, const Circle& c);

/// Sorted edge ids shared by two circles.
std::vector<EdgeId> shared_edges(const Circle& a, const Circle& b);

/// Set partition of 0..n-1 with dense cluster ids numbered by smallest member.
class Partition {
 public:
  Partition() = default;

  /// Any labelling works; labels are renumbered canonically.
  static Partition from_labels(std::span<const int> labels);
  static Partition discrete(std::size_t n);
  static Partition single(std::size_t n);

  std::size_t vertex_count() const noexcept { return cluster_of_.size(); }
  std::size_t cluster_count() const noexcept { return cluster_count_; }
  int cluster_of(VertexId v) const { return cluster_of_.at(static_cast<std::size_t>(v)); }
  std::span<const int> labels() const noexcept { return cluster_of_; }

  /// Members of each cluster in increasing vertex order, indexed by cluster id.
  std::vector<std::vector<VertexId>> clusters() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> cluster_of_;
  std::size_t cluster_count_ = 0;
};

struct Disagreements {
  std::size_t count = 0;
  std::vector<EdgeId> edge_ids;
};

/// Positive edges across clusters and negative edges inside a cluster.
Disagreements disagreements(const SignedGraph& g, const Partition& p);

}  // namespace wnc
