#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wnc/core.hpp"

namespace wnc {

inline constexpr std::size_t kDefaultCircleCap = 1'000'000;
inline constexpr std::size_t kDefaultMaxQVertices = 10;

/// Exact (t, w, Q) for a small graph.
struct OracleStats {
  std::size_t t = 0;  // weakly negative circles
  std::size_t w = 0;  // max pairwise edge-disjoint weakly negative circles
  std::size_t q = 0;  // min disagreements over all partitions

  friend bool operator==(const OracleStats&, const OracleStats&) = default;
};

/// Every vertex-simple circle, digons included, canonical and sorted.
/// Throws CapExceeded once more than `cap` circles have been found.
std::vector<Circle> enumerate_circles(const SignedGraph& g, std::size_t cap = kDefaultCircleCap);

std::vector<Circle> weakly_negative_circles(const SignedGraph& g,
                                            std::size_t cap = kDefaultCircleCap);

/// Largest number of pairwise edge-disjoint circles among `weakly_negative`,
/// by branch and bound over their negative edges (each circle has exactly one).
std::size_t max_edge_disjoint(const SignedGraph& g, std::span<const Circle> weakly_negative);

struct PartitionSearchResult {
  std::size_t q = 0;
  Partition best;  // lexicographically first optimal restricted-growth string
};

/// Exhaustive minimum-disagreement search over set partitions (restricted
/// growth strings). Throws TooLargeForOracle when n > max_vertices.
PartitionSearchResult min_disagreement_partition_serial(
    const SignedGraph& g, std::size_t max_vertices = kDefaultMaxQVertices);

/// OpenMP version of the same search. Returns exactly what the serial search
/// returns, optimal partition included, for any thread count.
PartitionSearchResult min_disagreement_partition(const SignedGraph& g,
                                                 std::size_t max_vertices = kDefaultMaxQVertices);

OracleStats stats(const SignedGraph& g, std::size_t max_q_vertices = kDefaultMaxQVertices,
                  std::size_t circle_cap = kDefaultCircleCap);

struct PropositionCheck {
  bool q_eq_t = false;
  bool w_eq_t = false;
  bool no_overlap = false;

  bool consistent() const noexcept { return q_eq_t == w_eq_t && w_eq_t == no_overlap; }
};

/// Evaluates the three equivalent conditions independently; no_overlap is
/// decided by pairwise intersection of weakly negative circles.
PropositionCheck proposition_check(const SignedGraph& g,
                                   std::size_t max_q_vertices = kDefaultMaxQVertices,
                                   std::size_t circle_cap = kDefaultCircleCap);

/// For every weakly negative circle edge-disjoint from all others, checks that
/// it meets each all-positive circle and each other weakly negative circle in
/// at most one vertex.
bool observation_check(const SignedGraph& g, std::size_t circle_cap = kDefaultCircleCap);

}  // namespace wnc
