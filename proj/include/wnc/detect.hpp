#pragma once

#include <variant>
#include <vector>

#include "wnc/core.hpp"
#include "wnc/decompose.hpp"

namespace wnc {

/// Two weakly negative circles with at least one common edge.
struct WitnessPair {
  Circle circle_a;
  Circle circle_b;
  std::vector<EdgeId> shared_edge_ids;  // sorted

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

enum class FailedStep { step4, step5 };

const char* to_string(FailedStep s) noexcept;

struct Structured {
  Partition canonical_clustering;
  std::vector<EdgeId> intra_component_negative_edge_ids;  // sorted

  friend bool operator==(const Structured&, const Structured&) = default;
};

struct Overlap {
  FailedStep failed_step;
  WitnessPair witness;

  friend bool operator==(const Overlap&, const Overlap&) = default;
};

/// Outcome of the recognition test: either the optimal clustering data or a witness.
class StructureReport {
 public:
  explicit StructureReport(Structured s) : body_(std::move(s)) {}
  explicit StructureReport(Overlap o) : body_(std::move(o)) {}

  /// True iff all weakly negative circles are pairwise edge-disjoint.
  bool verdict() const noexcept { return std::holds_alternative<Structured>(body_); }
  const Structured& structured() const { return std::get<Structured>(body_); }
  const Overlap& overlap() const { return std::get<Overlap>(body_); }

  friend bool operator==(const StructureReport&, const StructureReport&) = default;

 private:
  std::variant<Structured, Overlap> body_;
};

/// Sign split, positive components and the trivial-block forest of the
/// positive subgraph. Shared by the recognizer and the witness builders.
struct PositiveStructure {
  std::vector<EdgeId> positive_edges;
  std::vector<EdgeId> negative_edges;
  ComponentLabeling components;
  TrivialBlockForest forest;
};

PositiveStructure analyze_positive(const SignedGraph& g);

StructureReport check_structure(const SignedGraph& g);

/// Checks a report's witness without enumerating circles: both circles valid
/// and weakly negative, distinct, and `shared_edge_ids` equal to their nonempty
/// intersection.
bool witness_is_valid(const SignedGraph& g, const WitnessPair& w);

/// `e` is negative, its endpoints lie in one positive component but in
/// different trees of the forest. Throws PreconditionViolated otherwise.
WitnessPair find_witness_step4(const SignedGraph& g, EdgeId e);
WitnessPair find_witness_step4(const SignedGraph& g, const PositiveStructure& ps, EdgeId e);

/// Tree `tree_id` of the forest together with its internal negative edges is
/// not a cactus. Returns the lexicographically first pair of internal negative
/// edges whose tree paths share an edge. Throws PreconditionViolated otherwise.
WitnessPair find_witness_step5(const SignedGraph& g, int tree_id);
WitnessPair find_witness_step5(const SignedGraph& g, const PositiveStructure& ps, int tree_id);

}  // namespace wnc
