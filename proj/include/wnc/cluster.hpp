#pragma once

#include <optional>

#include "wnc/core.hpp"

namespace wnc {

struct Clusterability {
  bool clusterable = false;
  std::optional<Partition> clustering;  // present iff clusterable
};

/// Clusterable iff the components of the positive subgraph
/// leave no negative edge inside a cluster.
Clusterability is_clusterable(const SignedGraph& g);

/// Partition by components of the positive subgraph. Optimal whenever
/// check_structure reports a structured graph; an upper bound on Q otherwise.
Partition canonical_clustering(const SignedGraph& g);

}  // namespace wnc
