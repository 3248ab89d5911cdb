#include "wnc/cluster.hpp"

#include "wnc/decompose.hpp"

namespace wnc {

Partition canonical_clustering(const SignedGraph& g) {
  return Partition::from_labels(components(g, g.positive_edges()).component_of);
}

Clusterability is_clusterable(const SignedGraph& g) {
  Partition p = canonical_clustering(g);
  if (disagreements(g, p).count != 0) return {};
  return {true, std::move(p)};
}

}  // namespace wnc
