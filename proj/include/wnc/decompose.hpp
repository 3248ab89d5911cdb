#pragma once

#include <span>
#include <vector>

#include "wnc/core.hpp"

namespace wnc {

/// Connected-component labels, dense and numbered by smallest member.
struct ComponentLabeling {
  std::vector<int> component_of;
  std::size_t component_count = 0;

  bool same(VertexId a, VertexId b) const { return component_of[a] == component_of[b]; }
};

/// The forest formed by the trivial blocks (isthmi and isolated vertices) of a subgraph.
struct TrivialBlockForest {
  std::vector<EdgeId> isthmus_edge_ids;  // sorted
  std::vector<int> tree_of;
  std::size_t tree_count = 0;
};

enum class BlockKind { isthmus, circle, other };

struct Block {
  std::vector<EdgeId> edge_ids;  // sorted
  BlockKind kind;
};

/// Blocks ordered by their smallest edge id.
struct BlockDecomposition {
  std::vector<Block> blocks;
};

// Every operation below acts on the spanning subgraph (all vertices of g,
// only the listed edges). Edge ids are range-checked and must be distinct.

ComponentLabeling components(const SignedGraph& g, std::span<const EdgeId> edges);
ComponentLabeling components(const SignedGraph& g);

/// Edges whose removal increases the component count. Parallel edges are never bridges.
std::vector<EdgeId> bridges(const SignedGraph& g, std::span<const EdgeId> edges);
std::vector<EdgeId> bridges(const SignedGraph& g);

TrivialBlockForest trivial_block_forest(const SignedGraph& g, std::span<const EdgeId> edges);

BlockDecomposition block_decomposition(const SignedGraph& g, std::span<const EdgeId> edges);
BlockDecomposition block_decomposition(const SignedGraph& g);

/// Connected and every block an isthmus or a circle.
bool is_cactus(const SignedGraph& g, std::span<const EdgeId> edges);
bool is_cactus(const SignedGraph& g);

/// Same test on the subgraph with vertex set `vertices`; every listed edge
/// must have both endpoints in `vertices`. Runs in time linear in the subgraph.
bool is_cactus(const SignedGraph& g, std::span<const VertexId> vertices,
               std::span<const EdgeId> edges);

}  // namespace wnc
