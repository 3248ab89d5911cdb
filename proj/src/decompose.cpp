#include "wnc/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace wnc {
namespace {

struct Arc {
  int to;
  EdgeId edge;
};

// Subgraph reindexed to local vertex ids 0..k-1 (ascending global id order).
struct LocalGraph {
  std::vector<VertexId> global;
  std::vector<std::size_t> offsets;
  std::vector<Arc> arcs;
  std::vector<EdgeId> edges;

  std::size_t size() const { return global.size(); }
  std::span<const Arc> adj(int v) const {
    return {arcs.data() + offsets[v], arcs.data() + offsets[v + 1]};
  }
};

void check_edges(const SignedGraph& g, std::span<const EdgeId> edges) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 0 || static_cast<std::size_t>(sorted[k]) >= g.edge_count()) {
      throw EdgeOutOfRange(sorted[k], g.edge_count());
    }
    if (k > 0 && sorted[k] == sorted[k - 1]) {
      throw PreconditionViolated("edge id " + std::to_string(sorted[k]) +
                                 " listed twice in an edge subset");
    }
  }
}

LocalGraph make_local(const SignedGraph& g, std::span<const VertexId> vertices_or_all,
                      bool all_vertices, std::span<const EdgeId> edges) {
  check_edges(g, edges);
  LocalGraph lg;
  lg.edges.assign(edges.begin(), edges.end());
  std::sort(lg.edges.begin(), lg.edges.end());

  std::vector<int> local_u(lg.edges.size());
  std::vector<int> local_v(lg.edges.size());
  if (all_vertices) {
    lg.global.resize(g.vertex_count());
    std::iota(lg.global.begin(), lg.global.end(), 0);
    for (std::size_t k = 0; k < lg.edges.size(); ++k) {
      local_u[k] = g.edge(lg.edges[k]).u;
      local_v[k] = g.edge(lg.edges[k]).v;
    }
  } else {
    lg.global.assign(vertices_or_all.begin(), vertices_or_all.end());
    std::sort(lg.global.begin(), lg.global.end());
    lg.global.erase(std::unique(lg.global.begin(), lg.global.end()), lg.global.end());
    auto local_of = [&](VertexId x) {
      auto it = std::lower_bound(lg.global.begin(), lg.global.end(), x);
      if (it == lg.global.end() || *it != x) {
        throw PreconditionViolated("edge endpoint " + std::to_string(x) +
                                   " is outside the given vertex set");
      }
      return static_cast<int>(it - lg.global.begin());
    };
    for (std::size_t k = 0; k < lg.edges.size(); ++k) {
      local_u[k] = local_of(g.edge(lg.edges[k]).u);
      local_v[k] = local_of(g.edge(lg.edges[k]).v);
    }
  }

  const std::size_t n = lg.global.size();
  lg.offsets.assign(n + 1, 0);
  for (std::size_t k = 0; k < lg.edges.size(); ++k) {
    ++lg.offsets[local_u[k] + 1];
    ++lg.offsets[local_v[k] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) lg.offsets[v + 1] += lg.offsets[v];
  lg.arcs.resize(2 * lg.edges.size());
  std::vector<std::size_t> fill(lg.offsets.begin(), lg.offsets.end() - 1);
  for (std::size_t k = 0; k < lg.edges.size(); ++k) {
    lg.arcs[fill[local_u[k]]++] = {local_v[k], lg.edges[k]};
    lg.arcs[fill[local_v[k]]++] = {local_u[k], lg.edges[k]};
  }
  return lg;
}

LocalGraph make_local(const SignedGraph& g, std::span<const EdgeId> edges) {
  return make_local(g, {}, true, edges);
}

std::vector<EdgeId> all_edges(const SignedGraph& g) {
  std::vector<EdgeId> ids(g.edge_count());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

std::vector<int> label_components(const LocalGraph& lg, std::size_t& count) {
  std::vector<int> label(lg.size(), -1);
  std::vector<int> stack;
  int next = 0;
  for (std::size_t s = 0; s < lg.size(); ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(static_cast<int>(s));
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const Arc& a : lg.adj(v)) {
        if (label[a.to] == -1) {
          label[a.to] = next;
          stack.push_back(a.to);
        }
      }
    }
    ++next;
  }
  count = static_cast<std::size_t>(next);
  return label;
}

struct LowpointResult {
  std::vector<EdgeId> bridges;
  std::vector<std::vector<EdgeId>> blocks;
};

// Iterative Hopcroft-Tarjan over edge ids. Skipping only the tree edge's own
// id (not every edge to the parent) keeps parallel edges out of the bridge set.
LowpointResult lowpoint_search(const LocalGraph& lg, bool want_blocks) {
  const std::size_t n = lg.size();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  LowpointResult out;
  std::vector<EdgeId> edge_stack;

  struct Frame {
    int v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> frames;
  int clock = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = clock++;
    frames.push_back({static_cast<int>(root), -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto adj = lg.adj(f.v);
      if (f.next < adj.size()) {
        const Arc a = adj[f.next++];
        if (a.edge == f.via) continue;
        if (disc[a.to] == -1) {
          if (want_blocks) edge_stack.push_back(a.edge);
          disc[a.to] = low[a.to] = clock++;
          frames.push_back({a.to, a.edge, 0});
        } else if (disc[a.to] < disc[f.v]) {
          if (want_blocks) edge_stack.push_back(a.edge);
          low[f.v] = std::min(low[f.v], disc[a.to]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      const int parent = frames.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] > disc[parent]) out.bridges.push_back(done.via);
      if (want_blocks && low[done.v] >= disc[parent]) {
        std::vector<EdgeId> block;
        while (true) {
          const EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.via) break;
        }
        out.blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

BlockKind classify_block(const SignedGraph& g, const std::vector<EdgeId>& block) {
  if (block.size() == 1) return BlockKind::isthmus;
  std::vector<VertexId> verts;
  verts.reserve(2 * block.size());
  for (EdgeId e : block) {
    verts.push_back(g.edge(e).u);
    verts.push_back(g.edge(e).v);
  }
  std::sort(verts.begin(), verts.end());
  const auto distinct = static_cast<std::size_t>(std::unique(verts.begin(), verts.end()) - verts.begin());
  // A 2-connected block (or multi-edge) with as many edges as vertices is a single circle.
  return distinct == block.size() ? BlockKind::circle : BlockKind::other;
}

BlockDecomposition decompose_blocks(const SignedGraph& g, const LocalGraph& lg) {
  auto raw = lowpoint_search(lg, true);
  BlockDecomposition out;
  out.blocks.reserve(raw.blocks.size());
  for (auto& edges : raw.blocks) {
    std::sort(edges.begin(), edges.end());
    const BlockKind kind = classify_block(g, edges);
    out.blocks.push_back({std::move(edges), kind});
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.edge_ids.front() < b.edge_ids.front(); });
  return out;
}

bool cactus_on(const SignedGraph& g, const LocalGraph& lg) {
  std::size_t count = 0;
  label_components(lg, count);
  if (count != 1) return false;
  const auto blocks = decompose_blocks(g, lg);
  return std::all_of(blocks.blocks.begin(), blocks.blocks.end(),
                     [](const Block& b) { return b.kind != BlockKind::other; });
}

}  // namespace

ComponentLabeling components(const SignedGraph& g, std::span<const EdgeId> edges) {
  const auto lg = make_local(g, edges);
  ComponentLabeling out;
  out.component_of = label_components(lg, out.component_count);
  return out;
}

ComponentLabeling components(const SignedGraph& g) { return components(g, all_edges(g)); }

std::vector<EdgeId> bridges(const SignedGraph& g, std::span<const EdgeId> edges) {
  return lowpoint_search(make_local(g, edges), false).bridges;
}

std::vector<EdgeId> bridges(const SignedGraph& g) { return bridges(g, all_edges(g)); }

TrivialBlockForest trivial_block_forest(const SignedGraph& g, std::span<const EdgeId> edges) {
  TrivialBlockForest f;
  f.isthmus_edge_ids = bridges(g, edges);
  const auto trees = components(g, f.isthmus_edge_ids);
  f.tree_of = trees.component_of;
  f.tree_count = trees.component_count;
  return f;
}

BlockDecomposition block_decomposition(const SignedGraph& g, std::span<const EdgeId> edges) {
  return decompose_blocks(g, make_local(g, edges));
}

BlockDecomposition block_decomposition(const SignedGraph& g) {
  return block_decomposition(g, all_edges(g));
}

bool is_cactus(const SignedGraph& g, std::span<const EdgeId> edges) {
  return cactus_on(g, make_local(g, edges));
}

bool is_cactus(const SignedGraph& g) { return is_cactus(g, all_edges(g)); }

bool is_cactus(const SignedGraph& g, std::span<const VertexId> vertices,
               std::span<const EdgeId> edges) {
  for (VertexId v : vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
      throw VertexOutOfRange(v, static_cast<std::int64_t>(g.vertex_count()));
    }
  }
  return cactus_on(g, make_local(g, vertices, false, edges));
}

}  // namespace wnc
