#include "wnc/detect.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace wnc {

const char* to_string(FailedStep s) noexcept {
  return s == FailedStep::step4 ? "step4" : "step5";
}

PositiveStructure analyze_positive(const SignedGraph& g) {
  PositiveStructure ps;
  ps.positive_edges = g.positive_edges();
  ps.negative_edges = g.negative_edges();
  ps.components = components(g, ps.positive_edges);
  ps.forest = trivial_block_forest(g, ps.positive_edges);
  return ps;
}

namespace {

void require_edge(const SignedGraph& g, EdgeId e) {
  if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) {
    throw EdgeOutOfRange(e, g.edge_count());
  }
}

// Shortest u-v path over positive edges other than `banned`, scanning incident
// edges in id order. Returns edge ids in order from u to v.
std::optional<std::vector<EdgeId>> positive_path(const SignedGraph& g, VertexId u, VertexId v,
                                                 EdgeId banned) {
  std::vector<EdgeId> via(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue{u};
  seen[u] = 1;
  while (!queue.empty() && !seen[v]) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId id : g.incident(x)) {
      const Edge& e = g.edge(id);
      if (id == banned || !e.positive()) continue;
      const VertexId y = e.other(x);
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = id;
      queue.push_back(y);
    }
  }
  if (!seen[v]) return std::nullopt;
  std::vector<EdgeId> path;
  for (VertexId x = v; x != u; x = g.edge(via[x]).other(x)) path.push_back(via[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

Circle close_path(const SignedGraph& g, std::vector<EdgeId> path, EdgeId closing) {
  path.push_back(closing);
  return Circle::from_edges(g, std::move(path));
}

WitnessPair make_witness(Circle a, Circle b) {
  auto shared = shared_edges(a, b);
  return {std::move(a), std::move(b), std::move(shared)};
}

struct RootedTree {
  std::vector<EdgeId> parent_edge;  // -1 at the root and outside the tree
  std::vector<int> depth;
};

RootedTree root_tree(const SignedGraph& g, const PositiveStructure& ps, int tree_id,
                     const std::vector<char>& is_bridge) {
  RootedTree t{std::vector<EdgeId>(g.vertex_count(), -1), std::vector<int>(g.vertex_count(), -1)};
  VertexId root = -1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (ps.forest.tree_of[v] == tree_id) {
      root = static_cast<VertexId>(v);
      break;
    }
  }
  std::deque<VertexId> queue{root};
  t.depth[root] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId id : g.incident(x)) {
      if (!is_bridge[id]) continue;
      const VertexId y = g.edge(id).other(x);
      if (t.depth[y] != -1) continue;
      t.depth[y] = t.depth[x] + 1;
      t.parent_edge[y] = id;
      queue.push_back(y);
    }
  }
  return t;
}

std::vector<EdgeId> tree_path(const SignedGraph& g, const RootedTree& t, VertexId u, VertexId v) {
  std::vector<EdgeId> from_u;
  std::vector<EdgeId> from_v;
  while (u != v) {
    if (t.depth[u] >= t.depth[v]) {
      from_u.push_back(t.parent_edge[u]);
      u = g.edge(t.parent_edge[u]).other(u);
    } else {
      from_v.push_back(t.parent_edge[v]);
      v = g.edge(t.parent_edge[v]).other(v);
    }
  }
  from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
  return from_u;
}

std::vector<char> bridge_mask(const SignedGraph& g, const PositiveStructure& ps) {
  std::vector<char> mask(g.edge_count(), 0);
  for (EdgeId id : ps.forest.isthmus_edge_ids) mask[id] = 1;
  return mask;
}

}  // namespace

WitnessPair find_witness_step4(const SignedGraph& g, const PositiveStructure& ps, EdgeId e) {
  require_edge(g, e);
  const Edge& neg = g.edge(e);
  if (!neg.negative() || !ps.components.same(neg.u, neg.v) ||
      ps.forest.tree_of[neg.u] == ps.forest.tree_of[neg.v]) {
    throw PreconditionViolated("edge " + std::to_string(e) +
                               " is not a negative edge joining two trees of one positive component");
  }
  auto first = positive_path(g, neg.u, neg.v, -1);
  const auto mask = bridge_mask(g, ps);
  // The endpoints lie in different trees, so the path uses a non-isthmus edge;
  // that edge lies on a circle, and avoiding it still leaves a u-v route.
  const auto detour = std::find_if(first->begin(), first->end(), [&](EdgeId id) { return !mask[id]; });
  auto second = positive_path(g, neg.u, neg.v, *detour);
  return make_witness(close_path(g, std::move(*first), e), close_path(g, std::move(*second), e));
}

WitnessPair find_witness_step4(const SignedGraph& g, EdgeId e) {
  return find_witness_step4(g, analyze_positive(g), e);
}

WitnessPair find_witness_step5(const SignedGraph& g, const PositiveStructure& ps, int tree_id) {
  if (tree_id < 0 || static_cast<std::size_t>(tree_id) >= ps.forest.tree_count) {
    throw PreconditionViolated("tree id " + std::to_string(tree_id) + " out of range");
  }
  const auto& tree_of = ps.forest.tree_of;
  std::vector<EdgeId> internal;
  for (EdgeId id : ps.negative_edges) {
    const Edge& e = g.edge(id);
    if (tree_of[e.u] == tree_id && tree_of[e.v] == tree_id) internal.push_back(id);
  }
  const auto mask = bridge_mask(g, ps);
  const auto rooted = root_tree(g, ps, tree_id, mask);

  std::vector<std::vector<EdgeId>> paths;
  std::vector<std::vector<EdgeId>> sorted_paths;
  for (EdgeId id : internal) {
    paths.push_back(tree_path(g, rooted, g.edge(id).u, g.edge(id).v));
    sorted_paths.push_back(paths.back());
    std::sort(sorted_paths.back().begin(), sorted_paths.back().end());
  }
  for (std::size_t i = 0; i < internal.size(); ++i) {
    for (std::size_t j = i + 1; j < internal.size(); ++j) {
      const auto& a = sorted_paths[i];
      const auto& b = sorted_paths[j];
      std::vector<EdgeId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.empty()) continue;
      return make_witness(close_path(g, paths[i], internal[i]), close_path(g, paths[j], internal[j]));
    }
  }
  throw PreconditionViolated("tree " + std::to_string(tree_id) +
                             " with its internal negative edges is a cactus");
}

WitnessPair find_witness_step5(const SignedGraph& g, int tree_id) {
  return find_witness_step5(g, analyze_positive(g), tree_id);
}

StructureReport check_structure(const SignedGraph& g) {
  const PositiveStructure ps = analyze_positive(g);
  const auto& comp = ps.components;
  const auto& tree_of = ps.forest.tree_of;

  std::vector<EdgeId> intra;
  for (EdgeId id : ps.negative_edges) {
    const Edge& e = g.edge(id);
    if (!comp.same(e.u, e.v)) continue;
    if (tree_of[e.u] != tree_of[e.v]) {
      return StructureReport(Overlap{FailedStep::step4, find_witness_step4(g, ps, id)});
    }
    intra.push_back(id);
  }

  // Bucket vertices, isthmi and internal negatives by tree.
  const std::size_t trees = ps.forest.tree_count;
  std::vector<std::vector<VertexId>> tree_vertices(trees);
  std::vector<std::vector<EdgeId>> tree_edges(trees);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    tree_vertices[tree_of[v]].push_back(static_cast<VertexId>(v));
  }
  for (EdgeId id : ps.forest.isthmus_edge_ids) tree_edges[tree_of[g.edge(id).u]].push_back(id);
  std::vector<int> candidates;
  for (EdgeId id : intra) {
    const int t = tree_of[g.edge(id).u];
    candidates.push_back(t);
    tree_edges[t].push_back(id);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Trees are independent; the lowest failing tree id is reported whatever the schedule.
  std::vector<char> fails(candidates.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16) if (count > 64)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const int t = candidates[k];
    fails[k] = is_cactus(g, tree_vertices[t], tree_edges[t]) ? 0 : 1;
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (fails[k]) {
      return StructureReport(Overlap{FailedStep::step5, find_witness_step5(g, ps, candidates[k])});
    }
  }

  return StructureReport(Structured{Partition::from_labels(comp.component_of), std::move(intra)});
}

bool witness_is_valid(const SignedGraph& g, const WitnessPair& w) {
  try {
    if (circle_sign_class(g, w.circle_a) != CircleClass::weakly_negative) return false;
    if (circle_sign_class(g, w.circle_b) != CircleClass::weakly_negative) return false;
  } catch (const InvalidCircle&) {
    return false;
  }
  if (w.circle_a == w.circle_b) return false;
  const auto shared = shared_edges(w.circle_a, w.circle_b);
  return !shared.empty() && shared == w.shared_edge_ids;
}

}  // namespace wnc
