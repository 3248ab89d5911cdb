#include "wnc/oracle.hpp"

#include <algorithm>

namespace wnc {

OracleStats stats(const SignedGraph& g, std::size_t max_q_vertices, std::size_t circle_cap) {
  if (g.vertex_count() > max_q_vertices) {
    throw TooLargeForOracle(g.vertex_count(), max_q_vertices);
  }
  const auto wn = weakly_negative_circles(g, circle_cap);
  OracleStats s;
  s.t = wn.size();
  s.w = max_edge_disjoint(g, wn);
  s.q = min_disagreement_partition(g, max_q_vertices).q;
  return s;
}

PropositionCheck proposition_check(const SignedGraph& g, std::size_t max_q_vertices,
                                   std::size_t circle_cap) {
  const OracleStats s = stats(g, max_q_vertices, circle_cap);
  const auto wn = weakly_negative_circles(g, circle_cap);
  bool overlap = false;
  for (std::size_t i = 0; i < wn.size() && !overlap; ++i) {
    for (std::size_t j = i + 1; j < wn.size() && !overlap; ++j) {
      overlap = !shared_edges(wn[i], wn[j]).empty();
    }
  }
  return {s.q == s.t, s.w == s.t, !overlap};
}

bool observation_check(const SignedGraph& g, std::size_t circle_cap) {
  const auto circles = enumerate_circles(g, circle_cap);
  std::vector<CircleClass> kind;
  std::vector<std::vector<VertexId>> verts;
  for (const Circle& c : circles) {
    kind.push_back(circle_sign_class(g, c));
    verts.push_back(circle_vertices(g, c));
    std::sort(verts.back().begin(), verts.back().end());
  }

  for (std::size_t i = 0; i < circles.size(); ++i) {
    if (kind[i] != CircleClass::weakly_negative) continue;
    bool isolated = true;
    for (std::size_t j = 0; j < circles.size() && isolated; ++j) {
      if (j != i && kind[j] == CircleClass::weakly_negative) {
        isolated = shared_edges(circles[i], circles[j]).empty();
      }
    }
    if (!isolated) continue;
    for (std::size_t j = 0; j < circles.size(); ++j) {
      if (j == i || kind[j] == CircleClass::other) continue;
      std::vector<VertexId> common;
      std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(), verts[j].end(),
                            std::back_inserter(common));
      if (common.size() > 1) return false;
    }
  }
  return true;
}

}  // namespace wnc
