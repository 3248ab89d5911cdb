#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "wnc/detect.hpp"

namespace wnc {
namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

std::vector<EdgeId> ids(const Circle& c) { return {c.edges().begin(), c.edges().end()}; }

TEST(CheckStructure, K4ExampleOverlaps) {
  const auto g = build_graph(4, {{0, 1, N}, {0, 2, P}, {0, 3, P}, {1, 2, P}, {1, 3, P}, {2, 3, N}});
  const auto r = check_structure(g);
  ASSERT_FALSE(r.verdict());
  EXPECT_EQ(r.overlap().failed_step, FailedStep::step4);
  const auto& w = r.overlap().witness;
  EXPECT_TRUE(witness_is_valid(g, w));
  EXPECT_EQ(ids(w.circle_a), (std::vector<EdgeId>{0, 1, 3}));
  EXPECT_EQ(ids(w.circle_b), (std::vector<EdgeId>{0, 2, 4}));
  EXPECT_EQ(w.shared_edge_ids, (std::vector<EdgeId>{0}));
  EXPECT_EQ(w.circle_a.size(), 3u);
  EXPECT_EQ(w.circle_b.size(), 3u);
}

TEST(CheckStructure, AllPositiveGraph) {
  const auto g = build_graph(6, {{0, 1, P}, {1, 2, P}, {2, 0, P}, {3, 4, P}, {0, 1, P}});
  const auto r = check_structure(g);
  ASSERT_TRUE(r.verdict());
  EXPECT_EQ(r.structured().canonical_clustering.clusters(),
            (std::vector<std::vector<VertexId>>{{0, 1, 2}, {3, 4}, {5}}));
  EXPECT_TRUE(r.structured().intra_component_negative_edge_ids.empty());
}

TEST(CheckStructure, CactusTriangleWithCrossNegative) {
  const auto g = build_graph(4, {{0, 1, P}, {1, 2, P}, {0, 2, N}, {1, 3, N}});
  const auto r = check_structure(g);
  ASSERT_TRUE(r.verdict());
  EXPECT_EQ(r.structured().canonical_clustering.clusters(),
            (std::vector<std::vector<VertexId>>{{0, 1, 2}, {3}}));
  EXPECT_EQ(r.structured().intra_component_negative_edge_ids, (std::vector<EdgeId>{2}));
  EXPECT_EQ(testing::brute_force_q(g), 1u);
}

TEST(CheckStructure, EmptyAndEdgelessGraphs) {
  EXPECT_TRUE(check_structure(build_graph(0, {})).verdict());
  const auto r = check_structure(build_graph(3, {{0, 1, N}, {1, 2, N}, {0, 2, N}}));
  ASSERT_TRUE(r.verdict());
  EXPECT_EQ(r.structured().canonical_clustering.cluster_count(), 3u);
}

TEST(FindWitnessStep4, PositiveDigonAndNegativeEdge) {
  const auto g = build_graph(2, {{0, 1, P}, {0, 1, P}, {0, 1, N}});
  const auto w = find_witness_step4(g, 2);
  EXPECT_EQ(ids(w.circle_a), (std::vector<EdgeId>{0, 2}));
  EXPECT_EQ(ids(w.circle_b), (std::vector<EdgeId>{1, 2}));
  EXPECT_EQ(w.shared_edge_ids, (std::vector<EdgeId>{2}));
  EXPECT_TRUE(witness_is_valid(g, w));
}

TEST(FindWitnessStep4, FourCycleWithNegativeChord) {
  const auto g = build_graph(4, {{0, 1, P}, {1, 2, P}, {2, 3, P}, {3, 0, P}, {0, 2, N}});
  const auto w = find_witness_step4(g, 4);
  EXPECT_EQ(ids(w.circle_a), (std::vector<EdgeId>{0, 1, 4}));
  EXPECT_EQ(ids(w.circle_b), (std::vector<EdgeId>{2, 3, 4}));
  EXPECT_EQ(w.shared_edge_ids, (std::vector<EdgeId>{4}));
  // Both are weakly negative circles found by the subset enumerator.
  const auto circles = testing::subset_circles(g);
  for (const Circle* c : {&w.circle_a, &w.circle_b}) {
    auto sorted = ids(*c);
    std::sort(sorted.begin(), sorted.end());
    EXPECT_NE(std::find(circles.begin(), circles.end(), sorted), circles.end());
    EXPECT_EQ(testing::negatives_in(g, sorted), 1u);
  }
}

TEST(FindWitnessStep4, ThetaWithNegativeEdge) {
  const auto g = build_graph(
      5, {{0, 1, P}, {1, 3, P}, {0, 2, P}, {2, 3, P}, {0, 4, P}, {4, 3, P}, {0, 3, N}});
  const auto w = find_witness_step4(g, 6);
  EXPECT_TRUE(witness_is_valid(g, w));
  EXPECT_NE(std::find(w.shared_edge_ids.begin(), w.shared_edge_ids.end(), 6), w.shared_edge_ids.end());
  const auto r = check_structure(g);
  ASSERT_FALSE(r.verdict());
  EXPECT_EQ(r.overlap().failed_step, FailedStep::step4);
  EXPECT_EQ(r.overlap().witness, w);
}

TEST(FindWitnessStep4, PreconditionViolated) {
  const auto g = build_graph(4, {{0, 1, P}, {1, 2, P}, {0, 2, N}, {1, 3, N}, {0, 1, N}});
  EXPECT_THROW(find_witness_step4(g, 0), PreconditionViolated);  // positive
  EXPECT_THROW(find_witness_step4(g, 2), PreconditionViolated);  // same tree
  EXPECT_THROW(find_witness_step4(g, 3), PreconditionViolated);  // across components
  EXPECT_THROW(find_witness_step4(g, 9), EdgeOutOfRange);
}

TEST(FindWitnessStep5, PathWithTwoNegativeChords) {
  const auto g = build_graph(4, {{0, 1, P}, {1, 2, P}, {2, 3, P}, {0, 2, N}, {1, 3, N}});
  const auto w = find_witness_step5(g, 0);
  EXPECT_EQ(ids(w.circle_a), (std::vector<EdgeId>{0, 1, 3}));
  EXPECT_EQ(ids(w.circle_b), (std::vector<EdgeId>{1, 2, 4}));
  EXPECT_EQ(w.shared_edge_ids, (std::vector<EdgeId>{1}));
  const auto r = check_structure(g);
  ASSERT_FALSE(r.verdict());
  EXPECT_EQ(r.overlap().failed_step, FailedStep::step5);
  EXPECT_EQ(r.overlap().witness, w);
}

TEST(FindWitnessStep5, StarWithTwoNegatives) {
  const auto g = build_graph(4, {{0, 1, P}, {0, 2, P}, {0, 3, P}, {1, 2, N}, {1, 3, N}});
  const auto w = find_witness_step5(g, 0);
  EXPECT_EQ(w.shared_edge_ids, (std::vector<EdgeId>{0}));
  EXPECT_EQ(ids(w.circle_a), (std::vector<EdgeId>{0, 1, 3}));
  EXPECT_EQ(ids(w.circle_b), (std::vector<EdgeId>{0, 2, 4}));
}

TEST(FindWitnessStep5, ParallelNegativesOverPositiveEdge) {
  const auto g = build_graph(2, {{0, 1, P}, {0, 1, N}, {0, 1, N}});
  const auto w = find_witness_step5(g, 0);
  EXPECT_EQ(ids(w.circle_a), (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(ids(w.circle_b), (std::vector<EdgeId>{0, 2}));
  EXPECT_EQ(w.shared_edge_ids, (std::vector<EdgeId>{0}));
  EXPECT_TRUE(witness_is_valid(g, w));
}

TEST(FindWitnessStep5, PreconditionViolated) {
  const auto g = build_graph(4, {{0, 1, P}, {1, 2, P}, {0, 2, N}, {2, 3, P}});
  EXPECT_THROW(find_witness_step5(g, 0), PreconditionViolated);
  EXPECT_THROW(find_witness_step5(g, 7), PreconditionViolated);
}

TEST(WitnessIsValid, RejectsBadWitnesses) {
  const auto g = build_graph(4, {{0, 1, P}, {1, 2, P}, {2, 3, P}, {0, 2, N}, {1, 3, N}, {0, 3, P}});
  const auto report = check_structure(g);
  ASSERT_FALSE(report.verdict());
  const auto good = report.overlap().witness;
  ASSERT_TRUE(witness_is_valid(g, good));
  auto same = good;
  same.circle_b = same.circle_a;
  same.shared_edge_ids = ids(same.circle_a);
  std::sort(same.shared_edge_ids.begin(), same.shared_edge_ids.end());
  EXPECT_FALSE(witness_is_valid(g, same));

  auto wrong_shared = good;
  wrong_shared.shared_edge_ids.push_back(99);
  EXPECT_FALSE(witness_is_valid(g, wrong_shared));

  auto not_wn = good;
  not_wn.circle_b = Circle::from_edges(g, {0, 1, 2, 5});  // all positive 4-cycle
  not_wn.shared_edge_ids = shared_edges(not_wn.circle_a, not_wn.circle_b);
  EXPECT_FALSE(witness_is_valid(g, not_wn));
}

// Both directions of the characterization against circle enumeration, plus
// the exact values on the structured side.
TEST(CheckStructure, AgreesWithOracleOnRandomGraphs) {
  std::size_t structured = 0;
  std::size_t overlapping = 0;
  for (const auto& g : testing::small_corpus(2000, 21)) {
    const auto r = check_structure(g);
    ASSERT_EQ(r.verdict(), !testing::naive_overlap(g));
    if (r.verdict()) {
      ++structured;
      const auto& s = r.structured();
      std::vector<std::vector<EdgeId>> wn;
      for (auto& c : testing::subset_circles(g)) {
        if (testing::negatives_in(g, c) == 1) wn.push_back(c);
      }
      const std::size_t q = testing::brute_force_q(g);
      ASSERT_EQ(disagreements(g, s.canonical_clustering).count, s.intra_component_negative_edge_ids.size());
      ASSERT_EQ(s.intra_component_negative_edge_ids.size(), wn.size());
      ASSERT_EQ(wn.size(), q);
      ASSERT_EQ(testing::brute_force_packing(wn), q);
    } else {
      ++overlapping;
      ASSERT_TRUE(witness_is_valid(g, r.overlap().witness));
    }
    ASSERT_EQ(check_structure(g), r);
  }
  EXPECT_GT(structured, 200u);
  EXPECT_GT(overlapping, 200u);
}

TEST(CheckStructure, HandlesLongPathsWithoutRecursion) {
  std::vector<EdgeInput> edges;
  const int n = 200000;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, P});
  edges.push_back({0, n - 1, N});
  const auto g = build_graph(n, edges);
  const auto r = check_structure(g);
  ASSERT_TRUE(r.verdict());
  EXPECT_EQ(r.structured().intra_component_negative_edge_ids.size(), 1u);
}

}  // namespace
}  // namespace wnc
