#include <gtest/gtest.h>

#include "support.hpp"

using namespace tmatch;
using tmatch::testing::tedge;

TEST(BuildOverlapGraph, SharedEndpointBothActive) {
  TemporalGraph g(4, 5, {tedge(0, 2, 1.5, {{2, 3}}), tedge(2, 3, 2.5, {{2, 4}})});
  auto og = build_overlap_graph(g);
  EXPECT_EQ(og.graph.num_vertices(), 2u);
  EXPECT_EQ(og.graph.num_edges(), 1u);
  EXPECT_TRUE(og.graph.has_edge(0, 1));
  EXPECT_EQ(og.graph.weight(0), 1.5);
  EXPECT_EQ(og.graph.weight(1), 2.5);
}

TEST(BuildOverlapGraph, NoEdges) {
  auto og = build_overlap_graph(TemporalGraph(3, 4, {}));
  EXPECT_EQ(og.graph.num_vertices(), 0u);
  EXPECT_TRUE(og.edge_of_vertex.empty());
}

TEST(BuildOverlapGraph, StarWithDisjointIntervals) {
  TemporalGraph g(4, 3, {tedge(0, 3, 1, {{0, 1}}), tedge(1, 3, 1, {{1, 2}}), tedge(2, 3, 1, {{2, 3}})});
  auto og = build_overlap_graph(g);
  EXPECT_EQ(og.graph.num_vertices(), 3u);
  EXPECT_EQ(og.graph.num_edges(), 0u);
}

TEST(BuildOverlapGraph, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto g = tmatch::testing::random_temporal(seed, 8, 20, 16);
    auto og = build_overlap_graph(g);
    auto gu = underlying_graph(g);
    ASSERT_EQ(og.graph.num_vertices(), g.num_edges());
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      EXPECT_EQ(og.edge_of_vertex[og.vertex_of_edge[id]], id);
      EXPECT_EQ(og.graph.weight(og.vertex_of_edge[id]), g.edge(id).weight);
    }
    for (const auto& a : g.edges()) {
      for (const auto& b : g.edges()) {
        if (a.id >= b.id) continue;
        EXPECT_EQ(og.graph.has_edge(og.vertex_of_edge[a.id], og.vertex_of_edge[b.id]),
                  tmatch::testing::overlap_by_timesteps(a, b, g.lifetime()));
      }
      EXPECT_LE(og.graph.degree(og.vertex_of_edge[a.id]),
                (gu.degree(a.u) - 1) + (gu.degree(a.v) - 1));
    }
  }
}

TEST(BuildOverlapGraph, IndependentOfInputEdgeOrder) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = tmatch::testing::random_temporal(seed, 8, 16, 10);
    auto edges = g.edges();
    std::reverse(edges.begin(), edges.end());
    for (auto& e : edges) std::swap(e.u, e.v);
    TemporalGraph h(g.num_vertices(), g.lifetime(), edges);
    EXPECT_EQ(build_overlap_graph(h).graph, build_overlap_graph(g).graph);
  }
}

TEST(MatchingFromIndependentSet, EmptySet) {
  TemporalGraph g(3, 3, {tedge(0, 1, 4, {{0, 1}})});
  auto og = build_overlap_graph(g);
  auto m = matching_from_independent_set(g, og, std::vector<Vertex>{});
  EXPECT_TRUE(m.edge_ids.empty());
  EXPECT_EQ(m.total_weight, 0.0);
}

TEST(MatchingFromIndependentSet, TriangleHeaviestVertex) {
  // Three edges at vertex 3, all alive at t=0: the overlap graph is a triangle.
  TemporalGraph g(4, 2, {tedge(0, 3, 1, {{0, 1}}), tedge(1, 3, 2, {{0, 2}}), tedge(2, 3, 3, {{0, 1}})});
  auto og = build_overlap_graph(g);
  ASSERT_EQ(og.graph.num_edges(), 3u);
  auto m = matching_from_independent_set(g, og, std::vector<Vertex>{2});
  EXPECT_EQ(m.edge_ids, (std::vector<EdgeId>{2}));
  EXPECT_EQ(m.total_weight, 3.0);
  try {
    matching_from_independent_set(g, og, std::vector<Vertex>{0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIndependent);
  }
}

TEST(MatchingFromIndependentSet, WeightPreservedBothWays) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto g = tmatch::testing::random_temporal(seed, 7, 12, 10);
    auto og = build_overlap_graph(g);
    const std::size_t m = g.num_edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<Vertex> set;
      for (Vertex v = 0; v < m; ++v) {
        if (mask >> v & 1) set.push_back(v);
      }
      std::vector<EdgeId> ids(set.begin(), set.end());
      bool independent = og.graph.is_independent(set);
      ASSERT_EQ(independent, verify_matching(g, ids));
      if (!independent) continue;
      auto matching = matching_from_independent_set(g, og, set);
      EXPECT_EQ(matching.total_weight, og.graph.total_weight(set));
    }
  }
}
