#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace tmatch;
using tmatch::testing::make_graph;

namespace {

std::vector<Interval> intervals_of(const ReducedInstance& ri, Vertex v) {
  return ri.temporal.edge(star_edge_of(ri, v)).intervals;
}

}  // namespace

TEST(Reduce, PathOnThreeVertices) {
  auto ri = reduce_is_to_matching(make_graph(3, {{0, 1}, {1, 2}}), 2);
  EXPECT_EQ(ri.center, 3u);
  EXPECT_EQ(ri.temporal.num_vertices(), 4u);
  EXPECT_EQ(ri.temporal.lifetime(), 2);
  EXPECT_EQ((ri.edge_labels.at({0, 1})), 0);
  EXPECT_EQ((ri.edge_labels.at({1, 2})), 1);
  EXPECT_EQ(intervals_of(ri, 0), (std::vector<Interval>{{0, 1}}));
  EXPECT_EQ(intervals_of(ri, 1), (std::vector<Interval>{{0, 1}, {1, 2}}));
  EXPECT_EQ(intervals_of(ri, 2), (std::vector<Interval>{{1, 2}}));
  EXPECT_EQ(ri.k_prime, 2u);
  EXPECT_EQ(max_cardinality_solve(ri.temporal).matching.size(), 2u);
}

TEST(Reduce, IsolatedVertices) {
  auto ri = reduce_is_to_matching(StaticGraph(2), 1);
  EXPECT_EQ(ri.m_edges(), 0u);
  EXPECT_EQ(ri.n_isolated(), 2u);
  EXPECT_EQ(ri.temporal.lifetime(), 2);
  EXPECT_EQ(intervals_of(ri, 0), (std::vector<Interval>{{0, 1}}));
  EXPECT_EQ(intervals_of(ri, 1), (std::vector<Interval>{{1, 2}}));
}

TEST(Reduce, SingleEdge) {
  auto ri = reduce_is_to_matching(make_graph(2, {{0, 1}}), 1);
  EXPECT_EQ(intervals_of(ri, 0), (std::vector<Interval>{{0, 1}}));
  EXPECT_EQ(intervals_of(ri, 1), (std::vector<Interval>{{0, 1}}));
  EXPECT_TRUE(edges_overlap(ri.temporal.edge(0), ri.temporal.edge(1)));
  EXPECT_EQ(matching_bruteforce(ri.temporal).size(), 1u);
}

TEST(Reduce, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto g = tmatch::testing::random_static(seed, 1, 10);
    auto ri = reduce_is_to_matching(g, 3);
    ASSERT_EQ(ri.temporal.num_edges(), g.num_vertices());
    EXPECT_EQ(ri.temporal.lifetime(), static_cast<Time>(ri.m_edges() + ri.n_isolated()));
    for (const auto& e : ri.temporal.edges()) {
      EXPECT_EQ(e.v, ri.center);
      EXPECT_EQ(e.weight, 1.0);
      for (auto i : e.intervals) EXPECT_EQ(i.finish, i.start + 1);
      EXPECT_EQ(e.intervals.size(), std::max<std::size_t>(1, g.degree(e.u)));
    }
    // Label t sits on exactly the two star edges of its static edge.
    for (const auto& [edge, t] : ri.edge_labels) {
      std::vector<Vertex> holders;
      for (const auto& e : ri.temporal.edges()) {
        if (e.active_at(t)) holders.push_back(e.u);
      }
      EXPECT_EQ(holders, (std::vector<Vertex>{edge.first, edge.second}));
    }
    EXPECT_EQ(matching_bruteforce(ri.temporal).size(), tmatch::testing::max_independent_set_size(g));
  }
}

TEST(Mappings, PathExamples) {
  auto ri = reduce_is_to_matching(make_graph(3, {{0, 1}, {1, 2}}), 2);
  auto m = map_is_to_matching(ri, std::vector<Vertex>{0, 2});
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(verify_matching(ri.temporal, m));
  EXPECT_TRUE(map_is_to_matching(ri, std::vector<Vertex>{}).empty());
  EXPECT_EQ(map_is_to_matching(ri, std::vector<Vertex>{1}),
            (std::vector<EdgeId>{star_edge_of(ri, 1)}));
  EXPECT_EQ(map_matching_to_is(ri, m), (std::vector<Vertex>{0, 2}));
}

TEST(Mappings, Errors) {
  auto ri = reduce_is_to_matching(make_graph(3, {{0, 1}, {1, 2}}), 2);
  try {
    map_is_to_matching(ri, std::vector<Vertex>{0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIndependent);
  }
  try {
    map_matching_to_is(ri, std::vector<EdgeId>{star_edge_of(ri, 1), star_edge_of(ri, 2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidMatching);
  }
}

TEST(Mappings, TriangleMatchingsAreSingletons) {
  auto ri = reduce_is_to_matching(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}), 1);
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    std::vector<EdgeId> m;
    for (EdgeId id = 0; id < 3; ++id) {
      if (mask >> id & 1) m.push_back(id);
    }
    if (!verify_matching(ri.temporal, m)) continue;
    auto is = map_matching_to_is(ri, m);
    EXPECT_LE(is.size(), 1u);
    EXPECT_EQ(is.size(), m.size());
    EXPECT_EQ(map_is_to_matching(ri, is), m);
  }
}

TEST(Labels, RoundTripAndMismatch) {
  auto ri = reduce_is_to_matching(make_graph(5, {{0, 1}, {1, 2}, {3, 1}}), 2);
  std::stringstream s;
  write_labels(s, ri);
  EXPECT_EQ(s.str(), "labels 5 3 1 2\ne 0 1 0\ne 1 2 1\ne 1 3 2\ni 4 3\n");
  auto back = read_labels(s, ri.temporal);
  EXPECT_EQ(back.edge_labels, ri.edge_labels);
  EXPECT_EQ(back.isolated_labels, ri.isolated_labels);
  EXPECT_EQ(back.k, 2u);

  std::istringstream wrong("labels 5 3 1 2\ne 0 1 1\ne 1 2 0\ne 1 3 2\ni 4 3\n");
  try {
    read_labels(wrong, ri.temporal);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MismatchedInputs);
  }
}
