#include <gtest/gtest.h>

#include "support.hpp"

using namespace tmatch;
using tmatch::testing::make_graph;

namespace {

MwisResult dp_with(const StaticGraph& g, EliminationHeuristic h, MwisStats* stats = nullptr) {
  return mwis_treedp(g, make_nice(decompose_heuristic(g, h)), stats);
}

}  // namespace

TEST(MwisTreeDp, Triangle) {
  auto g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 2, 3});
  auto r = dp_with(g, EliminationHeuristic::MinFill);
  EXPECT_EQ(r.weight, 3.0);
  EXPECT_EQ(r.solution, (std::vector<Vertex>{2}));
}

TEST(MwisTreeDp, Path) {
  auto g = make_graph(3, {{0, 1}, {1, 2}}, {2, 1, 2});
  auto r = dp_with(g, EliminationHeuristic::MinDegree);
  EXPECT_EQ(r.weight, 4.0);
  EXPECT_EQ(r.solution, (std::vector<Vertex>{0, 2}));
}

TEST(MwisTreeDp, Edgeless) {
  auto g = make_graph(2, {}, {1, 1});
  auto r = dp_with(g, EliminationHeuristic::MinFill);
  EXPECT_EQ(r.weight, 2.0);
  EXPECT_EQ(r.solution, (std::vector<Vertex>{0, 1}));
}

TEST(MwisTreeDp, EmptyGraph) {
  auto r = dp_with(StaticGraph(0), EliminationHeuristic::MinFill);
  EXPECT_EQ(r.weight, 0.0);
  EXPECT_TRUE(r.solution.empty());
}

TEST(MwisTreeDp, TieBreakPrefersSmallestSortedSet) {
  // Path 0-1-2-3 with unit weights: optima {0,2}, {0,3}, {1,3}.
  auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1});
  EXPECT_EQ(dp_with(g, EliminationHeuristic::MinFill).solution, (std::vector<Vertex>{0, 2}));
  // Zero-weight vertex 0 is free to add and makes the set smaller; vertex 3
  // with zero weight would only lengthen it.
  auto h = make_graph(4, {{1, 2}}, {0, 1, 1, 0});
  EXPECT_EQ(dp_with(h, EliminationHeuristic::MinDegree).solution, (std::vector<Vertex>{0, 1}));
}

TEST(MwisTreeDp, RejectsInvalidDecomposition) {
  auto g = make_graph(3, {{0, 1}, {1, 2}});
  TreeDecomposition td{{{0, 1}, {2}}, {kNoNode, 0}, 0};
  try {
    mwis_treedp(g, make_nice(td));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidDecomposition);
  }
}

TEST(MwisTreeDp, MatchesSubsetOracleAcrossDecompositions) {
  std::size_t with_join = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto g = tmatch::testing::random_static(seed, 1, 14);
    auto expected = tmatch::testing::mwis_by_subsets(g);
    std::vector<TreeDecomposition> decompositions{
        decompose_heuristic(g, EliminationHeuristic::MinFill),
        decompose_heuristic(g, EliminationHeuristic::MinDegree),
        *decompose_exact(g, static_cast<int>(g.num_vertices()) - 1, kUnlimitedBudget).decomposition};
    for (const auto& td : decompositions) {
      auto nice = make_nice(td);
      with_join += nice.count(NiceKind::Join) > 0;
      MwisStats stats;
      auto r = mwis_treedp(g, nice, &stats);
      EXPECT_EQ(r.weight, expected.weight) << "seed " << seed;
      EXPECT_EQ(r.solution, expected.set) << "seed " << seed;
      EXPECT_TRUE(g.is_independent(r.solution));
      EXPECT_LE(stats.max_table_entries, std::size_t{1} << (nice.width() + 1));
    }
  }
  EXPECT_GE(with_join, 100u);
}

TEST(MwisBruteforce, Examples) {
  auto single = make_graph(1, {}, {5});
  auto r = mwis_bruteforce(single);
  EXPECT_EQ(r.weight, 5.0);
  EXPECT_EQ(r.solution, (std::vector<Vertex>{0}));

  auto k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(mwis_bruteforce(k4).weight, 1.0);
  EXPECT_EQ(mwis_bruteforce(k4).solution, (std::vector<Vertex>{0}));
}

TEST(MwisBruteforce, AgreesWithSubsetOracle) {
  for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
    auto g = tmatch::testing::random_static(seed, 1, 12);
    auto expected = tmatch::testing::mwis_by_subsets(g);
    auto r = mwis_bruteforce(g);
    EXPECT_EQ(r.weight, expected.weight);
    EXPECT_EQ(r.solution, expected.set);
  }
}

TEST(MwisBruteforce, SizeLimit) {
  try {
    mwis_bruteforce(StaticGraph(25));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}
