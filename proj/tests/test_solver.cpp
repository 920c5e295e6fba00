#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace tmatch;
using tmatch::testing::tedge;

namespace {

// a=0 b=1 c=2 d=3; e_ab and e_ac never coexist, e_ac and e_cd share t=2.
TemporalGraph figure_graph() {
  return TemporalGraph(4, 6, {tedge(0, 1, 8, {{0, 2}}), tedge(0, 2, 7, {{2, 3}}), tedge(2, 3, 6, {{2, 4}})});
}

}  // namespace

TEST(Solve, FigureShapedGraph) {
  auto g = figure_graph();
  auto report = solve(g);
  EXPECT_EQ(report.matching.edge_ids, (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(report.matching.total_weight, 15.0);
  EXPECT_EQ(report.overlap_vertices, 3u);
  EXPECT_EQ(report.overlap_edges, 1u);
  EXPECT_EQ(report.mwis_weight, report.matching.total_weight);
}

TEST(Solve, EdgelessGraph) {
  auto report = solve(TemporalGraph(3, 5, {}));
  EXPECT_TRUE(report.matching.edge_ids.empty());
  EXPECT_EQ(report.matching.total_weight, 0.0);
}

TEST(Solve, LiftReportsBothWidthsAndBound) {
  auto g = figure_graph();
  auto report = solve(g, {.lift = true});
  ASSERT_TRUE(report.underlying_width && report.direct_width && report.lift_bound);
  EXPECT_EQ(*report.underlying_width, 1);
  EXPECT_EQ(report.underlying_max_degree, 2u);
  EXPECT_EQ(*report.lift_bound, 3);
  EXPECT_LE(report.decomposition_width, *report.lift_bound);
  EXPECT_EQ(report.matching.total_weight, 15.0);
}

TEST(Bruteforce, Examples) {
  TemporalGraph one(2, 3, {tedge(0, 1, 2.5, {{0, 1}})});
  EXPECT_EQ(matching_bruteforce(one).edge_ids, (std::vector<EdgeId>{0}));
  EXPECT_EQ(matching_bruteforce(one).total_weight, 2.5);

  TemporalGraph conflict(3, 3, {tedge(0, 1, 3, {{0, 2}}), tedge(1, 2, 5, {{1, 3}})});
  EXPECT_EQ(matching_bruteforce(conflict).edge_ids, (std::vector<EdgeId>{1}));
  EXPECT_EQ(matching_bruteforce(conflict).total_weight, 5.0);

  TemporalGraph star(4, 2, {tedge(0, 3, 1, {{0, 1}}), tedge(1, 3, 2, {{0, 2}}), tedge(2, 3, 3, {{0, 1}})});
  EXPECT_EQ(matching_bruteforce(star).total_weight, 3.0);
  EXPECT_EQ(solve(star).matching.total_weight, 3.0);
}

TEST(Bruteforce, SizeLimit) {
  std::vector<TemporalEdge> edges;
  for (Vertex v = 1; v <= 21; ++v) edges.push_back(tedge(0, v, 1, {{0, 1}}));
  try {
    matching_bruteforce(TemporalGraph(22, 1, edges));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(Solve, AgreesWithBruteforceUnderAllStrategies) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto g = tmatch::testing::random_temporal(seed, 9, 14, 12);
    auto expected = matching_bruteforce(g);
    for (auto s : {DecompositionStrategy::MinFill, DecompositionStrategy::MinDegree,
                   DecompositionStrategy::Exact}) {
      for (bool lift : {false, true}) {
        auto report = solve(g, {.strategy = s, .lift = lift});
        EXPECT_EQ(report.matching, expected) << "seed " << seed << " " << to_string(s);
        EXPECT_TRUE(verify_matching(g, report.matching.edge_ids));
        EXPECT_EQ(report.mwis_weight, report.matching.total_weight);
      }
    }
  }
}

TEST(MaxCardinality, Examples) {
  EXPECT_EQ(max_cardinality_solve(TemporalGraph(0, 0, {})).matching.size(), 0u);
  TemporalGraph disjoint(6, 6, {tedge(0, 1, 9, {{0, 1}}), tedge(1, 2, 0, {{1, 2}}), tedge(2, 3, 4, {{2, 3}}),
                                tedge(3, 4, 1, {{3, 4}})});
  EXPECT_EQ(max_cardinality_solve(disjoint).matching.size(), 4u);
}

TEST(MaxCardinality, MatchesUnitWeightSolve) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto g = tmatch::testing::random_temporal(seed, 9, 14, 12);
    auto unit = g.with_uniform_weights(1.0);
    auto report = max_cardinality_solve(g);
    EXPECT_EQ(report.matching.size(), solve(unit).matching.size());
    EXPECT_EQ(report.matching.size(), matching_bruteforce(unit).size());
  }
}

TEST(MatchingFormat, RoundTrip) {
  auto g = figure_graph();
  auto m = solve(g).matching;
  std::stringstream s;
  write_matching(s, g, m);
  EXPECT_EQ(s.str(), "weight 15\nedge 0 1\nedge 0 2\n");
  EXPECT_EQ(read_matching(s, g), m);
}

TEST(MatchingFormat, Errors) {
  auto g = figure_graph();
  auto kind = [&](const std::string& text) {
    std::istringstream in(text);
    try {
      read_matching(in, g);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind("weight 13\nedge 0 2\nedge 2 3\n"), ErrorKind::InvalidMatching);
  EXPECT_EQ(kind("weight 8\nedge 1 3\n"), ErrorKind::UnknownEdge);
  EXPECT_EQ(kind("weight 9\nedge 0 1\n"), ErrorKind::InvalidMatching);
  EXPECT_EQ(kind("edge 0 1\n"), ErrorKind::Syntax);
}
