// Builds a small temporal graph in code, solves it, and prints the matching.
#include <iostream>

#include "tmatch/tmatch.hpp"

int main() {
  using tmatch::TemporalEdge;
  std::vector<TemporalEdge> edges{
      {.u = 0, .v = 1, .weight = 8.0, .intervals = {{0, 2}}},
      {.u = 0, .v = 2, .weight = 7.0, .intervals = {{2, 3}}},
      {.u = 2, .v = 3, .weight = 6.0, .intervals = {{2, 4}}},
  };
  tmatch::TemporalGraph g(4, 6, edges);

  auto report = tmatch::solve(g);
  tmatch::write_matching(std::cout, g, report.matching);
  std::cout << "overlap graph: " << report.overlap_vertices << " vertices, "
            << report.overlap_edges << " edges; width " << report.decomposition_width << '\n';
  return 0;
}
