#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "tmatch/temporal_graph.hpp"

namespace tmatch {

/// A set of pairwise non-overlapping temporal edges.
struct TimedMatching {
  std::vector<EdgeId> edge_ids;  // sorted, unique
  double total_weight = 0.0;

  std::size_t size() const { return edge_ids.size(); }
  friend bool operator==(const TimedMatching&, const TimedMatching&) = default;
};

/// Builds a matching from edge ids, summing weights in ascending id order.
/// Throws InvalidMatching if two of the edges overlap.
inline TimedMatching make_timed_matching(const TemporalGraph& g, std::span<const EdgeId> ids) {
  TimedMatching m;
  m.edge_ids.assign(ids.begin(), ids.end());
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  m.edge_ids.erase(std::unique(m.edge_ids.begin(), m.edge_ids.end()), m.edge_ids.end());
  if (!verify_matching(g, m.edge_ids)) {
    throw Error(ErrorKind::InvalidMatching, "edge set contains overlapping edges");
  }
  for (EdgeId id : m.edge_ids) m.total_weight += g.edge(id).weight;
  return m;
}

}  // namespace tmatch
