#pragma once

#include <span>
#include <vector>

#include "tmatch/static_graph.hpp"
#include "tmatch/temporal_graph.hpp"
#include "tmatch/timed_matching.hpp"

namespace tmatch {

/// Vertex-weighted conflict graph of a temporal graph: one vertex per
/// temporal edge, adjacent iff the two temporal edges overlap.
///
/// Overlap-vertex ids coincide with temporal-edge ids, so both maps below are
/// the identity; they are kept explicit so callers never rely on that.
struct OverlapGraph {
  StaticGraph graph;
  std::vector<EdgeId> edge_of_vertex;
  std::vector<Vertex> vertex_of_edge;
};

/// For every vertex of `g`, tests each pair of its incident edges.
inline OverlapGraph build_overlap_graph(const TemporalGraph& g) {
  OverlapGraph og;
  const std::size_t m = g.num_edges();
  og.graph = StaticGraph(m);
  og.edge_of_vertex.resize(m);
  og.vertex_of_edge.resize(m);
  std::vector<double> weights(m);
  for (const auto& e : g.edges()) {
    og.edge_of_vertex[e.id] = e.id;
    og.vertex_of_edge[e.id] = e.id;
    weights[e.id] = e.weight;
  }
  og.graph.set_weights(std::move(weights));

  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    auto incident = g.incident_edges(x);
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        Vertex a = og.vertex_of_edge[incident[i]];
        Vertex b = og.vertex_of_edge[incident[j]];
        if (og.graph.has_edge(a, b)) continue;
        if (edges_overlap(g.edge(incident[i]), g.edge(incident[j]))) og.graph.add_edge(a, b);
      }
    }
  }
  return og;
}

/// Maps an independent set of the overlap graph back to temporal edges.
inline TimedMatching matching_from_independent_set(const TemporalGraph& g, const OverlapGraph& og,
                                                   std::span<const Vertex> independent_set) {
  for (Vertex v : independent_set) {
    if (v >= og.graph.num_vertices()) {
      throw Error(ErrorKind::UnknownEdge, "overlap vertex " + std::to_string(v) + " out of range");
    }
  }
  if (!og.graph.is_independent(independent_set)) {
    throw Error(ErrorKind::NotIndependent, "vertex set is not independent in the overlap graph");
  }
  std::vector<EdgeId> ids;
  ids.reserve(independent_set.size());
  for (Vertex v : independent_set) ids.push_back(og.edge_of_vertex[v]);
  return make_timed_matching(g, ids);
}

}  // namespace tmatch
