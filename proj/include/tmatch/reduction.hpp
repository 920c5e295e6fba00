#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "tmatch/detail/text.hpp"
#include "tmatch/error.hpp"
#include "tmatch/static_graph.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

/// Temporal star built from an independent-set instance (G, k).
///
/// Vertex v of G becomes temporal vertex v; the centre is vertex |V(G)|.
/// Static edge (u, w) gets label n_uw and the unit interval (n_uw, n_uw + 1)
/// on both star edges of u and w, so two star edges overlap exactly when
/// their source vertices are adjacent. Isolated vertices get labels after
/// the edge labels so that every star edge is alive at least once.
struct ReducedInstance {
  StaticGraph source;
  TemporalGraph temporal;
  Vertex center = 0;
  std::map<std::pair<Vertex, Vertex>, Time> edge_labels;  // keys (min, max)
  std::map<Vertex, Time> isolated_labels;
  std::size_t k = 0;
  std::size_t k_prime = 0;

  std::size_t m_edges() const { return edge_labels.size(); }
  std::size_t n_isolated() const { return isolated_labels.size(); }
};

/// Labels: static edges in (min, max) order get 0..m-1, isolated vertices in
/// id order get m..m+n0-1. Lifetime is m + n0.
inline ReducedInstance reduce_is_to_matching(const StaticGraph& g, std::size_t k) {
  ReducedInstance ri;
  ri.source = g;
  ri.k = k;
  ri.k_prime = k;
  const auto n = g.num_vertices();
  ri.center = static_cast<Vertex>(n);

  Time label = 0;
  for (auto e : g.edges()) ri.edge_labels[e] = label++;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) ri.isolated_labels[v] = label++;
  }
  const Time lifetime = label;

  std::vector<TemporalEdge> edges;
  edges.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    TemporalEdge e;
    e.u = v;
    e.v = ri.center;
    e.weight = 1.0;
    if (g.degree(v) == 0) {
      Time t = ri.isolated_labels.at(v);
      e.intervals.push_back({t, t + 1});
    } else {
      for (Vertex u : g.neighbors(v)) {
        Time t = ri.edge_labels.at({std::min(u, v), std::max(u, v)});
        e.intervals.push_back({t, t + 1});
      }
    }
    edges.push_back(std::move(e));
  }
  ri.temporal = TemporalGraph(n + 1, lifetime, std::move(edges));
  return ri;
}

inline EdgeId star_edge_of(const ReducedInstance& ri, Vertex v) {
  auto id = ri.temporal.find_edge(v, ri.center);
  if (!id) throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " has no star edge");
  return *id;
}

/// {v in IS} -> {star edge of v}.
inline std::vector<EdgeId> map_is_to_matching(const ReducedInstance& ri,
                                              std::span<const Vertex> independent_set) {
  for (Vertex v : independent_set) {
    if (v >= ri.source.num_vertices()) {
      throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
  }
  if (!ri.source.is_independent(independent_set)) {
    throw Error(ErrorKind::NotIndependent, "vertex set is not independent in the source graph");
  }
  std::vector<EdgeId> out;
  for (Vertex v : independent_set) out.push_back(star_edge_of(ri, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// {star edge of v in M} -> {v}.
inline std::vector<Vertex> map_matching_to_is(const ReducedInstance& ri,
                                              std::span<const EdgeId> matching) {
  if (!verify_matching(ri.temporal, matching)) {
    throw Error(ErrorKind::InvalidMatching, "edge set is not a 0-1 timed matching");
  }
  std::vector<Vertex> out;
  for (EdgeId id : matching) {
    const auto& e = ri.temporal.edge(id);
    out.push_back(e.u == ri.center ? e.v : e.u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Label sidecar:
///   labels <n> <m_E> <n_0> <k>
///   e <u> <v> <label>
///   i <v> <label>
inline void write_labels(std::ostream& out, const ReducedInstance& ri) {
  out << "labels " << ri.source.num_vertices() << ' ' << ri.m_edges() << ' ' << ri.n_isolated()
      << ' ' << ri.k << '\n';
  for (const auto& [e, t] : ri.edge_labels) out << "e " << e.first << ' ' << e.second << ' ' << t << '\n';
  for (const auto& [v, t] : ri.isolated_labels) out << "i " << v << ' ' << t << '\n';
}

/// Rebuilds a ReducedInstance from the sidecar and the temporal graph, and
/// checks that the two agree with the construction.
inline ReducedInstance read_labels(std::istream& in, const TemporalGraph& temporal) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(ErrorKind::Syntax, "missing labels header");
  detail::LineCursor head(lines[0]);
  if (head.word() != "labels") throw Error(ErrorKind::Syntax, "expected 'labels'", lines[0].number, 1);
  auto n = head.integer("vertex count");
  auto m = head.integer("edge count");
  auto n0 = head.integer("isolated count");
  auto k = head.integer("k");
  head.expect_end();
  if (n < 0 || m < 0 || n0 < 0 || k < 0) throw Error(ErrorKind::Syntax, "negative count", lines[0].number);

  StaticGraph source(static_cast<std::size_t>(n));
  std::map<std::pair<Vertex, Vertex>, Time> edge_labels;
  std::map<Vertex, Time> isolated_labels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineCursor cur(lines[i]);
    auto tag = cur.word();
    if (tag == "e") {
      auto u = cur.integer("endpoint");
      auto v = cur.integer("endpoint");
      auto t = cur.integer("label");
      cur.expect_end();
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error(ErrorKind::VertexOutOfRange, "endpoint out of range", lines[i].number);
      }
      auto a = static_cast<Vertex>(std::min(u, v));
      auto b = static_cast<Vertex>(std::max(u, v));
      try {
        source.add_edge(a, b);
      } catch (const Error& e) {
        throw Error(e.kind(), e.message(), lines[i].number);
      }
      edge_labels[{a, b}] = t;
    } else if (tag == "i") {
      auto v = cur.integer("vertex");
      auto t = cur.integer("label");
      cur.expect_end();
      if (v < 0 || v >= n) throw Error(ErrorKind::VertexOutOfRange, "vertex out of range", lines[i].number);
      isolated_labels[static_cast<Vertex>(v)] = t;
    } else {
      throw Error(ErrorKind::Syntax, "expected 'e' or 'i' line", lines[i].number, 1);
    }
  }
  auto ri = reduce_is_to_matching(source, static_cast<std::size_t>(k));
  if (static_cast<std::int64_t>(ri.m_edges()) != m ||
      static_cast<std::int64_t>(ri.n_isolated()) != n0 || ri.edge_labels != edge_labels ||
      ri.isolated_labels != isolated_labels || !(ri.temporal == temporal)) {
    throw Error(ErrorKind::MismatchedInputs, "labels do not describe this temporal graph");
  }
  return ri;
}

}  // namespace tmatch
