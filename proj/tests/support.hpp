#pragma once

// Independent reference implementations used only by tests. None of these
// share code with the library beyond the plain data types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tmatch/tmatch.hpp"

namespace tmatch::testing {

/// Overlap by walking every timestep in [0, horizon).
inline bool overlap_by_timesteps(const TemporalEdge& a, const TemporalEdge& b, Time horizon) {
  bool shared = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
  if (!shared) return false;
  for (Time t = 0; t < horizon; ++t) {
    bool in_a = false, in_b = false;
    for (auto i : a.intervals) in_a = in_a || (i.start <= t && t < i.finish);
    for (auto i : b.intervals) in_b = in_b || (i.start <= t && t < i.finish);
    if (in_a && in_b) return true;
  }
  return false;
}

/// Adjacency bitmasks of a static graph with at most 64 vertices.
inline std::vector<std::uint64_t> adjacency_masks(const StaticGraph& g) {
  std::vector<std::uint64_t> adj(g.num_vertices(), 0);
  for (auto [a, b] : g.edges()) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  return adj;
}

/// Exact treewidth by the O(2^n) subset recurrence
/// TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|), where Q(S, v) is the
/// set of vertices outside S + v reachable from v through S.
inline int treewidth_by_subsets(const StaticGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return -1;
  auto adj = adjacency_masks(g);
  const std::uint64_t all = n == 64 ? ~0ULL : (std::uint64_t{1} << n) - 1;
  auto q_size = [&](std::uint64_t s, std::size_t v) {
    std::uint64_t seen = std::uint64_t{1} << v, frontier = seen, outside = 0;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) {
        std::size_t x = static_cast<std::size_t>(std::countr_zero(f));
        std::uint64_t nb = adj[x] & ~seen;
        outside |= nb & ~s;
        next |= nb & s;
        seen |= nb;
      }
      frontier = next;
    }
    return std::popcount(outside & all & ~(std::uint64_t{1} << v));
  };
  std::vector<int> tw(std::size_t{1} << n, std::numeric_limits<int>::max());
  tw[0] = -1;
  for (std::uint64_t s = 1; s <= all; ++s) {
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
      std::uint64_t without = s & ~(std::uint64_t{1} << v);
      int cand = std::max(tw[without], q_size(without, v));
      tw[s] = std::min(tw[s], cand);
    }
  }
  return tw[all];
}

/// Maximum weight over all 2^n subsets, with the lexicographically smallest
/// sorted optimum. Enumerates subsets directly, unlike the library oracle.
struct SubsetOptimum {
  double weight = 0.0;
  std::vector<Vertex> set;
};

inline SubsetOptimum mwis_by_subsets(const StaticGraph& g) {
  const std::size_t n = g.num_vertices();
  auto adj = adjacency_masks(g);
  SubsetOptimum best;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    double w = 0.0;
    std::vector<Vertex> set;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (!(s >> v & 1)) continue;
      ok = (adj[v] & s) == 0;
      w += g.weight(static_cast<Vertex>(v));
      set.push_back(static_cast<Vertex>(v));
    }
    if (!ok) continue;
    if (w > best.weight || (w == best.weight && set < best.set)) best = {w, set};
  }
  return best;
}

/// Size of a maximum independent set.
inline std::size_t max_independent_set_size(const StaticGraph& g) {
  const std::size_t n = g.num_vertices();
  auto adj = adjacency_masks(g);
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::uint64_t r = s; r && ok; r &= r - 1) ok = (adj[std::countr_zero(r)] & s) == 0;
    if (ok) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

inline bool is_acyclic(const StaticGraph& g) {
  std::vector<Vertex> parent(g.num_vertices());
  for (Vertex v = 0; v < parent.size(); ++v) parent[v] = v;
  std::function<Vertex(Vertex)> find = [&](Vertex v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (auto [a, b] : g.edges()) {
    Vertex ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

inline StaticGraph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
                              std::vector<double> weights = {}) {
  StaticGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  if (!weights.empty()) g.set_weights(std::move(weights));
  return g;
}

inline TemporalEdge tedge(Vertex u, Vertex v, double w, std::vector<Interval> intervals) {
  TemporalEdge e;
  e.u = u;
  e.v = v;
  e.weight = w;
  e.intervals = std::move(intervals);
  return e;
}

/// Small random temporal graph with quarter-grid weights, drawn directly
/// from a seeded stream (independent of the library generator).
inline TemporalGraph random_temporal(std::uint64_t seed, std::size_t max_n, std::size_t max_edges,
                                     Time max_lifetime) {
  Xoshiro256 rng(seed);
  std::size_t n = 2 + rng.below(max_n - 1);
  Time lifetime = 1 + static_cast<Time>(rng.below(static_cast<std::uint64_t>(max_lifetime)));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  rng.shuffle(pairs);
  std::size_t m = rng.below(std::min(max_edges, pairs.size()) + 1);
  std::vector<TemporalEdge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Interval> intervals;
    Time t = static_cast<Time>(rng.below(static_cast<std::uint64_t>(lifetime)));
    while (t < lifetime) {
      Time len = 1 + static_cast<Time>(rng.below(3));
      intervals.push_back({t, std::min(lifetime, t + len)});
      t += len + 1 + static_cast<Time>(rng.below(4));
    }
    double w = static_cast<double>(rng.below(41)) / 4.0;
    edges.push_back(tedge(pairs[i].first, pairs[i].second, w, std::move(intervals)));
  }
  return TemporalGraph(n, lifetime, std::move(edges));
}

/// Random vertex-weighted graph on up to max_n vertices, quarter-grid weights
/// (zero allowed, to exercise ties).
inline StaticGraph random_static(std::uint64_t seed, std::size_t min_n, std::size_t max_n) {
  Xoshiro256 rng(seed);
  std::size_t n = min_n + rng.below(max_n - min_n + 1);
  double p = 0.1 + 0.6 * rng.unit();
  StaticGraph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.chance(p)) g.add_edge(a, b);
    }
  }
  std::vector<double> w(n);
  for (auto& x : w) x = static_cast<double>(rng.below(21)) / 4.0;
  g.set_weights(std::move(w));
  return g;
}

}  // namespace tmatch::testing
