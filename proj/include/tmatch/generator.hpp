#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tmatch/error.hpp"
#include "tmatch/rng.hpp"
#include "tmatch/static_graph.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

enum class Family { Tree, Star, PartialKTree, BoundedDegreeRandom };
enum class WeightGrid { Unit, Quarter };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::Tree: return "tree";
    case Family::Star: return "star";
    case Family::PartialKTree: return "partial-k-tree";
    case Family::BoundedDegreeRandom: return "bounded-degree-random";
  }
  return "unknown";
}

struct GenSpec {
  std::uint64_t seed = 1;
  std::size_t n_vertices = 8;
  Time lifetime = 8;
  /// Degree cap on the underlying graph; 0 means uncapped.
  std::size_t max_degree = 0;
  Family family = Family::Tree;
  /// Partial k-tree: width of the k-tree and per-edge deletion probability.
  std::size_t k = 2;
  double edge_drop_probability = 0.3;
  /// Bounded-degree-random: number of edges to aim for (0: n).
  std::size_t target_edges = 0;
  /// Probability that an edge is alive at a given unit slot.
  double interval_density = 0.3;
  std::size_t max_intervals_per_edge = 3;
  WeightGrid weight_grid = WeightGrid::Quarter;
  /// Quarter grid: weights are multiples of 0.25 in [weight_min, weight_max],
  /// hence exact in binary floating point.
  double weight_min = 0.25;
  double weight_max = 10.0;
};

namespace detail {

enum : std::uint64_t { kPhaseStructure = 1, kPhaseRelabel = 2, kPhaseIntervals = 3, kPhaseWeights = 4 };

inline void check_spec(const GenSpec& s) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InfeasibleSpec, what); };
  if (s.n_vertices == 0) fail("n_vertices must be positive");
  if (s.lifetime <= 0) fail("lifetime must be positive");
  if (!(s.interval_density >= 0.0 && s.interval_density <= 1.0)) fail("interval_density must be in [0,1]");
  if (!(s.edge_drop_probability >= 0.0 && s.edge_drop_probability <= 1.0)) {
    fail("edge_drop_probability must be in [0,1]");
  }
  if (s.max_intervals_per_edge == 0) fail("max_intervals_per_edge must be positive");
  if (s.family == Family::PartialKTree && s.k == 0) fail("k must be positive");
  if (s.weight_grid == WeightGrid::Quarter) {
    auto on_grid = [](double w) { return std::isfinite(w) && std::floor(w * 4) == w * 4; };
    if (!on_grid(s.weight_min) || !on_grid(s.weight_max) || s.weight_min < 0 ||
        s.weight_min > s.weight_max) {
      fail("quarter-grid weight range must be multiples of 0.25 with 0 <= min <= max");
    }
  }
  const std::size_t n = s.n_vertices;
  const std::size_t cap = s.max_degree;
  if (s.family == Family::Tree && cap == 1 && n > 2) fail("a tree on more than 2 vertices needs degree 2");
  if (s.family == Family::Star && cap != 0 && cap < n - 1) fail("a star needs degree n-1 at its centre");
  if (s.family == Family::BoundedDegreeRandom) {
    std::size_t want = s.target_edges == 0 ? n : s.target_edges;
    std::size_t limit = n * (n - 1) / 2;
    if (cap != 0) limit = std::min(limit, n * cap / 2);
    if (want > limit && s.target_edges != 0) fail("target_edges exceeds what the degree cap allows");
  }
}

inline std::vector<std::pair<Vertex, Vertex>> random_structure(const GenSpec& s, Xoshiro256& rng) {
  const std::size_t n = s.n_vertices;
  const std::size_t cap = s.max_degree == 0 ? n : s.max_degree;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::size_t> degree(n, 0);
  auto link = [&](Vertex a, Vertex b) {
    edges.emplace_back(std::min(a, b), std::max(a, b));
    ++degree[a];
    ++degree[b];
  };
  switch (s.family) {
    case Family::Star:
      for (Vertex v = 1; v < n; ++v) link(0, v);
      break;
    case Family::Tree:
      for (Vertex v = 1; v < n; ++v) {
        std::vector<Vertex> open;
        for (Vertex u = 0; u < v; ++u) {
          if (degree[u] < cap) open.push_back(u);
        }
        if (open.empty()) throw Error(ErrorKind::InfeasibleSpec, "degree cap leaves no attachment point");
        link(open[rng.below(open.size())], v);
      }
      break;
    case Family::PartialKTree: {
      const std::size_t k = s.k;
      const std::size_t base = std::min(n, k + 1);
      for (Vertex a = 0; a < base; ++a) {
        for (Vertex b = a + 1; b < base; ++b) link(a, b);
      }
      std::vector<std::vector<Vertex>> cliques;
      if (n > k + 1) {
        for (Vertex skip = 0; skip <= k; ++skip) {
          std::vector<Vertex> c;
          for (Vertex a = 0; a <= k; ++a) {
            if (a != skip) c.push_back(a);
          }
          cliques.push_back(std::move(c));
        }
      }
      for (Vertex v = static_cast<Vertex>(k + 1); v < n; ++v) {
        auto chosen = cliques[rng.below(cliques.size())];
        for (Vertex u : chosen) link(u, v);
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          auto next = chosen;
          next[i] = v;
          cliques.push_back(std::move(next));
        }
      }
      std::vector<std::pair<Vertex, Vertex>> kept;
      for (auto e : edges) {
        if (!rng.chance(s.edge_drop_probability)) kept.push_back(e);
      }
      // Deleting edges keeps treewidth <= k; drop at random until the cap holds.
      rng.shuffle(kept);
      std::fill(degree.begin(), degree.end(), 0);
      for (auto [a, b] : kept) {
        ++degree[a];
        ++degree[b];
      }
      std::vector<std::pair<Vertex, Vertex>> capped;
      for (auto [a, b] : kept) {
        if (degree[a] > cap || degree[b] > cap) {
          --degree[a];
          --degree[b];
        } else {
          capped.emplace_back(a, b);
        }
      }
      edges = std::move(capped);
      break;
    }
    case Family::BoundedDegreeRandom: {
      std::size_t want = s.target_edges == 0 ? n : s.target_edges;
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
      }
      rng.shuffle(pairs);
      for (auto [a, b] : pairs) {
        if (edges.size() >= want) break;
        if (degree[a] < cap && degree[b] < cap) link(a, b);
      }
      break;
    }
  }
  return edges;
}

/// Slots alive with probability `density`, merged into maximal runs, capped
/// at min(max_intervals_per_edge, max(1, floor(T/2))) runs.
inline std::vector<Interval> random_intervals(const GenSpec& s, Xoshiro256& rng) {
  std::vector<Interval> runs;
  for (Time t = 0; t < s.lifetime; ++t) {
    if (!rng.chance(s.interval_density)) continue;
    if (!runs.empty() && runs.back().finish == t) {
      runs.back().finish = t + 1;
    } else {
      runs.push_back({t, t + 1});
    }
  }
  if (runs.empty()) {
    Time t = static_cast<Time>(rng.below(static_cast<std::uint64_t>(s.lifetime)));
    runs.push_back({t, t + 1});
  }
  const std::size_t cap = std::min<std::size_t>(
      s.max_intervals_per_edge, std::max<std::size_t>(1, static_cast<std::size_t>(s.lifetime / 2)));
  while (runs.size() > cap) runs.erase(runs.begin() + static_cast<std::ptrdiff_t>(rng.below(runs.size())));
  return runs;
}

}  // namespace detail

/// Seeded random temporal graph. Each phase (structure, relabelling,
/// intervals, weights) draws from its own xoshiro256** stream derived from
/// the seed, so equal specs give identical graphs.
inline TemporalGraph generate(const GenSpec& spec) {
  detail::check_spec(spec);
  auto structure_rng = Xoshiro256::for_phase(spec.seed, detail::kPhaseStructure);
  auto relabel_rng = Xoshiro256::for_phase(spec.seed, detail::kPhaseRelabel);
  auto interval_rng = Xoshiro256::for_phase(spec.seed, detail::kPhaseIntervals);
  auto weight_rng = Xoshiro256::for_phase(spec.seed, detail::kPhaseWeights);

  auto structure = detail::random_structure(spec, structure_rng);
  std::vector<Vertex> label(spec.n_vertices);
  std::iota(label.begin(), label.end(), Vertex{0});
  relabel_rng.shuffle(label);
  for (auto& [a, b] : structure) {
    a = label[a];
    b = label[b];
    if (a > b) std::swap(a, b);
  }
  std::sort(structure.begin(), structure.end());

  std::vector<TemporalEdge> edges;
  edges.reserve(structure.size());
  for (auto [a, b] : structure) {
    TemporalEdge e;
    e.u = a;
    e.v = b;
    e.intervals = detail::random_intervals(spec, interval_rng);
    if (spec.weight_grid == WeightGrid::Unit) {
      e.weight = 1.0;
    } else {
      auto lo = static_cast<std::uint64_t>(spec.weight_min * 4);
      auto hi = static_cast<std::uint64_t>(spec.weight_max * 4);
      e.weight = static_cast<double>(lo + weight_rng.below(hi - lo + 1)) / 4.0;
    }
    edges.push_back(std::move(e));
  }
  return TemporalGraph(spec.n_vertices, spec.lifetime, std::move(edges));
}

/// Seeded vertex-weighted static graph on n vertices where each pair is an
/// edge with probability p. Weights on the quarter grid in [0.25, 10].
inline StaticGraph generate_static(std::uint64_t seed, std::size_t n, double edge_probability,
                                   bool weighted = true) {
  auto rng = Xoshiro256::for_phase(seed, detail::kPhaseStructure);
  StaticGraph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.chance(edge_probability)) g.add_edge(a, b);
    }
  }
  if (weighted) {
    auto wrng = Xoshiro256::for_phase(seed, detail::kPhaseWeights);
    std::vector<double> w(n);
    for (auto& x : w) x = static_cast<double>(1 + wrng.below(40)) / 4.0;
    g.set_weights(std::move(w));
  }
  return g;
}

}  // namespace tmatch
