#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tmatch/detail/text.hpp"
#include "tmatch/error.hpp"
#include "tmatch/static_graph.hpp"

namespace tmatch {

using Time = std::int64_t;
using EdgeId = std::uint32_t;

/// Half-open time interval [start, finish).
struct Interval {
  Time start = 0;
  Time finish = 0;

  bool contains(Time t) const { return start <= t && t < finish; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct TemporalEdge {
  EdgeId id = 0;
  Vertex u = 0;
  Vertex v = 0;
  double weight = 0.0;
  std::vector<Interval> intervals;

  bool incident_to(Vertex x) const { return u == x || v == x; }
  bool active_at(Time t) const {
    return std::any_of(intervals.begin(), intervals.end(),
                       [t](const Interval& i) { return i.contains(t); });
  }

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

struct ValidationOptions {
  /// Reject edges carrying more than floor(T/2) intervals. Off by default:
  /// the independent-set reduction legitimately produces edges with adjacent
  /// unit intervals that exceed this count.
  bool strict_interval_cap = false;
};

namespace detail {

/// Normalizes (u < v, sorted intervals) and checks one edge in isolation.
inline void normalize_and_check_edge(TemporalEdge& e, std::size_t n_vertices, Time lifetime,
                                     const ValidationOptions& options) {
  if (e.u >= n_vertices || e.v >= n_vertices) {
    throw Error(ErrorKind::VertexOutOfRange, "endpoint out of range [0, " +
                                                 std::to_string(n_vertices) + ")");
  }
  if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self-loop on vertex " + std::to_string(e.u));
  if (!std::isfinite(e.weight)) throw Error(ErrorKind::Syntax, "weight must be finite");
  if (e.weight < 0.0) throw Error(ErrorKind::NegativeWeight, "edge weight must be >= 0");
  if (e.u > e.v) std::swap(e.u, e.v);
  if (e.intervals.empty()) throw Error(ErrorKind::MissingIntervals, "edge has no intervals");
  for (const auto& i : e.intervals) {
    if (i.start >= i.finish) {
      throw Error(ErrorKind::EmptyInterval, "interval (" + std::to_string(i.start) + "," +
                                                std::to_string(i.finish) + ") is empty");
    }
    if (i.start < 0 || i.finish > lifetime) {
      throw Error(ErrorKind::IntervalOutOfRange, "interval (" + std::to_string(i.start) + "," +
                                                     std::to_string(i.finish) +
                                                     ") outside [0, " + std::to_string(lifetime) +
                                                     "]");
    }
  }
  std::sort(e.intervals.begin(), e.intervals.end());
  for (std::size_t i = 1; i < e.intervals.size(); ++i) {
    if (e.intervals[i].start < e.intervals[i - 1].finish) {
      throw Error(ErrorKind::OverlappingIntervals, "intervals of one edge intersect");
    }
  }
  if (options.strict_interval_cap &&
      e.intervals.size() > static_cast<std::size_t>(lifetime / 2)) {
    throw Error(ErrorKind::TooManyIntervals,
                std::to_string(e.intervals.size()) + " intervals exceed floor(T/2)");
  }
}

}  // namespace detail

/// Edge-dynamic graph over a fixed vertex set 0..n-1 with lifetime T.
/// Edges are stored canonically: u < v, sorted by (u, v), and each edge's id
/// is its position in that order.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  TemporalGraph(std::size_t n_vertices, Time lifetime, std::vector<TemporalEdge> edges,
                const ValidationOptions& options = {})
      : n_vertices_(n_vertices), lifetime_(lifetime), edges_(std::move(edges)) {
    if (lifetime < 0) throw Error(ErrorKind::InvalidArgument, "lifetime must be >= 0");
    for (auto& e : edges_) detail::normalize_and_check_edge(e, n_vertices_, lifetime_, options);
    std::stable_sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i > 0 && edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
        throw Error(ErrorKind::DuplicatePair, "more than one edge between " +
                                                  std::to_string(edges_[i].u) + " and " +
                                                  std::to_string(edges_[i].v));
      }
      edges_[i].id = static_cast<EdgeId>(i);
    }
    incident_.assign(n_vertices_, {});
    for (const auto& e : edges_) {
      incident_[e.u].push_back(e.id);
      incident_[e.v].push_back(e.id);
    }
  }

  std::size_t num_vertices() const { return n_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  Time lifetime() const { return lifetime_; }

  const std::vector<TemporalEdge>& edges() const { return edges_; }

  const TemporalEdge& edge(EdgeId id) const {
    if (id >= edges_.size()) {
      throw Error(ErrorKind::UnknownEdge, "no edge with id " + std::to_string(id));
    }
    return edges_[id];
  }

  /// Ids of edges incident to `v`, ascending.
  std::span<const EdgeId> incident_edges(Vertex v) const { return incident_.at(v); }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(a, b),
                               [](const TemporalEdge& e, const std::pair<Vertex, Vertex>& key) {
                                 return std::pair(e.u, e.v) < key;
                               });
    if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
    return it->id;
  }

  /// Copy with every edge weight replaced by `weight`.
  TemporalGraph with_uniform_weights(double weight) const {
    auto edges = edges_;
    for (auto& e : edges) e.weight = weight;
    return TemporalGraph(n_vertices_, lifetime_, std::move(edges));
  }

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.n_vertices_ == b.n_vertices_ && a.lifetime_ == b.lifetime_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_vertices_ = 0;
  Time lifetime_ = 0;
  std::vector<TemporalEdge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Two edges overlap iff they share an endpoint and are simultaneously active
/// at some timestep. Intervals are intersected with a two-pointer merge.
inline bool edges_overlap(const TemporalEdge& a, const TemporalEdge& b) {
  bool share = a.incident_to(b.u) || a.incident_to(b.v);
  if (!share) return false;
  std::size_t i = 0, j = 0;
  while (i < a.intervals.size() && j < b.intervals.size()) {
    const auto& x = a.intervals[i];
    const auto& y = b.intervals[j];
    if (std::max(x.start, y.start) < std::min(x.finish, y.finish)) return true;
    if (x.finish <= y.finish) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

/// Static graph with one edge per temporal edge.
inline StaticGraph underlying_graph(const TemporalGraph& g) {
  StaticGraph out(g.num_vertices());
  for (const auto& e : g.edges()) {
    if (!e.intervals.empty()) out.add_edge(e.u, e.v);
  }
  return out;
}

/// True iff no two of the given edges overlap. Repeated ids count once.
inline bool verify_matching(const TemporalGraph& g, std::span<const EdgeId> ids) {
  std::vector<EdgeId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (EdgeId id : sorted) g.edge(id);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (edges_overlap(g.edge(sorted[i]), g.edge(sorted[j]))) return false;
    }
  }
  return true;
}

/// Reads the line-oriented temporal graph format:
///   <n_vertices> <lifetime>
///   <u> <v> <weight> (s1,f1) (s2,f2) ...
/// '#' lines are comments.
inline TemporalGraph parse_temporal_graph(std::istream& in, const ValidationOptions& options = {}) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(ErrorKind::Syntax, "missing header line", 1, 1);

  detail::LineCursor header(lines[0]);
  auto n = header.integer("vertex count");
  auto lifetime = header.integer("lifetime");
  header.expect_end();
  if (n < 0 || lifetime < 0) {
    throw Error(ErrorKind::Syntax, "header counts must be non-negative", lines[0].number, 1);
  }

  std::vector<TemporalEdge> edges;
  std::vector<std::size_t> line_of_edge;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineCursor cur(lines[i]);
    TemporalEdge e;
    auto u = cur.integer("endpoint u");
    auto v = cur.integer("endpoint v");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "endpoint out of range", lines[i].number, 1);
    }
    e.u = static_cast<Vertex>(u);
    e.v = static_cast<Vertex>(v);
    e.weight = cur.real("weight");
    while (!cur.at_end()) {
      cur.expect('(');
      Interval iv;
      iv.start = cur.integer("interval start");
      cur.expect(',');
      iv.finish = cur.integer("interval finish");
      cur.expect(')');
      e.intervals.push_back(iv);
    }
    try {
      detail::normalize_and_check_edge(e, static_cast<std::size_t>(n), lifetime, options);
    } catch (const Error& err) {
      throw Error(err.kind(), err.message(), lines[i].number);
    }
    edges.push_back(std::move(e));
    line_of_edge.push_back(lines[i].number);
  }

  // Report duplicates against the later of the two lines.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(edges[a].u, edges[a].v) < std::pair(edges[b].u, edges[b].v);
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& a = edges[order[k - 1]];
    const auto& b = edges[order[k]];
    if (a.u == b.u && a.v == b.v) {
      throw Error(ErrorKind::DuplicatePair,
                  "second edge between " + std::to_string(a.u) + " and " + std::to_string(a.v),
                  std::max(line_of_edge[order[k - 1]], line_of_edge[order[k]]));
    }
  }
  return TemporalGraph(static_cast<std::size_t>(n), lifetime, std::move(edges), options);
}

inline TemporalGraph parse_temporal_graph(const std::string& text,
                                          const ValidationOptions& options = {}) {
  std::istringstream in(text);
  return parse_temporal_graph(in, options);
}

/// Canonical form: edges by (u, v), intervals by start, shortest round-trip weights.
inline void serialize_temporal_graph(std::ostream& out, const TemporalGraph& g) {
  out << g.num_vertices() << ' ' << g.lifetime() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << detail::format_real(e.weight);
    for (const auto& i : e.intervals) out << " (" << i.start << ',' << i.finish << ')';
    out << '\n';
  }
}

inline std::string serialize_temporal_graph(const TemporalGraph& g) {
  std::ostringstream out;
  serialize_temporal_graph(out, g);
  return out.str();
}

}  // namespace tmatch
