#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tmatch/detail/text.hpp"
#include "tmatch/error.hpp"

namespace tmatch {

using Vertex = std::uint32_t;

/// Simple undirected graph with sorted adjacency lists and optional
/// non-negative vertex weights (unit weight when absent).
class StaticGraph {
 public:
  StaticGraph() = default;
  explicit StaticGraph(std::size_t n_vertices) : adjacency_(n_vertices) {}

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return n_edges_; }

  void add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop on vertex " + std::to_string(a));
    if (has_edge(a, b)) {
      throw Error(ErrorKind::DuplicatePair,
                  "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    insert_sorted(adjacency_[a], b);
    insert_sorted(adjacency_[b], a);
    ++n_edges_;
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= num_vertices() || b >= num_vertices()) return false;
    if (adjacency_[a].size() > adjacency_[b].size()) std::swap(a, b);
    return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& row : adjacency_) best = std::max(best, row.size());
    return best;
  }

  /// All edges as (a, b) with a < b, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(n_edges_);
    for (Vertex a = 0; a < num_vertices(); ++a) {
      for (Vertex b : adjacency_[a]) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    return out;
  }

  bool weighted() const { return !weights_.empty(); }
  double weight(Vertex v) const { return weights_.empty() ? 1.0 : weights_.at(v); }
  const std::vector<double>& weights() const { return weights_; }

  void set_weights(std::vector<double> weights) {
    if (weights.size() != num_vertices()) {
      throw Error(ErrorKind::InvalidArgument, "weight vector size does not match vertex count");
    }
    for (double w : weights) {
      if (!(w >= 0.0)) throw Error(ErrorKind::NegativeWeight, "vertex weight must be >= 0");
    }
    weights_ = std::move(weights);
  }

  /// True iff `vertices` are pairwise non-adjacent. Duplicates are ignored.
  bool is_independent(std::span<const Vertex> vertices) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (vertices[i] != vertices[j] && has_edge(vertices[i], vertices[j])) return false;
      }
    }
    return true;
  }

  double total_weight(std::span<const Vertex> vertices) const {
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (Vertex v : sorted) sum += weight(v);
    return sum;
  }

  friend bool operator==(const StaticGraph&, const StaticGraph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v >= num_vertices()) {
      throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
  }

  static void insert_sorted(std::vector<Vertex>& row, Vertex v) {
    row.insert(std::lower_bound(row.begin(), row.end(), v), v);
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<double> weights_;
  std::size_t n_edges_ = 0;
};

/// Weighted static graph text format:
///   <n> <m>
///   v <id> <weight>     (one per vertex)
///   e <a> <b>           (one per edge)
inline void write_weighted_graph(std::ostream& out, const StaticGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "v " << v << ' ' << detail::format_real(g.weight(v)) << '\n';
  }
  for (auto [a, b] : g.edges()) out << "e " << a << ' ' << b << '\n';
}

inline StaticGraph read_weighted_graph(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(ErrorKind::Syntax, "missing header line");
  detail::LineCursor header(lines[0]);
  auto n = header.integer("vertex count");
  auto m = header.integer("edge count");
  header.expect_end();
  if (n < 0 || m < 0) throw Error(ErrorKind::Syntax, "negative count in header", lines[0].number);

  StaticGraph g(static_cast<std::size_t>(n));
  std::vector<double> weights(static_cast<std::size_t>(n), 1.0);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::size_t edges = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineCursor cur(lines[i]);
    auto tag = cur.word();
    auto vertex = [&](std::string_view what) {
      auto v = cur.integer(what);
      if (v < 0 || v >= n) {
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range",
                    lines[i].number);
      }
      return static_cast<Vertex>(v);
    };
    if (tag == "v") {
      auto v = vertex("vertex id");
      double w = cur.real("weight");
      cur.expect_end();
      if (w < 0) throw Error(ErrorKind::NegativeWeight, "negative vertex weight", lines[i].number);
      weights[v] = w;
      seen[v] = true;
    } else if (tag == "e") {
      auto a = vertex("endpoint");
      auto b = vertex("endpoint");
      cur.expect_end();
      try {
        g.add_edge(a, b);
      } catch (const Error& e) {
        throw Error(e.kind(), e.message(), lines[i].number);
      }
      ++edges;
    } else {
      throw Error(ErrorKind::Syntax, "expected 'v' or 'e' line", lines[i].number, 1);
    }
  }
  if (edges != static_cast<std::size_t>(m)) {
    throw Error(ErrorKind::Syntax, "header edge count does not match edge lines");
  }
  if (std::any_of(seen.begin(), seen.end(), [](bool s) { return s; })) g.set_weights(weights);
  return g;
}

/// Plain edge-list format used for independent-set instances:
///   <n>
///   <u> <v>   (one per edge)
inline StaticGraph read_edge_list(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(ErrorKind::Syntax, "missing header line");
  detail::LineCursor header(lines[0]);
  auto n = header.integer("vertex count");
  header.expect_end();
  if (n < 0) throw Error(ErrorKind::Syntax, "negative vertex count", lines[0].number);
  StaticGraph g(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineCursor cur(lines[i]);
    auto a = cur.integer("endpoint");
    auto b = cur.integer("endpoint");
    cur.expect_end();
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "endpoint out of range", lines[i].number);
    }
    try {
      g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    } catch (const Error& e) {
      throw Error(e.kind(), e.message(), lines[i].number);
    }
  }
  return g;
}

inline void write_edge_list(std::ostream& out, const StaticGraph& g) {
  out << g.num_vertices() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

}  // namespace tmatch
