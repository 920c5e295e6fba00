#pragma once

#include <chrono>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tmatch/detail/text.hpp"
#include "tmatch/mwis.hpp"
#include "tmatch/overlap_graph.hpp"
#include "tmatch/temporal_graph.hpp"
#include "tmatch/timed_matching.hpp"
#include "tmatch/tree_decomposition.hpp"

namespace tmatch {

enum class DecompositionStrategy { MinFill, MinDegree, Exact };

inline std::string_view to_string(DecompositionStrategy s) {
  switch (s) {
    case DecompositionStrategy::MinFill: return "min-fill";
    case DecompositionStrategy::MinDegree: return "min-degree";
    case DecompositionStrategy::Exact: return "exact";
  }
  return "unknown";
}

struct SolveOptions {
  DecompositionStrategy strategy = DecompositionStrategy::MinFill;
  /// Decompose the underlying graph and lift it to the overlap graph instead
  /// of decomposing the overlap graph directly.
  bool lift = false;
  /// Expansion budget for the exact strategy; on exhaustion min-fill is used.
  std::uint64_t exact_budget = 2'000'000;
};

/// Microseconds per phase, monotonic clock.
struct PhaseTimings {
  std::int64_t overlap_us = 0;
  std::int64_t decompose_us = 0;
  std::int64_t nice_us = 0;
  std::int64_t dp_us = 0;
  std::int64_t extract_us = 0;

  std::int64_t total_us() const { return overlap_us + decompose_us + nice_us + dp_us + extract_us; }
};

struct SolveReport {
  TimedMatching matching;
  double mwis_weight = 0.0;
  std::size_t overlap_vertices = 0;
  std::size_t overlap_edges = 0;
  std::size_t underlying_max_degree = 0;
  /// Width of the decomposition the DP ran on.
  int decomposition_width = -1;
  /// Set with `lift`: width of the underlying-graph decomposition, of a
  /// direct overlap-graph decomposition, and the bound (w_U + 1) * maxdeg - 1.
  std::optional<int> underlying_width;
  std::optional<int> direct_width;
  std::optional<int> lift_bound;
  bool exact_fell_back = false;
  std::size_t decomposition_nodes = 0;
  std::size_t nice_nodes = 0;
  std::size_t join_nodes = 0;
  MwisStats dp_stats;
  PhaseTimings timings;
};

namespace detail {

class PhaseClock {
 public:
  std::int64_t lap() {
    auto now = std::chrono::steady_clock::now();
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(now - last_).count();
    last_ = now;
    return us;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline TreeDecomposition decompose_with(const StaticGraph& g, const SolveOptions& options,
                                        bool& fell_back) {
  switch (options.strategy) {
    case DecompositionStrategy::MinFill:
      return decompose_heuristic(g, EliminationHeuristic::MinFill);
    case DecompositionStrategy::MinDegree:
      return decompose_heuristic(g, EliminationHeuristic::MinDegree);
    case DecompositionStrategy::Exact:
      if (g.num_vertices() <= 64) {
        int any_width = static_cast<int>(g.num_vertices()) - 1;
        auto exact = decompose_exact(g, any_width, options.exact_budget);
        if (exact.status == ExactStatus::Found) return std::move(*exact.decomposition);
      }
      fell_back = true;
      return decompose_heuristic(g, EliminationHeuristic::MinFill);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown decomposition strategy");
}

}  // namespace detail

/// Maximum weighted 0-1 timed matching: overlap graph, tree decomposition,
/// nice form, MWIS dynamic program, map back to edges.
inline SolveReport solve(const TemporalGraph& g, const SolveOptions& options = {}) {
  SolveReport report;
  detail::PhaseClock clock;

  auto og = build_overlap_graph(g);
  report.overlap_vertices = og.graph.num_vertices();
  report.overlap_edges = og.graph.num_edges();
  report.timings.overlap_us = clock.lap();

  TreeDecomposition td;
  if (options.lift) {
    auto gu = underlying_graph(g);
    report.underlying_max_degree = gu.max_degree();
    auto td_u = detail::decompose_with(gu, options, report.exact_fell_back);
    td = lift_decomposition(td_u, g, og);
    report.underlying_width = td_u.width();
    report.lift_bound =
        (td_u.width() + 1) * static_cast<int>(report.underlying_max_degree) - 1;
    if (td.width() > *report.lift_bound) {
      throw Error(ErrorKind::InvalidDecomposition, "lifted width exceeds (w+1)*maxdeg-1");
    }
    bool unused = false;
    report.direct_width = detail::decompose_with(og.graph, options, unused).width();
  } else {
    report.underlying_max_degree = underlying_graph(g).max_degree();
    td = detail::decompose_with(og.graph, options, report.exact_fell_back);
  }
  report.decomposition_width = td.width();
  report.decomposition_nodes = td.num_nodes();
  report.timings.decompose_us = clock.lap();

  auto nice = make_nice(td);
  report.nice_nodes = nice.nodes.size();
  report.join_nodes = nice.count(NiceKind::Join);
  report.timings.nice_us = clock.lap();

  auto mwis = mwis_treedp(og.graph, nice, &report.dp_stats);
  report.mwis_weight = mwis.weight;
  report.timings.dp_us = clock.lap();

  report.matching = matching_from_independent_set(g, og, mwis.solution);
  report.timings.extract_us = clock.lap();
  return report;
}

/// Maximum cardinality 0-1 timed matching: solve with unit weights.
inline SolveReport max_cardinality_solve(const TemporalGraph& g, const SolveOptions& options = {}) {
  return solve(g.with_uniform_weights(1.0), options);
}

inline constexpr std::size_t kMatchingBruteforceLimit = 20;

/// Exhaustive oracle over all edge subsets. Conflicts are found by scanning
/// every timestep rather than intersecting intervals.
inline TimedMatching matching_bruteforce(const TemporalGraph& g) {
  const std::size_t m = g.num_edges();
  if (m > kMatchingBruteforceLimit) {
    throw Error(ErrorKind::SizeLimit, "brute-force matching is limited to " +
                                          std::to_string(kMatchingBruteforceLimit) + " edges");
  }
  std::vector<std::uint32_t> conflicts(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& a = g.edges()[i];
      const auto& b = g.edges()[j];
      if (!(a.incident_to(b.u) || a.incident_to(b.v))) continue;
      for (Time t = 0; t < g.lifetime(); ++t) {
        if (a.active_at(t) && b.active_at(t)) {
          conflicts[i] |= std::uint32_t{1} << j;
          conflicts[j] |= std::uint32_t{1} << i;
          break;
        }
      }
    }
  }
  TimedMatching best;
  std::vector<EdgeId> ids;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    bool valid = true;
    double weight = 0.0;
    ids.clear();
    for (std::size_t i = 0; i < m && valid; ++i) {
      if (!(mask >> i & 1)) continue;
      valid = (conflicts[i] & mask) == 0;
      weight += g.edges()[i].weight;
      ids.push_back(static_cast<EdgeId>(i));
    }
    if (!valid) continue;
    if (weight > best.total_weight ||
        (weight == best.total_weight && detail::lexicographically_smaller(ids, best.edge_ids))) {
      best.total_weight = weight;
      best.edge_ids = ids;
    }
  }
  return best;
}

/// Text form: "weight <w>" then one "edge <u> <v>" line per edge, by edge id.
inline void write_matching(std::ostream& out, const TemporalGraph& g, const TimedMatching& m) {
  out << "weight " << detail::format_real(m.total_weight) << '\n';
  for (EdgeId id : m.edge_ids) {
    const auto& e = g.edge(id);
    out << "edge " << e.u << ' ' << e.v << '\n';
  }
}

/// Reads the text form back, resolving edges against `g` and checking that
/// the stated weight matches.
inline TimedMatching read_matching(std::istream& in, const TemporalGraph& g) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw Error(ErrorKind::Syntax, "missing weight line");
  detail::LineCursor head(lines[0]);
  if (head.word() != "weight") throw Error(ErrorKind::Syntax, "expected 'weight'", lines[0].number, 1);
  double stated = head.real("weight");
  head.expect_end();
  std::vector<EdgeId> ids;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineCursor cur(lines[i]);
    if (cur.word() != "edge") throw Error(ErrorKind::Syntax, "expected 'edge'", lines[i].number, 1);
    auto u = cur.integer("endpoint");
    auto v = cur.integer("endpoint");
    cur.expect_end();
    std::optional<EdgeId> id;
    if (u >= 0 && v >= 0) id = g.find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!id) throw Error(ErrorKind::UnknownEdge, "no such edge in the graph", lines[i].number);
    ids.push_back(*id);
  }
  auto m = make_timed_matching(g, ids);
  if (m.total_weight != stated) {
    throw Error(ErrorKind::InvalidMatching, "stated weight differs from edge weights");
  }
  return m;
}

}  // namespace tmatch
