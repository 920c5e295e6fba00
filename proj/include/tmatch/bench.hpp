#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "tmatch/detail/text.hpp"
#include "tmatch/generator.hpp"
#include "tmatch/solver.hpp"

namespace tmatch {

struct BenchInstance {
  GenSpec spec;
  SolveOptions options;
};

struct BenchRecord {
  std::size_t instance = 0;
  std::size_t repetition = 0;
  std::uint64_t seed = 0;
  Family family = Family::Tree;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  Time lifetime = 0;
  std::size_t max_degree = 0;
  int underlying_width = -1;
  std::size_t overlap_vertices = 0;
  std::size_t overlap_edges = 0;
  int decomposition_width = -1;
  int lift_bound = -1;
  std::size_t nice_nodes = 0;
  std::size_t join_nodes = 0;
  PhaseTimings timings;
  double weight = 0.0;
  std::size_t cardinality = 0;
};

inline constexpr const char* kBenchCsvHeader =
    "instance,repetition,seed,family,n,edges,lifetime,max_degree,underlying_width,"
    "overlap_vertices,overlap_edges,decomposition_width,lift_bound,nice_nodes,join_nodes,"
    "overlap_us,decompose_us,nice_us,dp_us,extract_us,total_us,weight,cardinality";

/// Grid file: one instance per line as whitespace-separated key=value pairs.
/// Keys: seed n lifetime max_degree family k drop edges density
/// max_intervals weights wmin wmax strategy lift. Unset keys keep defaults.
inline std::vector<BenchInstance> parse_bench_grid(std::istream& in) {
  std::vector<BenchInstance> grid;
  for (const auto& line : detail::content_lines(in)) {
    detail::LineCursor cur(line);
    BenchInstance inst;
    auto& s = inst.spec;
    while (!cur.at_end()) {
      std::size_t column = cur.column();
      std::string token(cur.word());
      auto eq = token.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorKind::Syntax, "expected key=value", line.number, column);
      }
      std::string key = token.substr(0, eq);
      std::string value = token.substr(eq + 1);
      detail::FieldValue v{value, line.number, column};
      if (key == "seed") s.seed = v.unsigned_integer();
      else if (key == "n") s.n_vertices = v.unsigned_integer();
      else if (key == "lifetime") s.lifetime = static_cast<Time>(v.unsigned_integer());
      else if (key == "max_degree") s.max_degree = v.unsigned_integer();
      else if (key == "k") s.k = v.unsigned_integer();
      else if (key == "drop") s.edge_drop_probability = v.real();
      else if (key == "edges") s.target_edges = v.unsigned_integer();
      else if (key == "density") s.interval_density = v.real();
      else if (key == "max_intervals") s.max_intervals_per_edge = v.unsigned_integer();
      else if (key == "wmin") s.weight_min = v.real();
      else if (key == "wmax") s.weight_max = v.real();
      else if (key == "weights") {
        if (value == "unit") s.weight_grid = WeightGrid::Unit;
        else if (value == "quarter") s.weight_grid = WeightGrid::Quarter;
        else v.fail("weights must be unit or quarter");
      } else if (key == "family") {
        if (value == "tree") s.family = Family::Tree;
        else if (value == "star") s.family = Family::Star;
        else if (value == "partial-k-tree") s.family = Family::PartialKTree;
        else if (value == "bounded-degree-random") s.family = Family::BoundedDegreeRandom;
        else v.fail("unknown family");
      } else if (key == "strategy") {
        if (value == "min-fill") inst.options.strategy = DecompositionStrategy::MinFill;
        else if (value == "min-degree") inst.options.strategy = DecompositionStrategy::MinDegree;
        else if (value == "exact") inst.options.strategy = DecompositionStrategy::Exact;
        else v.fail("unknown strategy");
      } else if (key == "lift") {
        inst.options.lift = v.unsigned_integer() != 0;
      } else {
        v.fail("unknown key '" + key + "'");
      }
    }
    grid.push_back(inst);
  }
  return grid;
}

inline BenchRecord run_bench_instance(const BenchInstance& inst, std::size_t index,
                                      std::size_t repetition) {
  auto g = generate(inst.spec);
  auto report = solve(g, inst.options);
  auto gu = underlying_graph(g);
  int wu = report.underlying_width.value_or(
      decompose_heuristic(gu, EliminationHeuristic::MinFill).width());

  BenchRecord r;
  r.instance = index;
  r.repetition = repetition;
  r.seed = inst.spec.seed;
  r.family = inst.spec.family;
  r.n_vertices = g.num_vertices();
  r.n_edges = g.num_edges();
  r.lifetime = g.lifetime();
  r.max_degree = gu.max_degree();
  r.underlying_width = wu;
  r.overlap_vertices = report.overlap_vertices;
  r.overlap_edges = report.overlap_edges;
  r.decomposition_width = report.decomposition_width;
  r.lift_bound = (wu + 1) * static_cast<int>(r.max_degree) - 1;
  r.nice_nodes = report.nice_nodes;
  r.join_nodes = report.join_nodes;
  r.timings = report.timings;
  r.weight = report.matching.total_weight;
  r.cardinality = report.matching.size();
  return r;
}

/// Runs every (instance, repetition) pair, optionally on `jobs` threads.
/// Output order is by instance, then repetition, independent of scheduling.
inline std::vector<BenchRecord> run_bench(const std::vector<BenchInstance>& grid,
                                          std::size_t repetitions, std::size_t jobs = 1) {
  const std::size_t total = grid.size() * repetitions;
  std::vector<BenchRecord> records(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        records[i] = run_bench_instance(grid[i / repetitions], i / repetitions, i % repetitions);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, total));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.instance << ',' << r.repetition << ',' << r.seed << ',' << to_string(r.family) << ','
        << r.n_vertices << ',' << r.n_edges << ',' << r.lifetime << ',' << r.max_degree << ','
        << r.underlying_width << ',' << r.overlap_vertices << ',' << r.overlap_edges << ','
        << r.decomposition_width << ',' << r.lift_bound << ',' << r.nice_nodes << ','
        << r.join_nodes << ',' << r.timings.overlap_us << ',' << r.timings.decompose_us << ','
        << r.timings.nice_us << ',' << r.timings.dp_us << ',' << r.timings.extract_us << ','
        << r.timings.total_us() << ',' << detail::format_real(r.weight) << ',' << r.cardinality
        << '\n';
  }
}

}  // namespace tmatch
