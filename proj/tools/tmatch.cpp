// tmatch: command-line front end for the 0-1 timed matching toolkit.
//
// Exit codes: 0 success, 1 usage, 2 input format, 3 infeasible or size limit.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmatch/tmatch.hpp"

namespace {

using tmatch::ErrorKind;

enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2, kInfeasible = 3 };

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return kUsage;
    case ErrorKind::SizeLimit:
    case ErrorKind::InfeasibleSpec: return kInfeasible;
    default: return kInput;
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tmatch::Error(ErrorKind::Syntax, "cannot open '" + path + "'");
  return in;
}

/// Writes to `path`, or stdout when it is empty or "-".
void with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw tmatch::Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  body(out);
}

tmatch::TemporalGraph load_temporal(const std::string& path, bool strict = false) {
  auto in = open_input(path);
  return tmatch::parse_temporal_graph(in, {.strict_interval_cap = strict});
}

nlohmann::json matching_json(const tmatch::TemporalGraph& g, const tmatch::TimedMatching& m) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto id : m.edge_ids) edges.push_back({g.edge(id).u, g.edge(id).v});
  return {{"weight", m.total_weight},
          {"cardinality", m.size()},
          {"edge_ids", m.edge_ids},
          {"edges", edges}};
}

nlohmann::json report_json(const tmatch::TemporalGraph& g, const tmatch::SolveReport& r) {
  auto out = matching_json(g, r.matching);
  out["overlap_vertices"] = r.overlap_vertices;
  out["overlap_edges"] = r.overlap_edges;
  out["underlying_max_degree"] = r.underlying_max_degree;
  out["decomposition_width"] = r.decomposition_width;
  if (r.underlying_width) out["underlying_width"] = *r.underlying_width;
  if (r.direct_width) out["direct_width"] = *r.direct_width;
  if (r.lift_bound) out["lift_bound"] = *r.lift_bound;
  out["exact_fell_back"] = r.exact_fell_back;
  out["nice_nodes"] = r.nice_nodes;
  out["join_nodes"] = r.join_nodes;
  out["max_table_entries"] = r.dp_stats.max_table_entries;
  out["timings_us"] = {{"overlap", r.timings.overlap_us},   {"decompose", r.timings.decompose_us},
                       {"nice", r.timings.nice_us},         {"dp", r.timings.dp_us},
                       {"extract", r.timings.extract_us},   {"total", r.timings.total_us()}};
  return out;
}

const std::map<std::string, tmatch::DecompositionStrategy> kStrategies{
    {"min-fill", tmatch::DecompositionStrategy::MinFill},
    {"min-degree", tmatch::DecompositionStrategy::MinDegree},
    {"exact", tmatch::DecompositionStrategy::Exact}};

const std::map<std::string, tmatch::Family> kFamilies{
    {"tree", tmatch::Family::Tree},
    {"star", tmatch::Family::Star},
    {"partial-k-tree", tmatch::Family::PartialKTree},
    {"bounded-degree-random", tmatch::Family::BoundedDegreeRandom}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum weighted 0-1 timed matching on temporal graphs"};
  app.require_subcommand(1);

  // solve
  std::string solve_input, solve_output;
  std::string strategy_name = "min-fill";
  bool lift = false, unit_weights = false, solve_json = false;
  std::uint64_t exact_budget = tmatch::SolveOptions{}.exact_budget;
  auto* solve_cmd = app.add_subcommand("solve", "Solve via overlap graph, tree decomposition and MWIS");
  solve_cmd->add_option("input", solve_input, "Temporal graph file")->required();
  solve_cmd->add_option("--strategy", strategy_name, "min-fill, min-degree or exact")
      ->check(CLI::IsMember(kStrategies));
  solve_cmd->add_flag("--lift", lift, "Decompose the underlying graph and lift it");
  solve_cmd->add_flag("--unit-weights", unit_weights, "Maximise cardinality instead of weight");
  solve_cmd->add_option("--exact-budget", exact_budget, "Search expansions for --strategy exact");
  solve_cmd->add_option("-o,--output", solve_output, "Matching output file (default stdout)");
  solve_cmd->add_flag("--json", solve_json, "Structured JSON output with solve statistics");

  // oracle
  std::string oracle_input, oracle_output;
  bool oracle_json = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force maximum matching (at most 20 edges)");
  oracle_cmd->add_option("input", oracle_input, "Temporal graph file")->required();
  oracle_cmd->add_option("-o,--output", oracle_output, "Matching output file (default stdout)");
  oracle_cmd->add_flag("--json", oracle_json, "JSON output");

  // reduce
  std::string reduce_input, reduce_output, reduce_labels;
  std::size_t reduce_k = 0;
  auto* reduce_cmd = app.add_subcommand("reduce", "Independent set instance to temporal star");
  reduce_cmd->add_option("input", reduce_input, "Static graph edge list")->required();
  reduce_cmd->add_option("--k", reduce_k, "Independent set size parameter")->required();
  reduce_cmd->add_option("-o,--output", reduce_output, "Temporal graph output file")->required();
  reduce_cmd->add_option("--labels", reduce_labels, "Label sidecar (default <output>.labels)");

  // generate
  tmatch::GenSpec spec;
  std::string gen_output;
  std::string family_name = "tree", weights_name = "quarter";
  auto* gen_cmd = app.add_subcommand("generate", "Seeded random temporal graph");
  gen_cmd->add_option("--seed", spec.seed);
  gen_cmd->add_option("--n", spec.n_vertices, "Vertex count");
  gen_cmd->add_option("--lifetime", spec.lifetime);
  gen_cmd->add_option("--max-degree", spec.max_degree, "0 for uncapped");
  gen_cmd->add_option("--family", family_name, "tree, star, partial-k-tree or bounded-degree-random")
      ->check(CLI::IsMember(kFamilies));
  gen_cmd->add_option("--k", spec.k, "Partial k-tree width");
  gen_cmd->add_option("--drop", spec.edge_drop_probability, "Partial k-tree edge deletion probability");
  gen_cmd->add_option("--edges", spec.target_edges, "Bounded-degree-random edge target");
  gen_cmd->add_option("--density", spec.interval_density, "Per-slot activity probability");
  gen_cmd->add_option("--max-intervals", spec.max_intervals_per_edge);
  gen_cmd->add_option("--weights", weights_name, "unit or quarter")
      ->check(CLI::IsMember({"unit", "quarter"}));
  gen_cmd->add_option("--wmin", spec.weight_min);
  gen_cmd->add_option("--wmax", spec.weight_max);
  gen_cmd->add_option("-o,--output", gen_output, "Output file (default stdout)");

  // bench
  std::string bench_grid, bench_output;
  std::size_t repetitions = 1, jobs = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Run a grid of generated instances, emit CSV");
  bench_cmd->add_option("grid", bench_grid, "Grid file, one key=value instance per line")->required();
  bench_cmd->add_option("-r,--repetitions", repetitions)->check(CLI::PositiveNumber);
  bench_cmd->add_option("-j,--jobs", jobs)->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--output", bench_output, "CSV output (default stdout)");

  // validate
  std::string val_input, val_td, val_of = "overlap", val_matching, val_labels;
  bool strict = false;
  auto* val_cmd = app.add_subcommand("validate", "Check a temporal graph and optional companions");
  val_cmd->add_option("input", val_input, "Temporal graph file")->required();
  val_cmd->add_flag("--strict", strict, "Also enforce at most floor(T/2) intervals per edge");
  val_cmd->add_option("--td", val_td, "PACE tree decomposition to check");
  val_cmd->add_option("--of", val_of, "Graph the decomposition targets")
      ->check(CLI::IsMember({"overlap", "underlying"}));
  val_cmd->add_option("--matching", val_matching, "Matching file to check");
  val_cmd->add_option("--labels", val_labels, "Reduction label sidecar to check");

  // overlap
  std::string ov_input, ov_output;
  auto* ov_cmd = app.add_subcommand("overlap", "Dump the weighted edge-overlap graph");
  ov_cmd->add_option("input", ov_input, "Temporal graph file")->required();
  ov_cmd->add_option("-o,--output", ov_output, "Output file (default stdout)");

  // decompose
  std::string dec_input, dec_output, dec_of = "overlap";
  std::string dec_strategy_name = "min-fill";
  auto* dec_cmd = app.add_subcommand("decompose", "Export a PACE tree decomposition");
  dec_cmd->add_option("input", dec_input, "Temporal graph file")->required();
  dec_cmd->add_option("--of", dec_of, "Graph to decompose")->check(CLI::IsMember({"overlap", "underlying"}));
  dec_cmd->add_option("--strategy", dec_strategy_name, "min-fill, min-degree or exact")
      ->check(CLI::IsMember(kStrategies));
  dec_cmd->add_option("-o,--output", dec_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) {
      auto g = load_temporal(solve_input);
      tmatch::SolveOptions options{.strategy = kStrategies.at(strategy_name), .lift = lift, .exact_budget = exact_budget};
      auto report = unit_weights ? tmatch::max_cardinality_solve(g, options) : tmatch::solve(g, options);
      with_output(solve_output, [&](std::ostream& out) {
        if (solve_json) {
          out << report_json(g, report).dump(2) << '\n';
        } else {
          tmatch::write_matching(out, g, report.matching);
        }
      });
    } else if (*oracle_cmd) {
      auto g = load_temporal(oracle_input);
      auto m = tmatch::matching_bruteforce(g);
      with_output(oracle_output, [&](std::ostream& out) {
        if (oracle_json) {
          out << matching_json(g, m).dump(2) << '\n';
        } else {
          tmatch::write_matching(out, g, m);
        }
      });
    } else if (*reduce_cmd) {
      auto in = open_input(reduce_input);
      auto ri = tmatch::reduce_is_to_matching(tmatch::read_edge_list(in), reduce_k);
      with_output(reduce_output, [&](std::ostream& out) {
        out << "# reduced from " << reduce_input << ": k = " << ri.k << ", k' = " << ri.k_prime
            << ", centre vertex " << ri.center << '\n';
        tmatch::serialize_temporal_graph(out, ri.temporal);
      });
      with_output(reduce_labels.empty() ? reduce_output + ".labels" : reduce_labels,
                  [&](std::ostream& out) { tmatch::write_labels(out, ri); });
      std::cerr << "k = " << ri.k << ", k' = " << ri.k_prime << '\n';
    } else if (*gen_cmd) {
      spec.family = kFamilies.at(family_name);
      spec.weight_grid = weights_name == "unit" ? tmatch::WeightGrid::Unit : tmatch::WeightGrid::Quarter;
      auto g = tmatch::generate(spec);
      with_output(gen_output, [&](std::ostream& out) { tmatch::serialize_temporal_graph(out, g); });
    } else if (*bench_cmd) {
      auto in = open_input(bench_grid);
      auto grid = tmatch::parse_bench_grid(in);
      auto records = tmatch::run_bench(grid, repetitions, jobs);
      with_output(bench_output, [&](std::ostream& out) { tmatch::write_bench_csv(out, records); });
    } else if (*val_cmd) {
      auto g = load_temporal(val_input, strict);
      std::cout << "graph ok: " << g.num_vertices() << " vertices, " << g.num_edges()
                << " edges, lifetime " << g.lifetime() << '\n';
      bool ok = true;
      if (!val_td.empty()) {
        auto in = open_input(val_td);
        auto pace = tmatch::read_pace_decomposition(in);
        auto target = val_of == "overlap" ? tmatch::build_overlap_graph(g).graph
                                          : tmatch::underlying_graph(g);
        auto violations = tmatch::validate_decomposition(pace.decomposition, target);
        if (pace.n_vertices != target.num_vertices()) {
          violations.push_back({tmatch::ViolationKind::Structure, "vertex count differs from target graph", {}});
        }
        for (const auto& v : violations) {
          std::cout << "decomposition " << tmatch::to_string(v.kind) << ": " << v.message << '\n';
        }
        if (violations.empty()) {
          std::cout << "decomposition ok: width " << pace.decomposition.width() << '\n';
        }
        ok = ok && violations.empty();
      }
      if (!val_matching.empty()) {
        auto in = open_input(val_matching);
        auto m = tmatch::read_matching(in, g);
        std::cout << "matching ok: " << m.size() << " edges, weight "
                  << tmatch::detail::format_real(m.total_weight) << '\n';
      }
      if (!val_labels.empty()) {
        auto in = open_input(val_labels);
        auto ri = tmatch::read_labels(in, g);
        std::cout << "labels ok: " << ri.source.num_vertices() << " source vertices, "
                  << ri.m_edges() << " source edges\n";
      }
      if (!ok) return kInput;
    } else if (*ov_cmd) {
      auto og = tmatch::build_overlap_graph(load_temporal(ov_input));
      with_output(ov_output, [&](std::ostream& out) { tmatch::write_weighted_graph(out, og.graph); });
    } else if (*dec_cmd) {
      auto g = load_temporal(dec_input);
      auto target = dec_of == "overlap" ? tmatch::build_overlap_graph(g).graph : tmatch::underlying_graph(g);
      auto dec_strategy = kStrategies.at(dec_strategy_name);
      tmatch::TreeDecomposition td;
      if (dec_strategy == tmatch::DecompositionStrategy::Exact) {
        auto result = tmatch::decompose_exact(target, static_cast<int>(target.num_vertices()) - 1);
        if (result.status != tmatch::ExactStatus::Found) {
          std::cerr << "error: exact decomposition did not finish\n";
          return kInfeasible;
        }
        td = *result.decomposition;
      } else {
        td = tmatch::decompose_heuristic(target, dec_strategy == tmatch::DecompositionStrategy::MinFill
                                                     ? tmatch::EliminationHeuristic::MinFill
                                                     : tmatch::EliminationHeuristic::MinDegree);
      }
      with_output(dec_output, [&](std::ostream& out) {
        tmatch::write_pace_decomposition(out, td, target.num_vertices());
      });
    }
  } catch (const tmatch::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kOk;
}
