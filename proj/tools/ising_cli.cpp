#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ising/anneal.hpp"
#include "ising/bench.hpp"
#include "ising/errors.hpp"
#include "ising/evaluate.hpp"
#include "ising/model.hpp"

namespace {

using namespace ising;

// Exact decimal -> rational, e.g. "0.5" -> 1/2, "1250" -> 1250/1.
std::pair<std::int64_t, std::int64_t> parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
    negative = text[pos++] == '-';
  std::int64_t num = 0, den = 1;
  bool any = false, frac = false;
  for (; pos < text.size(); pos++) {
    char c = text[pos];
    if (c == '.') {
      if (frac) throw config_error("bad decimal \"" + text + "\"");
      frac = true;
      continue;
    }
    if (c < '0' || c > '9') throw config_error("bad decimal \"" + text + "\"");
    num = num * 10 + (c - '0');
    if (frac) den *= 10;
    any = true;
  }
  if (!any) throw config_error("bad decimal \"" + text + "\"");
  std::int64_t g = std::gcd(num, den);
  if (g > 1) { num /= g; den /= g; }
  return {negative ? -num : num, den};
}

Coefficients coefficients_from_flags(const std::string& a_text,
                                     const std::string& b_text) {
  auto [an, ad] = parse_decimal(a_text);
  auto [bn, bd] = parse_decimal(b_text);
  if (an <= 0 || bn <= 0) throw config_error("coefficients must be positive");
  // common denominator
  std::int64_t l = ad / std::gcd(ad, bd) * bd;
  Coefficients c{an * (l / ad), bn * (l / bd), l};
  std::int64_t g = std::gcd(std::gcd(c.a_num, c.b_num), c.denom);
  c.a_num /= g; c.b_num /= g; c.denom /= g;
  return c;
}

struct SolveFlags {
  std::string algorithm = "gdi";
  std::int32_t sweeps = 1000;
  double flip_fraction = -1.0; // <0: strategy default
  double decay = 0.99;
  std::string coeff_a = "1";
  std::string coeff_b = "4";
  std::uint64_t seed = 1;
  std::int32_t runs = 1;
  std::int32_t workers = 0;
  bool deterministic = false;
  std::string trace_path;
  bool unit_weights = false;
};

void add_solver_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--algorithm", f.algorithm, "Annealing strategy")
      ->check(CLI::IsMember({"standard", "gdi"}))
      ->capture_default_str();
  cmd->add_option("--sweeps", f.sweeps, "Update sweeps per run")
      ->capture_default_str();
  cmd->add_option("--flip-fraction", f.flip_fraction,
                  "Initial random-flip probability (default 0.04 for gdi, "
                  "0.20 for standard)");
  cmd->add_option("--decay", f.decay, "Per-sweep flip-probability decay")
      ->capture_default_str();
  cmd->add_option("--coeff-a", f.coeff_a, "Balance penalty coefficient A")
      ->capture_default_str();
  cmd->add_option("--coeff-b", f.coeff_b, "Cut penalty coefficient B")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Base random seed (run r uses seed+r)")
      ->capture_default_str();
  cmd->add_option("--workers", f.workers, "Worker threads (0 = hardware)")
      ->envname("ISING_WORKERS")
      ->capture_default_str();
  cmd->add_flag("--deterministic", f.deterministic,
                "Sequential single-worker mode, bit-reproducible per seed");
  cmd->add_flag("--unit-weights", f.unit_weights,
                "Force every edge weight to 1");
}

AnnealParams params_from_flags(const SolveFlags& f, std::uint64_t seed) {
  AnnealParams p;
  p.strategy = strategy_from_string(f.algorithm);
  p.sweeps = f.sweeps;
  p.flip_fraction0 = f.flip_fraction >= 0.0
                         ? f.flip_fraction
                         : (p.strategy == Strategy::standard ? 0.20 : 0.04);
  p.decay_rate = f.decay;
  p.workers = f.workers;
  p.deterministic = f.deterministic;
  p.seed = seed;
  return p;
}

void write_trace_csv(const std::string& path,
                     const std::vector<TraceRecord>& trace) {
  std::ofstream out(path);
  if (!out) throw config_error("cannot write trace file " + path);
  out << "sweep,hamiltonian,cut,imbalance,flip_probability,seconds\n";
  for (std::size_t k = 0; k < trace.size(); k++) {
    const TraceRecord& t = trace[k];
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu,%.10g,%lld,%lld,%.10g,%.6g\n", k,
                  t.hamiltonian, static_cast<long long>(t.cut),
                  static_cast<long long>(t.imbalance), t.flip_probability,
                  t.seconds);
    out << buf;
  }
}

int run_solve(const std::string& path, const SolveFlags& flags, int verbosity) {
  Graph graph = Graph::parse_gset_file(path);
  if (flags.unit_weights) graph = graph.with_unit_weights();
  if (verbosity > 0)
    std::cerr << "parsed " << path << ": " << graph.num_nodes() << " nodes, "
              << graph.num_edges() << " edges, max degree "
              << graph.max_degree() << "\n";

  MinCutProblem problem = MinCutProblem::make_unchecked(
      graph, coefficients_from_flags(flags.coeff_a, flags.coeff_b));
  if (flags.runs < 1) throw config_error("--runs must be >= 1");

  std::optional<PartitionScore> best;
  std::vector<TraceRecord> best_trace;
  std::uint64_t best_seed = 0;
  double best_seconds = 0.0;
  for (std::int32_t r = 0; r < flags.runs; r++) {
    const std::uint64_t seed = flags.seed + static_cast<std::uint64_t>(r);
    AnnealParams params = params_from_flags(flags, seed);
    auto t0 = std::chrono::steady_clock::now();
    AnnealResult res = anneal(problem, params);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    PartitionScore sc = score(problem, res.state);
    if (verbosity > 0)
      std::cerr << "run " << r << " seed " << seed << ": cut " << sc.cut
                << " imbalance " << sc.imbalance << " (" << secs << "s)\n";
    if (!best || sc.hamiltonian_scaled < best->hamiltonian_scaled) {
      best = sc;
      best_seed = seed;
      best_seconds = secs;
      best_trace = std::move(res.trace);
    }
  }

  if (!flags.trace_path.empty()) write_trace_csv(flags.trace_path, best_trace);

  nlohmann::ordered_json out;
  out["cut"] = best->cut;
  out["imbalance"] = best->imbalance;
  out["hamiltonian"] = best->hamiltonian;
  out["seconds"] = best_seconds;
  out["strategy"] = flags.algorithm;
  out["seed"] = best_seed;
  std::cout << out.dump() << "\n";
  return 0;
}

int run_oracle_check(const std::string& path, const SolveFlags& flags,
                     std::int64_t max_imbalance, int verbosity) {
  Graph graph = Graph::parse_gset_file(path);
  if (flags.unit_weights) graph = graph.with_unit_weights();
  if (graph.num_nodes() > kOracleMaxNodes)
    throw capacity_error("oracle-check needs N <= " +
                         std::to_string(kOracleMaxNodes) + ", got " +
                         std::to_string(graph.num_nodes()));
  if (max_imbalance < 0) max_imbalance = graph.num_nodes() % 2;

  OracleResult oracle = brute_force_balanced_mincut(graph, max_imbalance);

  MinCutProblem problem = MinCutProblem::make_unchecked(
      graph, coefficients_from_flags(flags.coeff_a, flags.coeff_b));
  std::optional<std::int64_t> best_feasible_cut;
  for (std::int32_t r = 0; r < flags.runs; r++) {
    AnnealParams params =
        params_from_flags(flags, flags.seed + static_cast<std::uint64_t>(r));
    AnnealResult res = anneal(problem, params);
    std::int64_t cut = cut_value(graph, res.state);
    std::int64_t imb = imbalance(res.state);
    if (verbosity > 0)
      std::cerr << "run " << r << ": cut " << cut << " imbalance " << imb << "\n";
    if (imb <= max_imbalance &&
        (!best_feasible_cut || cut < *best_feasible_cut))
      best_feasible_cut = cut;
  }

  std::cout << "oracle_cut=" << oracle.cut
            << " max_imbalance=" << max_imbalance << "\n";
  if (best_feasible_cut)
    std::cout << "annealer_cut=" << *best_feasible_cut << "\n";
  else
    std::cout << "annealer_cut=none (no run met the imbalance bound)\n";
  const bool pass = best_feasible_cut && *best_feasible_cut == oracle.cut;
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int run_bench(const BenchConfig& config, const std::string& out_path,
              const std::string& plot_prefix) {
  std::vector<RunReport> reports = run_benchmark(config);
  std::vector<ExternalRow> external;
  if (config.external_results_path)
    external = load_external_results_file(*config.external_results_path);

  std::string body = config.format == OutputFormat::json
                         ? reports_to_json(reports)
                         : reports_to_csv(reports);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) throw config_error("cannot write " + out_path);
    out << body;
  }

  if (!plot_prefix.empty()) {
    PlotData plot = emit_plot_data(reports, external);
    std::ofstream times(plot_prefix + ".times.tsv");
    std::ofstream cuts(plot_prefix + ".cuts.tsv");
    if (!times || !cuts)
      throw config_error("cannot write plot data at prefix " + plot_prefix);
    times << plot.timing_tsv;
    cuts << plot.cuts_tsv;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ising annealing solver for balanced min-cut graph partitioning"};
  app.require_subcommand(1);
  int verbosity = 0;
  app.add_flag("-v,--verbose", verbosity, "More diagnostics on stderr");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance, JSON on stdout");
  std::string solve_path;
  SolveFlags solve_flags;
  solve->add_option("graph", solve_path, "G-set format graph file")->required();
  add_solver_flags(solve, solve_flags);
  solve->add_option("--runs", solve_flags.runs, "Independent runs, best kept")
      ->capture_default_str();
  solve->add_option("--trace", solve_flags.trace_path,
                    "Write per-sweep CSV trace of the best run");

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmark harness, report on stdout");
  std::vector<std::string> bench_paths;
  SolveFlags bench_flags;
  bench_flags.runs = 10;
  std::vector<std::string> strategy_names{"gdi"};
  std::string format = "csv", external_path, out_path, plot_prefix;
  bool bench_flip_set = false, bench_sweeps_set = false, bench_decay_set = false;
  bool bench_coeff_set = false;
  bench->add_option("graphs", bench_paths, "G-set format graph files")
      ->required();
  bench->add_option("--strategies", strategy_names, "Strategies to run")
      ->check(CLI::IsMember({"standard", "gdi"}))
      ->capture_default_str();
  bench->add_option("--runs", bench_flags.runs, "Runs per (graph, strategy)")
      ->capture_default_str();
  auto* opt_sweeps = bench->add_option("--sweeps", bench_flags.sweeps,
                                       "Override sweeps (default 1000)");
  auto* opt_flip = bench->add_option("--flip-fraction", bench_flags.flip_fraction,
                                     "Override initial flip probability");
  auto* opt_decay =
      bench->add_option("--decay", bench_flags.decay, "Override decay rate");
  auto* opt_ca = bench->add_option("--coeff-a", bench_flags.coeff_a,
                                   "Balance penalty coefficient A");
  auto* opt_cb = bench->add_option("--coeff-b", bench_flags.coeff_b,
                                   "Cut penalty coefficient B");
  bench->add_option("--workers", bench_flags.workers,
                    "In-run worker threads (default: deterministic runs, "
                    "parallel across runs)")
      ->envname("ISING_WORKERS");
  bench->add_option("--seed", bench_flags.seed, "Base seed")
      ->capture_default_str();
  bench->add_flag("--unit-weights", bench_flags.unit_weights,
                  "Force every edge weight to 1");
  bench->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bench->add_option("--external", external_path,
                    "External results CSV (graph_id,cut,bal,time_seconds)");
  bench->add_option("--out", out_path, "Write report to file instead of stdout");
  bench->add_option("--plot-data", plot_prefix,
                    "Write <prefix>.times.tsv and <prefix>.cuts.tsv");

  // oracle-check
  auto* oracle = app.add_subcommand(
      "oracle-check", "Best-of-R anneal vs exhaustive optimum (N <= 24)");
  std::string oracle_path;
  SolveFlags oracle_flags;
  oracle_flags.runs = 20;
  std::int64_t max_imbalance = -1;
  oracle->add_option("graph", oracle_path, "G-set format graph file")->required();
  add_solver_flags(oracle, oracle_flags);
  oracle->add_option("--runs", oracle_flags.runs, "Annealer runs")
      ->capture_default_str();
  oracle->add_option("--max-imbalance", max_imbalance,
                     "Imbalance bound (default: N mod 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(solve_path, solve_flags, verbosity);
    if (oracle->parsed())
      return run_oracle_check(oracle_path, oracle_flags, max_imbalance,
                              verbosity);

    BenchConfig config;
    config.graph_paths = bench_paths;
    config.strategies.clear();
    for (const std::string& s : strategy_names)
      config.strategies.push_back(strategy_from_string(s));
    config.runs_per_graph = bench_flags.runs;
    config.base_seed = bench_flags.seed;
    config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    config.unit_weights = bench_flags.unit_weights;
    if (!external_path.empty()) config.external_results_path = external_path;
    bench_sweeps_set = opt_sweeps->count() > 0;
    bench_flip_set = opt_flip->count() > 0;
    bench_decay_set = opt_decay->count() > 0;
    bench_coeff_set = opt_ca->count() > 0 || opt_cb->count() > 0;
    if (bench_sweeps_set) config.overrides.sweeps = bench_flags.sweeps;
    if (bench_flip_set) config.overrides.flip_fraction0 = bench_flags.flip_fraction;
    if (bench_decay_set) config.overrides.decay_rate = bench_flags.decay;
    if (bench_flags.workers != 0) config.overrides.workers = bench_flags.workers;
    if (bench_coeff_set)
      config.overrides.coefficients =
          coefficients_from_flags(bench_flags.coeff_a, bench_flags.coeff_b);
    return run_bench(config, out_path, plot_prefix);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 1;
  }
}
