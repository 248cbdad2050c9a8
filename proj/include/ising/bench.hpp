#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ising/anneal.hpp"
#include "ising/model.hpp"

namespace ising {

enum class OutputFormat { csv, json };

// Optional per-field overrides applied on top of default_params_for.
struct ParamOverrides {
  std::optional<std::int32_t> sweeps;
  std::optional<double> flip_fraction0;
  std::optional<double> decay_rate;
  std::optional<std::int32_t> workers; // setting this voids report determinism
  std::optional<Coefficients> coefficients;
};

struct BenchConfig {
  std::vector<std::string> graph_paths;
  std::vector<Strategy> strategies = {Strategy::gdi};
  std::int32_t runs_per_graph = 10;
  std::uint64_t base_seed = 1;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> external_results_path;
  ParamOverrides overrides;
  bool unit_weights = false;
};

// One row per (graph, strategy). Runs are seeded base_seed + run index and by
// default anneal deterministically (single worker) so identical configs give
// identical reports up to the wall-time fields; the harness parallelizes
// across runs instead.
struct RunReport {
  std::string graph_id;
  std::int32_t nodes = 0;
  std::int64_t edges = 0;
  double density = 0.0;
  Strategy strategy = Strategy::gdi;
  std::int64_t best_cut = 0;       // min over runs
  std::int64_t best_imbalance = 0; // min over runs
  double cut_mean = 0.0;
  std::int64_t cut_min = 0;
  std::int64_t cut_max = 0;
  std::vector<double> run_seconds; // wall time per run, anneal only
  std::vector<std::uint64_t> seeds;
  std::string error; // non-empty: unreadable/invalid graph, row kept
};

std::vector<RunReport> run_benchmark(const BenchConfig& config);

// External solver results ingested for comparison.
// CSV schema: graph_id,cut,bal,time_seconds (header required).
struct ExternalRow {
  std::string graph_id;
  std::int64_t cut;
  std::int64_t bal;
  double time_seconds;
};

std::vector<ExternalRow> load_external_results(std::istream& in);
std::vector<ExternalRow> load_external_results_file(const std::string& path);

std::string reports_to_csv(const std::vector<RunReport>& reports);
std::string reports_to_json(const std::vector<RunReport>& reports);

// Plot-ready tab-separated tables, rows sorted by density ascending:
//   timing_tsv: graph_id, density, mean anneal seconds per strategy
//   cuts_tsv:   graph_id, best cut per strategy, external cut when ingested
// Missing columns are marked "-".
struct PlotData {
  std::string timing_tsv;
  std::string cuts_tsv;
};

PlotData emit_plot_data(const std::vector<RunReport>& reports,
                        const std::vector<ExternalRow>& external = {});

} // namespace ising
