#include "ising/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ising/errors.hpp"
#include "ising/evaluate.hpp"

namespace ising {

namespace {

std::string path_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <typename T, typename Fn>
std::string join(const std::vector<T>& values, const Fn& fmt, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); i++) {
    if (i) out += sep;
    out += fmt(values[i]);
  }
  return out;
}

struct RunOutcome {
  std::int64_t cut;
  std::int64_t imbalance;
  double seconds;
};

} // namespace

std::vector<RunReport> run_benchmark(const BenchConfig& config) {
  if (config.runs_per_graph < 1)
    throw config_error("runs_per_graph must be >= 1");
  if (config.strategies.empty())
    throw config_error("at least one strategy must be selected");

  struct Job {
    std::size_t row;
    std::uint64_t seed;
    std::size_t run_index;
  };

  std::vector<RunReport> reports;
  std::vector<MinCutProblem> problems; // parallel to reports
  std::vector<AnnealParams> params_per_row;
  std::vector<Job> jobs;

  for (const std::string& path : config.graph_paths) {
    Graph graph;
    try {
      graph = Graph::parse_gset_file(path);
    } catch (const std::exception& e) {
      RunReport row;
      row.graph_id = path_stem(path);
      row.strategy = config.strategies.front();
      row.error = e.what();
      reports.push_back(std::move(row));
      continue; // per-graph error row, run continues
    }
    if (config.unit_weights) graph = graph.with_unit_weights();

    for (Strategy strategy : config.strategies) {
      RunReport row;
      row.graph_id = path_stem(path);
      row.nodes = graph.num_nodes();
      row.edges = graph.num_edges();
      row.density = graph.num_nodes() >= 2 ? density(graph) : 0.0;
      row.strategy = strategy;

      AnnealParams params = default_params_for(strategy, graph);
      if (config.overrides.sweeps) params.sweeps = *config.overrides.sweeps;
      if (config.overrides.flip_fraction0)
        params.flip_fraction0 = *config.overrides.flip_fraction0;
      if (config.overrides.decay_rate)
        params.decay_rate = *config.overrides.decay_rate;
      if (config.overrides.workers)
        params.workers = *config.overrides.workers;
      else
        params.deterministic = true; // reproducible rows; parallelism is across runs

      Coefficients coeffs = config.overrides.coefficients
                                ? *config.overrides.coefficients
                                : solver_default_coefficients();

      const std::size_t row_index = reports.size();
      for (std::int32_t r = 0; r < config.runs_per_graph; r++) {
        std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(r);
        row.seeds.push_back(seed);
        jobs.push_back({row_index, seed, static_cast<std::size_t>(r)});
      }
      row.run_seconds.resize(config.runs_per_graph, 0.0);
      reports.push_back(std::move(row));
      params_per_row.push_back(params);
      problems.push_back(MinCutProblem::make_unchecked(graph, coeffs));
    }
  }

  // Map report row -> dense problem index (error rows have none).
  std::vector<std::size_t> problem_of_row(reports.size(), SIZE_MAX);
  {
    std::size_t p = 0;
    for (std::size_t i = 0; i < reports.size(); i++)
      if (reports[i].error.empty()) problem_of_row[i] = p++;
  }

  std::vector<std::vector<RunOutcome>> outcomes(reports.size());
  for (std::size_t i = 0; i < reports.size(); i++)
    if (reports[i].error.empty())
      outcomes[i].resize(config.runs_per_graph);

  auto execute = [&](const Job& job) {
    const std::size_t p = problem_of_row[job.row];
    AnnealParams params = params_per_row[p];
    params.seed = job.seed;
    auto t0 = std::chrono::steady_clock::now();
    AnnealResult res = anneal(problems[p], params);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    outcomes[job.row][job.run_index] = {cut_value(problems[p].graph(), res.state),
                                        imbalance(res.state), secs};
  };

  if (config.overrides.workers) {
    // Each anneal owns its pool; keep runs sequential.
    for (const Job& job : jobs) execute(job);
  } else {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads =
        std::min<std::size_t>(hw, jobs.empty() ? 1 : jobs.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; t++)
      pool.emplace_back([&]() {
        for (;;) {
          std::size_t k = next.fetch_add(1);
          if (k >= jobs.size()) return;
          execute(jobs[k]);
        }
      });
  }

  for (std::size_t i = 0; i < reports.size(); i++) {
    RunReport& row = reports[i];
    if (!row.error.empty()) continue;
    const auto& runs = outcomes[i];
    row.best_cut = runs.front().cut;
    row.best_imbalance = runs.front().imbalance;
    row.cut_min = row.cut_max = runs.front().cut;
    double sum = 0;
    for (std::size_t r = 0; r < runs.size(); r++) {
      row.best_cut = std::min(row.best_cut, runs[r].cut);
      row.best_imbalance = std::min(row.best_imbalance, runs[r].imbalance);
      row.cut_min = std::min(row.cut_min, runs[r].cut);
      row.cut_max = std::max(row.cut_max, runs[r].cut);
      sum += static_cast<double>(runs[r].cut);
      row.run_seconds[r] = runs[r].seconds;
    }
    row.cut_mean = sum / static_cast<double>(runs.size());
  }

  std::stable_sort(reports.begin(), reports.end(),
                   [](const RunReport& a, const RunReport& b) {
                     if (a.error.empty() != b.error.empty())
                       return b.error.empty() ? false : true;
                     return a.density < b.density;
                   });
  return reports;
}

std::vector<ExternalRow> load_external_results(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("empty external results file");
  // strip BOM / CR
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  if (line != "graph_id,cut,bal,time_seconds")
    throw parse_error("external results header must be "
                      "\"graph_id,cut,bal,time_seconds\"",
                      1);
  std::vector<ExternalRow> rows;
  long line_no = 1;
  while (std::getline(in, line)) {
    line_no++;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string id, cut_s, bal_s, time_s;
    if (!std::getline(ls, id, ',') || !std::getline(ls, cut_s, ',') ||
        !std::getline(ls, bal_s, ',') || !std::getline(ls, time_s))
      throw parse_error("expected 4 comma-separated fields", line_no);
    try {
      rows.push_back({id, std::stoll(cut_s), std::stoll(bal_s), std::stod(time_s)});
    } catch (const std::exception&) {
      throw parse_error("bad numeric field", line_no);
    }
  }
  return rows;
}

std::vector<ExternalRow> load_external_results_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return load_external_results(in);
}

std::string reports_to_csv(const std::vector<RunReport>& reports) {
  std::string out =
      "graph_id,nodes,edges,density,strategy,best_cut,best_imbalance,"
      "cut_mean,cut_min,cut_max,time_mean_s,time_min_s,time_max_s,"
      "times_s,seeds,error\n";
  for (const RunReport& r : reports) {
    out += csv_quote(r.graph_id);
    out += ',';
    if (r.error.empty()) {
      double tmean = 0, tmin = 0, tmax = 0;
      if (!r.run_seconds.empty()) {
        tmin = tmax = r.run_seconds.front();
        for (double t : r.run_seconds) {
          tmean += t;
          tmin = std::min(tmin, t);
          tmax = std::max(tmax, t);
        }
        tmean /= static_cast<double>(r.run_seconds.size());
      }
      out += std::to_string(r.nodes) + ',' + std::to_string(r.edges) + ',' +
             fmt_double(r.density) + ',' + to_string(r.strategy) + ',' +
             std::to_string(r.best_cut) + ',' + std::to_string(r.best_imbalance) +
             ',' + fmt_double(r.cut_mean) + ',' + std::to_string(r.cut_min) +
             ',' + std::to_string(r.cut_max) + ',' + fmt_double(tmean) + ',' +
             fmt_double(tmin) + ',' + fmt_double(tmax) + ',' +
             csv_quote(join(r.run_seconds, fmt_double)) + ',' +
             csv_quote(join(r.seeds,
                            [](std::uint64_t s) { return std::to_string(s); })) +
             ",";
    } else {
      out += ",,,,,,,,,,,,,,";
      out += csv_quote(r.error);
    }
    out += '\n';
  }
  return out;
}

std::string reports_to_json(const std::vector<RunReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RunReport& r : reports) {
    nlohmann::ordered_json row;
    row["graph_id"] = r.graph_id;
    if (r.error.empty()) {
      row["nodes"] = r.nodes;
      row["edges"] = r.edges;
      row["density"] = r.density;
      row["strategy"] = to_string(r.strategy);
      row["best_cut"] = r.best_cut;
      row["best_imbalance"] = r.best_imbalance;
      row["cut_mean"] = r.cut_mean;
      row["cut_min"] = r.cut_min;
      row["cut_max"] = r.cut_max;
      row["times_s"] = r.run_seconds;
      row["seeds"] = r.seeds;
    } else {
      row["error"] = r.error;
    }
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

PlotData emit_plot_data(const std::vector<RunReport>& reports,
                        const std::vector<ExternalRow>& external) {
  struct Entry {
    double density = 0;
    std::optional<double> t_std, t_gdi;
    std::optional<std::int64_t> cut_std, cut_gdi;
  };
  std::map<std::string, Entry> by_graph;
  std::vector<std::string> order;
  for (const RunReport& r : reports) {
    if (!r.error.empty()) continue;
    auto [it, inserted] = by_graph.try_emplace(r.graph_id);
    if (inserted) order.push_back(r.graph_id);
    it->second.density = r.density;
    double tmean = 0;
    for (double t : r.run_seconds) tmean += t;
    if (!r.run_seconds.empty()) tmean /= static_cast<double>(r.run_seconds.size());
    if (r.strategy == Strategy::standard) {
      it->second.t_std = tmean;
      it->second.cut_std = r.best_cut;
    } else {
      it->second.t_gdi = tmean;
      it->second.cut_gdi = r.best_cut;
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](const std::string& a, const std::string& b) {
                     return by_graph[a].density < by_graph[b].density;
                   });

  std::map<std::string, std::int64_t> external_cut;
  for (const ExternalRow& e : external) external_cut[e.graph_id] = e.cut;

  PlotData out;
  out.timing_tsv = "graph_id\tdensity\tt_standard_mean_s\tt_gdi_mean_s\n";
  out.cuts_tsv = "graph_id\tcut_standard\tcut_gdi\tcut_external\n";
  auto opt_t = [](const std::optional<double>& v) {
    return v ? fmt_double(*v) : std::string("-");
  };
  auto opt_c = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  for (const std::string& id : order) {
    const Entry& e = by_graph[id];
    out.timing_tsv += id + '\t' + fmt_double(e.density) + '\t' + opt_t(e.t_std) +
                      '\t' + opt_t(e.t_gdi) + '\n';
    auto ext = external_cut.find(id);
    out.cuts_tsv += id + '\t' + opt_c(e.cut_std) + '\t' + opt_c(e.cut_gdi) + '\t' +
                    (ext != external_cut.end() ? std::to_string(ext->second)
                                               : std::string("-")) +
                    '\n';
  }
  return out;
}

} // namespace ising
