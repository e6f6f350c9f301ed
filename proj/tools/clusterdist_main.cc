// Copyright 2026 The clusterdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// clusterdist: command-line front end.
//
//   clusterdist generate      --builtin G3 | --clusters K --size N --p-intra P --p-inter Q
//   clusterdist distances     --graph FILE [--measure M|all] [--pairs FILE]
//   clusterdist summarize     --graph FILE --clusters FILE [--global]
//   clusterdist correlate     --input per_cluster.csv [--pooling concat|mean]
//   clusterdist experiment    --builtin | --config FILE [--seeds-per-graph S]
//   clusterdist export-matrix --graph FILE --measure M --output FILE
//
// Global flags: --seed, --output-dir, --threads.

#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "clusterdist/cluster_metrics.h"
#include "clusterdist/distances.h"
#include "clusterdist/experiment.h"
#include "clusterdist/io.h"
#include "clusterdist/parallel.h"
#include "clusterdist/ppm.h"
#include "clusterdist/stats.h"

namespace cd = clusterdist;
namespace fs = std::filesystem;

namespace {

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  fs::path output_dir = ".";
  std::size_t threads = 0;
};

// Writes to `path`, or stdout when it is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<cd::DistanceMeasure> measures_from(const std::string& name) {
  if (name == "all") return {cd::kAllMeasures.begin(), cd::kAllMeasures.end()};
  return {cd::parse_measure(name)};
}

std::string real(double x) { return fmt::format("{:.6g}", x); }

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::string builtin;
  std::size_t clusters = 0;
  std::size_t size = 0;
  double p_intra = 0.0;
  double p_inter = 0.0;
  std::string name;
};

int run_generate(const GenerateOptions& opt, const GlobalOptions& global) {
  cd::NamedPpm spec;
  if (!opt.builtin.empty()) {
    bool found = false;
    for (const auto& g : cd::benchmark_graphs()) {
      if (g.name == opt.builtin) {
        spec = g;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown builtin graph '" + opt.builtin + "'");
  } else {
    spec.name = "ppm";
    spec.params = {opt.clusters, opt.size, opt.p_intra, opt.p_inter, 0};
  }
  if (global.seed) spec.params.seed = *global.seed;
  if (!opt.name.empty()) spec.name = opt.name;

  const cd::PlantedGraph planted = cd::generate_ppm(spec.params);
  fs::create_directories(global.output_dir);
  const fs::path edges = global.output_dir / (spec.name + ".edges");
  const fs::path clusters = global.output_dir / (spec.name + ".clusters");
  cd::save_edge_list(planted.graph, edges);
  cd::save_cluster_assignment(planted.clusters, clusters);

  const cd::EdgeSplit split = cd::count_edges_by_type(planted.graph, planted.clusters);
  const cd::ExpectedEdgeCounts expected = cd::expected_edge_counts(spec.params);
  fmt::print("{}: |V|={} |E|={} intra={} (expected {:.1f}) inter={} (expected {:.1f}) seed={}\n",
             spec.name, planted.graph.vertex_count(), planted.graph.edge_count(), split.intra,
             expected.intra, split.inter, expected.inter, spec.params.seed);
  fmt::print("wrote {} and {}\n", edges.string(), clusters.string());
  return 0;
}

// --------------------------------------------------------------- distances

struct DistancesOptions {
  std::string graph;
  std::string measure = "all";
  std::string pairs;
  std::string output;
};

int run_distances(const DistancesOptions& opt, const GlobalOptions& global) {
  const cd::Graph g = cd::load_edge_list(opt.graph);
  const auto measures = measures_from(opt.measure);

  std::vector<cd::Edge> pairs;
  if (!opt.pairs.empty()) {
    std::ifstream in(opt.pairs);
    if (!in) throw std::runtime_error("cannot open pairs file '" + opt.pairs + "'");
    // Same line format as an edge list, but u == v is a legal query.
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream fields(line);
      std::uint64_t u = 0, v = 0;
      std::string extra;
      if (!(fields >> u >> v) || (fields >> extra)) {
        throw cd::ParseError(opt.pairs, line_no, "expected 'u v'");
      }
      pairs.emplace_back(static_cast<cd::VertexId>(u), static_cast<cd::VertexId>(v));
    }
  } else {
    for (cd::VertexId u = 0; u < g.vertex_count(); ++u) {
      for (auto v = static_cast<cd::VertexId>(u + 1); v < g.vertex_count(); ++v) {
        pairs.emplace_back(u, v);
      }
    }
  }

  Output out(opt.output);
  std::ostream& os = out.stream();
  os << "u,v";
  for (auto m : measures) os << ',' << cd::measure_name(m);
  os << '\n';
  std::vector<std::vector<cd::PairDistance>> columns;
  const std::size_t threads = cd::resolve_thread_count(global.threads);
  for (auto m : measures) columns.push_back(cd::pairwise(g, m, pairs, threads));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    os << pairs[i].first << ',' << pairs[i].second;
    for (const auto& column : columns) os << ',' << fmt::format("{:.17g}", column[i].value);
    os << '\n';
  }
  return 0;
}

// --------------------------------------------------------------- summarize

struct SummarizeOptions {
  std::string graph;
  std::string clusters;
  std::string output;
  bool global_means = false;
  std::optional<std::uint64_t> pair_budget;
};

int run_summarize(const SummarizeOptions& opt, const GlobalOptions& global) {
  const cd::Graph g = cd::load_edge_list(opt.graph);
  const cd::ClusterAssignment a = cd::load_cluster_assignment(opt.clusters);
  const std::size_t threads = cd::resolve_thread_count(global.threads);
  const auto summaries = cd::cluster_summaries(g, a, threads);

  Output out(opt.output);
  std::ostream& os = out.stream();
  os << "cluster_id,n_k,intra_edges,density,mean_jaccard,mean_otoc,mean_burt\n";
  for (const auto& s : summaries) {
    os << fmt::format("{},{},{},{},{},{},{}\n", s.cluster_id, s.n_k, s.intra_edges,
                      real(s.density), real(s.mean_jaccard), real(s.mean_otoc),
                      real(s.mean_burt));
  }
  if (opt.global_means) {
    cd::GlobalMeanOptions options;
    options.pair_budget = opt.pair_budget;
    options.seed = global.seed.value_or(0);
    options.threads = threads;
    const cd::MeanDistances m = cd::global_mean_distances(g, options);
    fmt::print(stderr, "global means{}: jaccard={} otoc={} burt={}\n",
               opt.pair_budget ? " (sampled)" : "", real(m.jaccard), real(m.otoc),
               real(m.burt));
  }
  return 0;
}

// --------------------------------------------------------------- correlate

struct CorrelateOptions {
  std::string input;
  std::string pooling = "concat";
};

int run_correlate(const CorrelateOptions& opt, const GlobalOptions&) {
  std::ifstream in(opt.input);
  if (!in) throw std::runtime_error("cannot open '" + opt.input + "'");
  const auto rows = cd::read_cluster_table(in, opt.input);

  // Groups in first-appearance order.
  std::vector<std::pair<std::string, std::uint64_t>> keys;
  std::map<std::pair<std::string, std::uint64_t>, std::array<cd::PointSet, 3>> groups;
  for (const auto& row : rows) {
    const auto key = std::make_pair(row.graph, row.seed);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) keys.push_back(key);
    for (std::size_t m = 0; m < 3; ++m) {
      it->second[m].xs.push_back(row.summary.density);
      it->second[m].ys.push_back(row.summary.mean(cd::kAllMeasures[m]));
    }
  }

  fmt::print("graph,seed,n_points,rho_jaccard,rho_otoc,rho_burt\n");
  std::array<std::vector<cd::PointSet>, 3> all;
  for (const auto& key : keys) {
    const auto& sets = groups.at(key);
    std::array<std::string, 3> rho;
    for (std::size_t m = 0; m < 3; ++m) {
      rho[m] = sets[m].xs.size() >= 2 ? cd::format_rho(cd::pearson(sets[m].xs, sets[m].ys))
                                      : "NA";
      all[m].push_back(sets[m]);
    }
    fmt::print("{},{},{},{},{},{}\n", key.first, key.second, sets[0].xs.size(), rho[0], rho[1],
               rho[2]);
  }
  if (keys.size() > 1) {
    const auto mode = opt.pooling == "mean" ? cd::PoolingMode::kMeanOfCoefficients
                                            : cd::PoolingMode::kConcatenate;
    fmt::print("pooled,,{},{},{},{}\n", rows.size(), cd::format_rho(cd::pooled(all[0], mode)),
               cd::format_rho(cd::pooled(all[1], mode)), cd::format_rho(cd::pooled(all[2], mode)));
  }
  return 0;
}

// -------------------------------------------------------------- experiment

struct ExperimentOptions {
  bool builtin = false;
  std::string config;
  std::optional<std::size_t> seeds_per_graph;
  std::optional<std::uint64_t> sampled_global;
};

int run_experiment_cmd(const ExperimentOptions& opt, const GlobalOptions& global,
                       bool output_dir_given) {
  cd::ExperimentConfig config;
  if (!opt.config.empty()) {
    config = cd::load_experiment_config(opt.config);
  } else {
    config = cd::ExperimentConfig::builtin(global.seed.value_or(0));
  }
  if (opt.seeds_per_graph) config.seeds_per_graph = *opt.seeds_per_graph;
  if (opt.sampled_global) {
    config.exact_global_means = false;
    config.global_pair_budget = *opt.sampled_global;
  }
  if (global.threads > 0) config.threads = global.threads;
  if (output_dir_given || opt.config.empty()) config.output_dir = global.output_dir;

  const cd::ExperimentResult result = cd::run_experiment(config);
  cd::emit_csv(result, config.output_dir);

  fmt::print("{:>8} {:>5} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}\n", "p_inter", "runs", "rho_J",
             "rho_B", "rho_O", "mean_J", "mean_B", "mean_O");
  for (const auto& g : result.grouped) {
    fmt::print("{:>8} {:>5} {:>9} {:>9} {:>9} {:>9.4f} {:>9.3f} {:>9.4f}\n", real(g.p_inter),
               g.runs, cd::format_rho(g.rho_jaccard, 4), cd::format_rho(g.rho_burt, 4),
               cd::format_rho(g.rho_otoc, 4), g.global.jaccard, g.global.burt, g.global.otoc);
  }
  for (const auto& p : result.pooled) {
    fmt::print("pooled {:>6} n={:<5} rho_J={} rho_B={} rho_O={}\n", p.scope, p.n_points,
               cd::format_rho(p.jaccard, 4), cd::format_rho(p.burt, 4),
               cd::format_rho(p.otoc, 4));
  }
  fmt::print("wrote CSV tables to {}\n", config.output_dir.string());
  for (const auto& d : result.diagnostics) {
    fmt::print(stderr, "error: {} (seed {}): {}\n", d.graph, d.seed, d.message);
  }
  return result.ok() ? 0 : 1;
}

// ----------------------------------------------------------- export-matrix

struct ExportOptions {
  std::string graph;
  std::string measure = "jaccard";
  std::string output;
  std::size_t max_bytes = cd::kDefaultMatrixBudget;
};

int run_export(const ExportOptions& opt, const GlobalOptions& global) {
  const cd::Graph g = cd::load_edge_list(opt.graph);
  fs::path path = opt.output;
  if (path.empty()) {
    path = global.output_dir /
           (fs::path(opt.graph).stem().string() + "_" + opt.measure + "_matrix.csv");
  }
  cd::export_distance_matrix(g, cd::parse_measure(opt.measure), path, opt.max_bytes);
  fmt::print("wrote {}x{} matrix to {}\n", g.vertex_count(), g.vertex_count(), path.string());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity distances, cluster metrics and planted-partition benchmarks"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "RNG seed")->check(CLI::NonNegativeNumber);
  auto* output_dir_opt = app.add_option("--output-dir", global.output_dir, "Output directory");
  app.add_option("--threads", global.threads,
                 fmt::format("Worker threads (default: ${} or hardware)", cd::kThreadsEnvVar));

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a planted-partition graph");
  generate->add_option("--builtin", gen.builtin, "Benchmark graph name, G1..G10");
  generate->add_option("--clusters", gen.clusters, "Number of clusters k");
  generate->add_option("--size", gen.size, "Vertices per cluster n_k");
  generate->add_option("--p-intra", gen.p_intra, "Intra-cluster edge probability");
  generate->add_option("--p-inter", gen.p_inter, "Inter-cluster edge probability");
  generate->add_option("--name", gen.name, "Output file stem");

  DistancesOptions dist;
  auto* distances = app.add_subcommand("distances", "Vertex-pair distances as CSV");
  distances->add_option("--graph", dist.graph, "Edge-list file")->required();
  distances->add_option("--measure", dist.measure, "jaccard, otoc, burt or all");
  distances->add_option("--pairs", dist.pairs, "File of 'u v' lines (default: all pairs)");
  distances->add_option("--output", dist.output, "Output file (default: stdout)");

  SummarizeOptions sum;
  auto* summarize = app.add_subcommand("summarize", "Per-cluster density and mean distances");
  summarize->add_option("--graph", sum.graph, "Edge-list file")->required();
  summarize->add_option("--clusters", sum.clusters, "Cluster-assignment file")->required();
  summarize->add_option("--output", sum.output, "Output file (default: stdout)");
  summarize->add_flag("--global", sum.global_means, "Also report graph-wide mean distances");
  summarize->add_option("--pair-budget", sum.pair_budget,
                        "Estimate global means from this many sampled pairs");

  CorrelateOptions cor;
  auto* correlate = app.add_subcommand("correlate", "Pearson correlation of density vs means");
  correlate->add_option("--input", cor.input, "per_cluster.csv or summarize output")->required();
  correlate->add_option("--pooling", cor.pooling, "concat or mean")
      ->check(CLI::IsMember({"concat", "mean"}));

  ExperimentOptions exp;
  auto* experiment = app.add_subcommand("experiment", "Run the benchmark suite");
  auto* builtin_flag =
      experiment->add_flag("--builtin", exp.builtin, "Use the ten benchmark graphs");
  experiment->add_option("--config", exp.config, "Experiment config file")
      ->excludes(builtin_flag);
  experiment->add_option("--seeds-per-graph", exp.seeds_per_graph, "Repetitions per graph");
  experiment->add_option("--sampled-global", exp.sampled_global,
                         "Estimate global means from this many sampled pairs");

  ExportOptions exo;
  auto* export_matrix = app.add_subcommand("export-matrix", "Dense distance matrix as CSV");
  export_matrix->add_option("--graph", exo.graph, "Edge-list file")->required();
  export_matrix->add_option("--measure", exo.measure, "jaccard, otoc or burt");
  export_matrix->add_option("--output", exo.output, "Output file");
  export_matrix->add_option("--max-bytes", exo.max_bytes, "Refuse matrices larger than this");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      if (gen.builtin.empty() && (gen.clusters == 0 || gen.size == 0)) {
        throw std::invalid_argument("generate needs --builtin or --clusters and --size");
      }
      return run_generate(gen, global);
    }
    if (*distances) return run_distances(dist, global);
    if (*summarize) return run_summarize(sum, global);
    if (*correlate) return run_correlate(cor, global);
    if (*experiment) {
      if (!exp.builtin && exp.config.empty()) {
        throw std::invalid_argument("experiment needs --builtin or --config");
      }
      return run_experiment_cmd(exp, global, output_dir_opt->count() > 0);
    }
    if (*export_matrix) return run_export(exo, global);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 1;
}
