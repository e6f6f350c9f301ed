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

// Benchmark harness: generate planted-partition graphs, summarize every
// cluster, correlate cluster mean distances with intra-cluster density, and
// aggregate per inter-cluster probability.

#ifndef CLUSTERDIST_EXPERIMENT_H_
#define CLUSTERDIST_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "clusterdist/cluster_metrics.h"
#include "clusterdist/distances.h"
#include "clusterdist/graph.h"
#include "clusterdist/ppm.h"
#include "clusterdist/stats.h"

namespace clusterdist {

struct ExperimentConfig {
  std::vector<NamedPpm> graphs;
  std::size_t seeds_per_graph = 1;
  std::filesystem::path output_dir = "results";
  // false: global means are estimated from `global_pair_budget` sampled pairs.
  bool exact_global_means = true;
  std::uint64_t global_pair_budget = 100'000;
  // 0 resolves through CLUSTERDIST_THREADS, then hardware concurrency.
  std::size_t threads = 0;

  // Throws std::invalid_argument on duplicate names or seeds_per_graph == 0.
  void validate() const;

  // The ten benchmark graphs G1..G10 with seeds base_seed + index.
  static ExperimentConfig builtin(std::uint64_t base_seed = 0);
};

// Seed of repetition `seed_index` for a graph whose params carry `seed`.
std::uint64_t run_seed(std::uint64_t base, std::size_t seed_index);

// Key-value config with an optional graph table:
//
//   seeds_per_graph = 5
//   output_dir = results
//   exact_global_means = true
//   global_pair_budget = 100000
//   threads = 4
//   builtin_graphs = true      # prepend G1..G10
//   base_seed = 0              # seed base for the builtin graphs
//   [graphs]
//   # name  clusters  cluster_size  p_intra  p_inter  seed
//   small   4         10            0.9      0.05     17
ExperimentConfig parse_experiment_config(std::istream& in,
                                         const std::string& source = "<stream>");
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct ClusterRow {
  std::string graph;
  std::uint64_t seed = 0;
  ClusterSummary summary;
};

struct GraphRow {
  std::string graph;
  std::uint64_t seed = 0;
  PpmParams params;
  CorrelationResult rho_jaccard;
  CorrelationResult rho_otoc;
  CorrelationResult rho_burt;
  // Over all vertex pairs, cluster membership ignored.
  MeanDistances global;
  // Average of the per-cluster means.
  MeanDistances intra;

  const CorrelationResult& rho(DistanceMeasure m) const;
};

// Runs sharing an inter-cluster probability.
struct GroupRow {
  double p_inter = 0.0;
  std::size_t runs = 0;
  MeanDistances global;
  MeanDistances intra;
  // Mean of the defined per-run coefficients; NA when none is defined.
  CorrelationResult rho_jaccard;
  CorrelationResult rho_otoc;
  CorrelationResult rho_burt;
};

// Pooled coefficient over all runs with p_inter > 0: one row per seed index
// ("seed0", "seed1", ...) plus "all".
struct PooledRow {
  std::string scope;
  std::size_t n_points = 0;
  CorrelationResult jaccard;
  CorrelationResult otoc;
  CorrelationResult burt;
};

struct RunDiagnostic {
  std::string graph;
  std::uint64_t seed = 0;
  std::string message;
};

struct ExperimentResult {
  std::vector<ClusterRow> per_cluster;
  std::vector<GraphRow> per_graph;
  std::vector<GroupRow> grouped;
  std::vector<PooledRow> pooled;
  std::vector<RunDiagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Runs every graph x seed. Units run concurrently; all tables are assembled
// afterwards in config order, so results never depend on scheduling. A unit
// that throws is recorded in `diagnostics` and the rest continue.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Writes per_cluster.csv, per_graph.csv, grouped.csv and pooled.csv into
// `output_dir` (created if needed). Reals use 6 significant digits.
void emit_csv(const ExperimentResult& result, const std::filesystem::path& output_dir);

// Reads a per-cluster table written by emit_csv (or by the `summarize`
// command, which has no graph/seed columns; those rows get graph "" and
// seed 0). Columns are located by header name. Throws std::invalid_argument
// on a missing column or malformed field.
std::vector<ClusterRow> read_cluster_table(std::istream& in, const std::string& source = "<stream>");

// Dense |V| x |V| matrix as CSV without a header: row i, column j holds
// d(i, j), zero diagonal, exactly symmetric. Refuses with
// std::length_error when the estimated size exceeds `max_bytes`.
inline constexpr std::size_t kDefaultMatrixBudget = std::size_t{256} << 20;
void write_distance_matrix(const Graph& g, DistanceMeasure m, std::ostream& out,
                           std::size_t max_bytes = kDefaultMatrixBudget);
void export_distance_matrix(const Graph& g, DistanceMeasure m, const std::filesystem::path& path,
                            std::size_t max_bytes = kDefaultMatrixBudget);

}  // namespace clusterdist

#endif  // CLUSTERDIST_EXPERIMENT_H_
