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

#include "clusterdist/experiment.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "clusterdist/parallel.h"
#include "clusterdist/summation.h"

namespace clusterdist {
namespace {

struct RunOutput {
  std::vector<ClusterSummary> clusters;
  GraphRow graph;
  std::optional<std::string> error;
};

CorrelationResult correlate(const std::vector<ClusterSummary>& clusters, DistanceMeasure m) {
  std::vector<double> density;
  std::vector<double> mean;
  for (const ClusterSummary& s : clusters) {
    density.push_back(s.density);
    mean.push_back(s.mean(m));
  }
  return pearson(density, mean);
}

RunOutput run_one(const NamedPpm& spec, std::uint64_t seed, const ExperimentConfig& config,
                  std::size_t threads) {
  RunOutput out;
  out.graph.graph = spec.name;
  out.graph.seed = seed;
  out.graph.params = spec.params;
  out.graph.params.seed = seed;
  try {
    const PlantedGraph planted = generate_ppm(out.graph.params);
    out.clusters = cluster_summaries(planted.graph, planted.clusters, threads);
    out.graph.rho_jaccard = correlate(out.clusters, DistanceMeasure::kJaccard);
    out.graph.rho_otoc = correlate(out.clusters, DistanceMeasure::kOtsukaOchiai);
    out.graph.rho_burt = correlate(out.clusters, DistanceMeasure::kBurt);

    GlobalMeanOptions global;
    global.threads = threads;
    global.seed = seed;
    if (!config.exact_global_means) {
      const std::uint64_t n = planted.graph.vertex_count();
      global.pair_budget = std::min<std::uint64_t>(config.global_pair_budget, n * (n - 1) / 2);
    }
    out.graph.global = global_mean_distances(planted.graph, global);

    CompensatedSum j, o, b;
    for (const ClusterSummary& s : out.clusters) {
      j.add(s.mean_jaccard);
      o.add(s.mean_otoc);
      b.add(s.mean_burt);
    }
    const auto count = static_cast<double>(out.clusters.size());
    out.graph.intra = {j.value() / count, o.value() / count, b.value() / count};
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

// Mean of defined coefficients.
CorrelationResult average_rho(const std::vector<const GraphRow*>& rows, DistanceMeasure m) {
  CompensatedSum sum;
  CorrelationResult out;
  std::size_t defined = 0;
  for (const GraphRow* row : rows) {
    const CorrelationResult& r = row->rho(m);
    out.n_points += r.n_points;
    if (r.rho) {
      sum.add(*r.rho);
      ++defined;
    }
  }
  if (defined > 0) out.rho = sum.value() / static_cast<double>(defined);
  return out;
}

std::vector<GroupRow> group_by_p_inter(const std::vector<GraphRow>& rows) {
  std::map<double, std::vector<const GraphRow*>> groups;
  for (const GraphRow& row : rows) groups[row.params.p_inter].push_back(&row);
  std::vector<GroupRow> out;
  for (const auto& [p_inter, members] : groups) {
    GroupRow g;
    g.p_inter = p_inter;
    g.runs = members.size();
    CompensatedSum gj, go, gb, ij, io, ib;
    for (const GraphRow* row : members) {
      gj.add(row->global.jaccard);
      go.add(row->global.otoc);
      gb.add(row->global.burt);
      ij.add(row->intra.jaccard);
      io.add(row->intra.otoc);
      ib.add(row->intra.burt);
    }
    const auto n = static_cast<double>(members.size());
    g.global = {gj.value() / n, go.value() / n, gb.value() / n};
    g.intra = {ij.value() / n, io.value() / n, ib.value() / n};
    g.rho_jaccard = average_rho(members, DistanceMeasure::kJaccard);
    g.rho_otoc = average_rho(members, DistanceMeasure::kOtsukaOchiai);
    g.rho_burt = average_rho(members, DistanceMeasure::kBurt);
    out.push_back(g);
  }
  return out;
}

std::optional<PooledRow> pool(const std::string& scope,
                              const std::vector<const std::vector<ClusterSummary>*>& runs) {
  std::vector<PointSet> j, o, b;
  std::size_t points = 0;
  for (const auto* clusters : runs) {
    PointSet pj, po, pb;
    for (const ClusterSummary& s : *clusters) {
      pj.xs.push_back(s.density);
      pj.ys.push_back(s.mean_jaccard);
      po.ys.push_back(s.mean_otoc);
      pb.ys.push_back(s.mean_burt);
    }
    po.xs = pj.xs;
    pb.xs = pj.xs;
    points += pj.xs.size();
    j.push_back(std::move(pj));
    o.push_back(std::move(po));
    b.push_back(std::move(pb));
  }
  if (points < 2) return std::nullopt;
  return PooledRow{scope, points, pooled(j), pooled(o), pooled(b)};
}

std::string real(double x) { return fmt::format("{:.6g}", x); }

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

void close_csv(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

bool parse_bool(std::string_view text, const std::string& where) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw std::invalid_argument(where + ": expected a boolean, got '" + std::string(text) + "'");
}

template <typename T>
T parse_number(std::string_view text, const std::string& where) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(where + ": cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

// ~24 bytes per "%.17g," cell.
void check_matrix_budget(std::size_t n, std::size_t max_bytes) {
  constexpr std::size_t kBytesPerCell = 24;
  if (n != 0 && n > max_bytes / kBytesPerCell / n) {
    throw std::length_error(fmt::format(
        "a {0}x{0} distance matrix needs about {1} bytes, over the {2}-byte budget; "
        "stream the pairs you need with the `distances` command instead",
        n, n * n * kBytesPerCell, max_bytes));
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

const CorrelationResult& GraphRow::rho(DistanceMeasure m) const {
  switch (m) {
    case DistanceMeasure::kJaccard:
      return rho_jaccard;
    case DistanceMeasure::kOtsukaOchiai:
      return rho_otoc;
    case DistanceMeasure::kBurt:
      return rho_burt;
  }
  throw std::invalid_argument("unknown distance measure");
}

void ExperimentConfig::validate() const {
  if (seeds_per_graph == 0) throw std::invalid_argument("seeds_per_graph must be >= 1");
  std::set<std::string> names;
  for (const NamedPpm& g : graphs) {
    if (!names.insert(g.name).second) {
      throw std::invalid_argument("duplicate graph name '" + g.name + "'");
    }
    g.params.validate(kDefaultMaxVertices);
  }
}

ExperimentConfig ExperimentConfig::builtin(std::uint64_t base_seed) {
  ExperimentConfig config;
  config.graphs = benchmark_graphs(base_seed);
  return config;
}

std::uint64_t run_seed(std::uint64_t base, std::size_t seed_index) {
  return base + 0x9E3779B97F4A7C15ULL * seed_index;
}

ExperimentConfig parse_experiment_config(std::istream& in, const std::string& source) {
  ExperimentConfig config;
  std::vector<NamedPpm> table;
  bool builtin_graphs = false;
  std::uint64_t base_seed = 0;
  bool in_graphs = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = source + ":" + std::to_string(line_no);
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    if (view == "[graphs]") {
      in_graphs = true;
      continue;
    }
    if (in_graphs) {
      std::vector<std::string_view> f;
      std::size_t pos = 0;
      while (pos < view.size()) {
        const auto start = view.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos) break;
        auto end = view.find_first_of(" \t", start);
        if (end == std::string_view::npos) end = view.size();
        f.push_back(view.substr(start, end - start));
        pos = end;
      }
      if (f.size() != 6) {
        throw std::invalid_argument(where + ": graph rows need 6 fields "
                                            "(name clusters cluster_size p_intra p_inter seed)");
      }
      NamedPpm g;
      g.name = std::string(f[0]);
      g.params.num_clusters = parse_number<std::size_t>(f[1], where);
      g.params.cluster_size = parse_number<std::size_t>(f[2], where);
      g.params.p_intra = parse_number<double>(f[3], where);
      g.params.p_inter = parse_number<double>(f[4], where);
      g.params.seed = parse_number<std::uint64_t>(f[5], where);
      table.push_back(std::move(g));
      continue;
    }
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument(where + ": expected 'key = value'");
    }
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));
    if (key == "seeds_per_graph") {
      config.seeds_per_graph = parse_number<std::size_t>(value, where);
    } else if (key == "output_dir") {
      config.output_dir = std::string(value);
    } else if (key == "exact_global_means") {
      config.exact_global_means = parse_bool(value, where);
    } else if (key == "global_pair_budget") {
      config.global_pair_budget = parse_number<std::uint64_t>(value, where);
    } else if (key == "threads") {
      config.threads = parse_number<std::size_t>(value, where);
    } else if (key == "builtin_graphs") {
      builtin_graphs = parse_bool(value, where);
    } else if (key == "base_seed") {
      base_seed = parse_number<std::uint64_t>(value, where);
    } else {
      throw std::invalid_argument(where + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (builtin_graphs) config.graphs = benchmark_graphs(base_seed);
  config.graphs.insert(config.graphs.end(), table.begin(), table.end());
  config.validate();
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path.string() + "'");
  return parse_experiment_config(in, path.string());
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t units = config.graphs.size() * config.seeds_per_graph;
  const std::size_t threads = resolve_thread_count(config.threads);
  const std::size_t inner = units >= threads ? 1 : threads;

  std::vector<RunOutput> outputs(units);
  parallel_for(units, threads, [&](std::size_t unit) {
    const NamedPpm& spec = config.graphs[unit / config.seeds_per_graph];
    const std::size_t seed_index = unit % config.seeds_per_graph;
    outputs[unit] = run_one(spec, run_seed(spec.params.seed, seed_index), config, inner);
  });

  ExperimentResult result;
  std::vector<std::vector<const std::vector<ClusterSummary>*>> pooled_by_seed(
      config.seeds_per_graph);
  std::vector<const std::vector<ClusterSummary>*> pooled_all;
  for (std::size_t unit = 0; unit < units; ++unit) {
    const RunOutput& run = outputs[unit];
    if (run.error) {
      result.diagnostics.push_back({run.graph.graph, run.graph.seed, *run.error});
      continue;
    }
    for (const ClusterSummary& s : run.clusters) {
      result.per_cluster.push_back({run.graph.graph, run.graph.seed, s});
    }
    result.per_graph.push_back(run.graph);
    if (run.graph.params.p_inter > 0.0) {
      pooled_by_seed[unit % config.seeds_per_graph].push_back(&run.clusters);
      pooled_all.push_back(&run.clusters);
    }
  }
  result.grouped = group_by_p_inter(result.per_graph);
  for (std::size_t s = 0; s < pooled_by_seed.size(); ++s) {
    if (auto row = pool("seed" + std::to_string(s), pooled_by_seed[s])) {
      result.pooled.push_back(std::move(*row));
    }
  }
  if (auto row = pool("all", pooled_all)) result.pooled.push_back(std::move(*row));
  return result;
}

void emit_csv(const ExperimentResult& result, const std::filesystem::path& output_dir) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create '" + output_dir.string() + "': " + ec.message());
  }

  {
    const auto path = output_dir / "per_cluster.csv";
    auto out = open_csv(path);
    out << "graph,seed,cluster_id,n_k,density,mean_jaccard,mean_otoc,mean_burt\n";
    for (const ClusterRow& r : result.per_cluster) {
      const ClusterSummary& s = r.summary;
      out << fmt::format("{},{},{},{},{},{},{},{}\n", r.graph, r.seed, s.cluster_id, s.n_k,
                         real(s.density), real(s.mean_jaccard), real(s.mean_otoc),
                         real(s.mean_burt));
    }
    close_csv(out, path);
  }
  {
    const auto path = output_dir / "per_graph.csv";
    auto out = open_csv(path);
    out << "graph,seed,p_intra,p_inter,n_k,rho_jaccard,rho_otoc,rho_burt,"
           "global_jaccard,global_otoc,global_burt,intra_jaccard,intra_otoc,intra_burt\n";
    for (const GraphRow& r : result.per_graph) {
      out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.graph, r.seed,
                         real(r.params.p_intra), real(r.params.p_inter), r.params.cluster_size,
                         format_rho(r.rho_jaccard), format_rho(r.rho_otoc),
                         format_rho(r.rho_burt), real(r.global.jaccard), real(r.global.otoc),
                         real(r.global.burt), real(r.intra.jaccard), real(r.intra.otoc),
                         real(r.intra.burt));
    }
    close_csv(out, path);
  }
  {
    const auto path = output_dir / "grouped.csv";
    auto out = open_csv(path);
    out << "p_inter,runs,global_jaccard,global_otoc,global_burt,intra_jaccard,intra_otoc,"
           "intra_burt,rho_jaccard,rho_otoc,rho_burt\n";
    for (const GroupRow& r : result.grouped) {
      out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", real(r.p_inter), r.runs,
                         real(r.global.jaccard), real(r.global.otoc), real(r.global.burt),
                         real(r.intra.jaccard), real(r.intra.otoc), real(r.intra.burt),
                         format_rho(r.rho_jaccard), format_rho(r.rho_otoc),
                         format_rho(r.rho_burt));
    }
    close_csv(out, path);
  }
  {
    const auto path = output_dir / "pooled.csv";
    auto out = open_csv(path);
    out << "scope,n_points,rho_jaccard,rho_otoc,rho_burt\n";
    for (const PooledRow& r : result.pooled) {
      out << fmt::format("{},{},{},{},{}\n", r.scope, r.n_points, format_rho(r.jaccard),
                         format_rho(r.otoc), format_rho(r.burt));
    }
    close_csv(out, path);
  }
}

std::vector<ClusterRow> read_cluster_table(std::istream& in, const std::string& source) {
  auto split = [](std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return cells;
  };
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument(source + ": empty table");
  const auto header = split(line);
  auto column = [&](std::string_view name, bool required) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it != header.end()) return static_cast<std::size_t>(it - header.begin());
    if (required) {
      throw std::invalid_argument(source + ": missing column '" + std::string(name) + "'");
    }
    return std::nullopt;
  };
  const auto graph_col = column("graph", false);
  const auto seed_col = column("seed", false);
  const auto cluster_col = column("cluster_id", false);
  const auto nk_col = column("n_k", false);
  const std::size_t density_col = *column("density", true);
  const std::size_t j_col = *column("mean_jaccard", true);
  const std::size_t o_col = *column("mean_otoc", true);
  const std::size_t b_col = *column("mean_burt", true);

  std::vector<ClusterRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      throw std::invalid_argument(where + ": expected " + std::to_string(header.size()) +
                                  " cells, found " + std::to_string(cells.size()));
    }
    ClusterRow row;
    if (graph_col) row.graph = std::string(cells[*graph_col]);
    if (seed_col) row.seed = parse_number<std::uint64_t>(cells[*seed_col], where);
    if (cluster_col) {
      row.summary.cluster_id = parse_number<ClusterId>(cells[*cluster_col], where);
    }
    if (nk_col) row.summary.n_k = parse_number<std::size_t>(cells[*nk_col], where);
    row.summary.density = parse_number<double>(cells[density_col], where);
    row.summary.mean_jaccard = parse_number<double>(cells[j_col], where);
    row.summary.mean_otoc = parse_number<double>(cells[o_col], where);
    row.summary.mean_burt = parse_number<double>(cells[b_col], where);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_distance_matrix(const Graph& g, DistanceMeasure m, std::ostream& out,
                           std::size_t max_bytes) {
  check_matrix_budget(g.vertex_count(), max_bytes);
  const std::size_t n = g.vertex_count();
  std::vector<double> cells(n * n, 0.0);
  for (VertexId u = 0; u < n; ++u) {
    for (auto v = static_cast<VertexId>(u + 1); v < n; ++v) {
      const double d = distance(g, m, u, v);
      cells[std::size_t{u} * n + v] = d;
      cells[std::size_t{v} * n + u] = d;
    }
  }
  std::string row;
  for (std::size_t i = 0; i < n; ++i) {
    row.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) row += ',';
      row += fmt::format("{:.17g}", cells[i * n + j]);
    }
    row += '\n';
    out << row;
  }
}

void export_distance_matrix(const Graph& g, DistanceMeasure m, const std::filesystem::path& path,
                            std::size_t max_bytes) {
  check_matrix_budget(g.vertex_count(), max_bytes);
  auto out = open_csv(path);
  write_distance_matrix(g, m, out, max_bytes);
  close_csv(out, path);
}

}  // namespace clusterdist
