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

// Python bindings for the clusterdist library.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterdist/cluster_assignment.h"
#include "clusterdist/cluster_metrics.h"
#include "clusterdist/distances.h"
#include "clusterdist/experiment.h"
#include "clusterdist/graph.h"
#include "clusterdist/io.h"
#include "clusterdist/parallel.h"
#include "clusterdist/ppm.h"
#include "clusterdist/stats.h"

namespace py = pybind11;
namespace cd = clusterdist;

namespace {

std::vector<cd::VertexId> to_vector(std::span<const cd::VertexId> s) {
  return {s.begin(), s.end()};
}

py::dict means_dict(const cd::MeanDistances& m) {
  py::dict d;
  d["jaccard"] = m.jaccard;
  d["otoc"] = m.otoc;
  d["burt"] = m.burt;
  return d;
}

cd::PoolingMode parse_pooling(const std::string& mode) {
  if (mode == "concat") return cd::PoolingMode::kConcatenate;
  if (mode == "mean") return cd::PoolingMode::kMeanOfCoefficients;
  throw std::invalid_argument("pooling must be 'concat' or 'mean'");
}

}  // namespace

PYBIND11_MODULE(_clusterdist, m) {
  m.doc() = "Neighborhood-overlap vertex distances and cluster metrics";

  py::class_<cd::Graph>(m, "Graph")
      .def(py::init<>())
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<cd::Edge>& edges) { return cd::Graph::build(n, edges); },
          py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &cd::Graph::vertex_count)
      .def_property_readonly("edge_count", &cd::Graph::edge_count)
      .def("neighbors", [](const cd::Graph& g, cd::VertexId v) { return to_vector(g.neighbors(v)); })
      .def("degree", &cd::Graph::degree)
      .def("has_edge", &cd::Graph::has_edge)
      .def("edges", &cd::Graph::edges)
      .def(py::self == py::self)
      .def("__repr__", [](const cd::Graph& g) {
        return "Graph(vertex_count=" + std::to_string(g.vertex_count()) +
               ", edge_count=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<cd::ClusterAssignment>(m, "ClusterAssignment")
      .def(py::init<>())
      .def_static("from_labels", &cd::ClusterAssignment::from_labels, py::arg("labels"),
                  py::arg("cluster_count") = 0)
      .def_property_readonly("vertex_count", &cd::ClusterAssignment::vertex_count)
      .def_property_readonly("cluster_count", &cd::ClusterAssignment::cluster_count)
      .def_property_readonly("labels", &cd::ClusterAssignment::labels)
      .def("label", &cd::ClusterAssignment::label)
      .def("members", [](const cd::ClusterAssignment& a, cd::ClusterId c) {
        return to_vector(a.members(c));
      })
      .def(py::self == py::self);

  // I/O.
  m.def("load_edge_list", py::overload_cast<const std::filesystem::path&>(&cd::load_edge_list),
        py::arg("path"));
  m.def("save_edge_list", &cd::save_edge_list, py::arg("graph"), py::arg("path"));
  m.def("load_cluster_assignment", &cd::load_cluster_assignment, py::arg("path"));
  m.def("save_cluster_assignment", &cd::save_cluster_assignment, py::arg("clusters"),
        py::arg("path"));

  // Generator.
  py::class_<cd::PpmParams>(m, "PpmParams")
      .def(py::init([](std::size_t k, std::size_t n_k, double p_intra, double p_inter,
                       std::uint64_t seed) { return cd::PpmParams{k, n_k, p_intra, p_inter, seed}; }),
           py::arg("num_clusters"), py::arg("cluster_size"), py::arg("p_intra"),
           py::arg("p_inter"), py::arg("seed") = 0)
      .def_readwrite("num_clusters", &cd::PpmParams::num_clusters)
      .def_readwrite("cluster_size", &cd::PpmParams::cluster_size)
      .def_readwrite("p_intra", &cd::PpmParams::p_intra)
      .def_readwrite("p_inter", &cd::PpmParams::p_inter)
      .def_readwrite("seed", &cd::PpmParams::seed)
      .def_property_readonly("vertex_count", &cd::PpmParams::vertex_count)
      .def(py::self == py::self);

  m.def(
      "generate_ppm",
      [](const cd::PpmParams& params, std::size_t max_vertices) {
        cd::PlantedGraph p = cd::generate_ppm(params, max_vertices);
        return std::make_pair(std::move(p.graph), std::move(p.clusters));
      },
      py::arg("params"), py::arg("max_vertices") = cd::kDefaultMaxVertices,
      "Returns (Graph, ClusterAssignment).");
  m.def(
      "expected_edge_counts",
      [](const cd::PpmParams& params) {
        const auto e = cd::expected_edge_counts(params);
        return std::make_pair(e.intra, e.inter);
      },
      py::arg("params"), "Returns (expected_intra, expected_inter).");
  m.def(
      "count_edges_by_type",
      [](const cd::Graph& g, const cd::ClusterAssignment& a) {
        const auto s = cd::count_edges_by_type(g, a);
        return std::make_pair(s.intra, s.inter);
      },
      py::arg("graph"), py::arg("clusters"), "Returns (intra, inter).");
  m.def(
      "benchmark_graphs",
      [](std::uint64_t base_seed) {
        std::vector<std::pair<std::string, cd::PpmParams>> out;
        for (auto& g : cd::benchmark_graphs(base_seed)) out.emplace_back(g.name, g.params);
        return out;
      },
      py::arg("base_seed") = 0, "Returns [(name, PpmParams)] for G1..G10.");

  // Distances.
  m.def("jaccard", &cd::jaccard, py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def("otsuka_ochiai", &cd::otsuka_ochiai, py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def("burt", &cd::burt, py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def(
      "distance",
      [](const cd::Graph& g, const std::string& measure, cd::VertexId u, cd::VertexId v) {
        return cd::distance(g, cd::parse_measure(measure), u, v);
      },
      py::arg("graph"), py::arg("measure"), py::arg("u"), py::arg("v"));
  m.def(
      "pairwise",
      [](const cd::Graph& g, const std::string& measure, const std::vector<cd::Edge>& pairs,
         std::size_t threads) {
        const auto result = [&] {
          py::gil_scoped_release release;
          return cd::pairwise(g, cd::parse_measure(measure), pairs, cd::resolve_thread_count(threads));
        }();
        std::vector<double> values;
        values.reserve(result.size());
        for (const auto& d : result) values.push_back(d.value);
        return values;
      },
      py::arg("graph"), py::arg("measure"), py::arg("pairs"), py::arg("threads") = 0,
      "Distances for the given pairs, in input order.");

  // Cluster metrics.
  py::class_<cd::ClusterSummary>(m, "ClusterSummary")
      .def_readonly("cluster_id", &cd::ClusterSummary::cluster_id)
      .def_readonly("n_k", &cd::ClusterSummary::n_k)
      .def_readonly("intra_edges", &cd::ClusterSummary::intra_edges)
      .def_readonly("density", &cd::ClusterSummary::density)
      .def_readonly("mean_jaccard", &cd::ClusterSummary::mean_jaccard)
      .def_readonly("mean_otoc", &cd::ClusterSummary::mean_otoc)
      .def_readonly("mean_burt", &cd::ClusterSummary::mean_burt);

  m.def(
      "cluster_summaries",
      [](const cd::Graph& g, const cd::ClusterAssignment& a, std::size_t threads) {
        py::gil_scoped_release release;
        return cd::cluster_summaries(g, a, cd::resolve_thread_count(threads));
      },
      py::arg("graph"), py::arg("clusters"), py::arg("threads") = 0);
  m.def(
      "global_mean_distances",
      [](const cd::Graph& g, std::optional<std::uint64_t> pair_budget, std::uint64_t seed,
         std::size_t threads) {
        cd::GlobalMeanOptions options;
        options.pair_budget = pair_budget;
        options.seed = seed;
        options.threads = cd::resolve_thread_count(threads);
        cd::MeanDistances means;
        {
          py::gil_scoped_release release;
          means = cd::global_mean_distances(g, options);
        }
        return means_dict(means);
      },
      py::arg("graph"), py::arg("pair_budget") = py::none(), py::arg("seed") = 0,
      py::arg("threads") = 0, "Mean over all vertex pairs, or over a seeded sample.");

  // Statistics. Undefined coefficients are returned as None.
  m.def(
      "pearson",
      [](const std::vector<double>& xs, const std::vector<double>& ys) {
        return cd::pearson(xs, ys).rho;
      },
      py::arg("xs"), py::arg("ys"));
  m.def(
      "pooled",
      [](const std::vector<std::pair<std::vector<double>, std::vector<double>>>& sets,
         const std::string& mode) {
        std::vector<cd::PointSet> points;
        for (const auto& [xs, ys] : sets) points.push_back({xs, ys});
        return cd::pooled(points, parse_pooling(mode)).rho;
      },
      py::arg("sets"), py::arg("mode") = "concat");

  // Experiment.
  m.def(
      "run_experiment",
      [](std::optional<std::vector<std::pair<std::string, cd::PpmParams>>> graphs,
         std::size_t seeds_per_graph, std::optional<std::uint64_t> global_pair_budget,
         std::size_t threads, std::optional<std::filesystem::path> output_dir) {
        cd::ExperimentConfig config = cd::ExperimentConfig::builtin();
        if (graphs) {
          config.graphs.clear();
          for (const auto& [name, params] : *graphs) config.graphs.push_back({name, params});
        }
        config.seeds_per_graph = seeds_per_graph;
        if (global_pair_budget) {
          config.exact_global_means = false;
          config.global_pair_budget = *global_pair_budget;
        }
        config.threads = threads;
        cd::ExperimentResult result;
        {
          py::gil_scoped_release release;
          result = cd::run_experiment(config);
          if (output_dir) cd::emit_csv(result, *output_dir);
        }

        py::list per_graph;
        for (const auto& row : result.per_graph) {
          py::dict d;
          d["graph"] = row.graph;
          d["seed"] = row.seed;
          d["p_intra"] = row.params.p_intra;
          d["p_inter"] = row.params.p_inter;
          d["rho_jaccard"] = row.rho_jaccard.rho;
          d["rho_otoc"] = row.rho_otoc.rho;
          d["rho_burt"] = row.rho_burt.rho;
          d["global"] = means_dict(row.global);
          d["intra"] = means_dict(row.intra);
          per_graph.append(d);
        }
        py::list grouped;
        for (const auto& row : result.grouped) {
          py::dict d;
          d["p_inter"] = row.p_inter;
          d["runs"] = row.runs;
          d["global"] = means_dict(row.global);
          d["intra"] = means_dict(row.intra);
          d["rho_jaccard"] = row.rho_jaccard.rho;
          d["rho_otoc"] = row.rho_otoc.rho;
          d["rho_burt"] = row.rho_burt.rho;
          grouped.append(d);
        }
        py::list pooled;
        for (const auto& row : result.pooled) {
          py::dict d;
          d["scope"] = row.scope;
          d["n_points"] = row.n_points;
          d["rho_jaccard"] = row.jaccard.rho;
          d["rho_otoc"] = row.otoc.rho;
          d["rho_burt"] = row.burt.rho;
          pooled.append(d);
        }
        py::list errors;
        for (const auto& diag : result.diagnostics) {
          errors.append(py::make_tuple(diag.graph, diag.seed, diag.message));
        }
        py::dict out;
        out["per_graph"] = per_graph;
        out["grouped"] = grouped;
        out["pooled"] = pooled;
        out["errors"] = errors;
        return out;
      },
      py::arg("graphs") = py::none(), py::arg("seeds_per_graph") = 1,
      py::arg("global_pair_budget") = py::none(), py::arg("threads") = 0,
      py::arg("output_dir") = py::none(),
      "Runs graphs x seeds (default: the ten benchmark graphs) and returns the tables as "
      "dicts. Writes the CSV tables when output_dir is given.");

  m.def(
      "export_distance_matrix",
      [](const cd::Graph& g, const std::string& measure, const std::filesystem::path& path,
         std::size_t max_bytes) {
        cd::export_distance_matrix(g, cd::parse_measure(measure), path, max_bytes);
      },
      py::arg("graph"), py::arg("measure"), py::arg("path"),
      py::arg("max_bytes") = cd::kDefaultMatrixBudget);

  m.attr("MEASURES") = py::make_tuple("jaccard", "otoc", "burt");
}
