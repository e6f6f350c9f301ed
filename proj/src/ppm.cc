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

#include "clusterdist/ppm.h"

#include <random>
#include <stdexcept>

namespace clusterdist {
namespace {

double pairs_of(double n) { return 0.5 * n * (n - 1.0); }

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void PpmParams::validate(std::size_t max_vertices) const {
  if (num_clusters == 0) throw std::invalid_argument("num_clusters must be >= 1");
  if (cluster_size == 0) throw std::invalid_argument("cluster_size must be >= 1");
  if (!(p_intra >= 0.0 && p_intra <= 1.0)) {
    throw std::invalid_argument("p_intra must lie in [0, 1]");
  }
  if (!(p_inter >= 0.0 && p_inter <= 1.0)) {
    throw std::invalid_argument("p_inter must lie in [0, 1]");
  }
  if (num_clusters > max_vertices / cluster_size) {
    throw std::invalid_argument("num_clusters * cluster_size exceeds the limit of " +
                                std::to_string(max_vertices) + " vertices");
  }
}

PlantedGraph generate_ppm(const PpmParams& params, std::size_t max_vertices) {
  params.validate(max_vertices);
  const std::size_t n = params.vertex_count();
  const std::size_t n_k = params.cluster_size;

  std::mt19937_64 rng(params.seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t cluster_end = (i / n_k + 1) * n_k;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = j < cluster_end ? params.p_intra : params.p_inter;
      if (unit_draw(rng) < p) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }

  std::vector<ClusterId> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<ClusterId>(v / n_k);

  return {Graph::build(n, edges),
          ClusterAssignment::from_labels(std::move(labels), params.num_clusters)};
}

ExpectedEdgeCounts expected_edge_counts(const PpmParams& params) {
  const double k = static_cast<double>(params.num_clusters);
  const double n_k = static_cast<double>(params.cluster_size);
  const double intra_pairs = k * pairs_of(n_k);
  const double inter_pairs = pairs_of(k * n_k) - intra_pairs;
  return {intra_pairs * params.p_intra, inter_pairs * params.p_inter};
}

NeighborhoodGrowth expected_neighborhood_growth(const PpmParams& params) {
  const double outside = static_cast<double>(params.vertex_count() - params.cluster_size);
  return {2.0 * params.p_inter * outside, params.p_inter * params.p_inter * outside};
}

EdgeSplit count_edges_by_type(const Graph& g, const ClusterAssignment& clusters) {
  if (clusters.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("assignment does not cover the graph's vertices");
  }
  EdgeSplit split;
  for (const auto& [u, v] : g.edges()) {
    if (clusters.label(u) == clusters.label(v)) {
      ++split.intra;
    } else {
      ++split.inter;
    }
  }
  return split;
}

std::vector<NamedPpm> benchmark_graphs(std::uint64_t base_seed) {
  struct Row {
    double p_intra;
    double p_inter;
    std::size_t n_k;
  };
  static constexpr Row kRows[] = {
      {1.0, 0.0, 45},  {0.9, 0.1, 37}, {0.9, 0.15, 42}, {0.9, 0.2, 50}, {0.8, 0.1, 53},
      {0.8, 0.15, 38}, {0.8, 0.2, 44}, {0.7, 0.1, 39},  {0.7, 0.15, 46}, {0.7, 0.2, 53},
  };
  std::vector<NamedPpm> out;
  std::uint64_t index = 0;
  for (const Row& row : kRows) {
    out.push_back({"G" + std::to_string(index + 1),
                   PpmParams{50, row.n_k, row.p_intra, row.p_inter, base_seed + index}});
    ++index;
  }
  return out;
}

}  // namespace clusterdist
