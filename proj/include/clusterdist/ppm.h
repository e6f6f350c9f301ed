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

// Planted-partition graph generator.
//
// Vertices are laid out cluster by cluster: cluster c owns the contiguous
// range [c * n_k, (c + 1) * n_k). Pairs (i, j), i < j, are visited in
// lexicographic order and each consumes exactly one draw from a
// std::mt19937_64 seeded with `seed`. The draw u = (x >> 11) * 2^-53 is
// uniform on [0, 1) and the pair becomes an edge iff u < p. Both the engine
// and the conversion are fully specified, so output is reproducible across
// platforms and standard libraries.

#ifndef CLUSTERDIST_PPM_H_
#define CLUSTERDIST_PPM_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clusterdist/cluster_assignment.h"
#include "clusterdist/graph.h"

namespace clusterdist {

struct PpmParams {
  std::size_t num_clusters = 1;
  std::size_t cluster_size = 1;
  double p_intra = 0.0;
  double p_inter = 0.0;
  std::uint64_t seed = 0;

  std::size_t vertex_count() const { return num_clusters * cluster_size; }

  // Throws std::invalid_argument when k or n_k is zero, a probability lies
  // outside [0, 1], or k * n_k exceeds `max_vertices`.
  void validate(std::size_t max_vertices) const;

  friend bool operator==(const PpmParams&, const PpmParams&) = default;
};

inline constexpr std::size_t kDefaultMaxVertices = 200'000;

struct PlantedGraph {
  Graph graph;
  ClusterAssignment clusters;
};

PlantedGraph generate_ppm(const PpmParams& params,
                          std::size_t max_vertices = kDefaultMaxVertices);

struct ExpectedEdgeCounts {
  double intra = 0.0;
  double inter = 0.0;
};

// k * C(n_k, 2) * p_intra and p_inter * (C(k n_k, 2) - k C(n_k, 2)).
ExpectedEdgeCounts expected_edge_counts(const PpmParams& params);

// Diagnostic growth rates of a vertex pair's degree sum and shared-neighbor
// count as p_inter moves away from zero:
//   degree_rate = 2 p_inter (|V| - n_k),  shared_rate = p_inter^2 (|V| - n_k).
// The widening gap between them explains why Jaccard and Otsuka-Ochiai
// means drift towards 1 as clusters get noisier.
struct NeighborhoodGrowth {
  double degree_rate = 0.0;
  double shared_rate = 0.0;
};

NeighborhoodGrowth expected_neighborhood_growth(const PpmParams& params);

// Splits the edge set of a planted graph into intra- and inter-cluster
// counts.
struct EdgeSplit {
  std::size_t intra = 0;
  std::size_t inter = 0;
};

EdgeSplit count_edges_by_type(const Graph& g, const ClusterAssignment& clusters);

// The ten benchmark graphs, named "G1".."G10": k = 50 with per-graph
// (p_intra, p_inter, n_k). Seeds are base_seed + index.
struct NamedPpm {
  std::string name;
  PpmParams params;
};

std::vector<NamedPpm> benchmark_graphs(std::uint64_t base_seed = 0);

}  // namespace clusterdist

#endif  // CLUSTERDIST_PPM_H_
