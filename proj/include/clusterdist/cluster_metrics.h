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

#ifndef CLUSTERDIST_CLUSTER_METRICS_H_
#define CLUSTERDIST_CLUSTER_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "clusterdist/cluster_assignment.h"
#include "clusterdist/distances.h"
#include "clusterdist/graph.h"

namespace clusterdist {

// A cluster too small for pair statistics (fewer than two members).
class DegenerateClusterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct IntraDensity {
  std::size_t intra_edges = 0;
  // intra_edges / C(n_k, 2).
  double density = 0.0;
};

// `members` must be distinct valid vertices, at least two of them.
IntraDensity intra_cluster_density(const Graph& g, std::span<const VertexId> members);

struct MeanDistances {
  double jaccard = 0.0;
  double otoc = 0.0;
  double burt = 0.0;

  double operator[](DistanceMeasure m) const;
};

// Mean over all C(n_k, 2) unordered member pairs, compensated summation.
double mean_intra_cluster_distance(const Graph& g, std::span<const VertexId> members,
                                   DistanceMeasure m);
// All three means from a single pass over the pairs.
MeanDistances mean_intra_cluster_distances(const Graph& g, std::span<const VertexId> members);

struct ClusterSummary {
  ClusterId cluster_id = 0;
  std::size_t n_k = 0;
  std::size_t intra_edges = 0;
  double density = 0.0;
  double mean_jaccard = 0.0;
  double mean_otoc = 0.0;
  double mean_burt = 0.0;

  double mean(DistanceMeasure m) const;
};

// One summary per cluster, in cluster-id order. Throws
// DegenerateClusterError naming the first cluster with n_k < 2.
std::vector<ClusterSummary> cluster_summaries(const Graph& g, const ClusterAssignment& clusters,
                                              std::size_t threads = 1);

struct GlobalMeanOptions {
  // Absent: every one of the C(|V|, 2) pairs. Present: a uniform sample of
  // that many distinct pairs drawn with `seed` (an estimator).
  std::optional<std::uint64_t> pair_budget;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

// Mean distance over vertex pairs regardless of cluster membership.
MeanDistances global_mean_distances(const Graph& g, const GlobalMeanOptions& options = {});
double global_mean_distance(const Graph& g, DistanceMeasure m,
                            const GlobalMeanOptions& options = {});

// The sampled pairs used by the estimator, sorted lexicographically. Exposed
// for inspection and tests.
std::vector<Edge> sample_vertex_pairs(std::size_t vertex_count, std::uint64_t count,
                                      std::uint64_t seed);

}  // namespace clusterdist

#endif  // CLUSTERDIST_CLUSTER_METRICS_H_
