# Copyright 2026 The clusterdist Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Neighborhood-overlap vertex distances and cluster metrics."""

from clusterdist._clusterdist import (
    MEASURES,
    ClusterAssignment,
    ClusterSummary,
    Graph,
    PpmParams,
    benchmark_graphs,
    burt,
    cluster_summaries,
    count_edges_by_type,
    distance,
    expected_edge_counts,
    export_distance_matrix,
    generate_ppm,
    global_mean_distances,
    jaccard,
    load_cluster_assignment,
    load_edge_list,
    otsuka_ochiai,
    pairwise,
    pearson,
    pooled,
    run_experiment,
    save_cluster_assignment,
    save_edge_list,
)

__all__ = [
    "MEASURES",
    "ClusterAssignment",
    "ClusterSummary",
    "Graph",
    "PpmParams",
    "benchmark_graphs",
    "burt",
    "cluster_summaries",
    "count_edges_by_type",
    "distance",
    "expected_edge_counts",
    "export_distance_matrix",
    "generate_ppm",
    "global_mean_distances",
    "jaccard",
    "load_cluster_assignment",
    "load_edge_list",
    "otsuka_ochiai",
    "pairwise",
    "pearson",
    "pooled",
    "run_experiment",
    "save_cluster_assignment",
    "save_edge_list",
]
