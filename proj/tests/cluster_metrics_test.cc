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

#include "clusterdist/cluster_metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "clusterdist/ppm.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace clusterdist {
namespace {

using testing::complete_graph;

double relative_gap(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

TEST(IntraClusterDensityTest, Examples) {
  const Graph triangle = complete_graph(3);
  const std::vector<VertexId> all3 = {0, 1, 2};
  const IntraDensity t = intra_cluster_density(triangle, all3);
  EXPECT_EQ(t.intra_edges, 3u);
  EXPECT_EQ(t.density, 1.0);

  const Graph empty = Graph::build(3, {});
  const IntraDensity e = intra_cluster_density(empty, all3);
  EXPECT_EQ(e.intra_edges, 0u);
  EXPECT_EQ(e.density, 0.0);
}

TEST(IntraClusterDensityTest, G1Clique) {
  const PlantedGraph p = generate_ppm({50, 45, 1.0, 0.0, 3});
  const IntraDensity d = intra_cluster_density(p.graph, p.clusters.members(17));
  EXPECT_EQ(d.intra_edges, 990u);
  EXPECT_EQ(d.density, 1.0);
}

TEST(IntraClusterDensityTest, Errors) {
  const Graph g = complete_graph(4);
  const std::vector<VertexId> one = {2};
  EXPECT_THROW(intra_cluster_density(g, one), DegenerateClusterError);
  const std::vector<VertexId> dup = {1, 1, 2};
  EXPECT_THROW(intra_cluster_density(g, dup), std::invalid_argument);
  const std::vector<VertexId> bad = {1, 9};
  EXPECT_THROW(intra_cluster_density(g, bad), std::out_of_range);
  EXPECT_THROW(mean_intra_cluster_distance(g, one, DistanceMeasure::kJaccard),
               DegenerateClusterError);
}

TEST(MeanIntraClusterDistanceTest, G1CliqueValuesExact) {
  const PlantedGraph p = generate_ppm({50, 45, 1.0, 0.0, 3});
  const auto members = p.clusters.members(0);
  EXPECT_EQ(mean_intra_cluster_distance(p.graph, members, DistanceMeasure::kJaccard), 2.0 / 45.0);
  EXPECT_EQ(mean_intra_cluster_distance(p.graph, members, DistanceMeasure::kOtsukaOchiai),
            1.0 / 44.0);
  EXPECT_EQ(mean_intra_cluster_distance(p.graph, members, DistanceMeasure::kBurt), 0.0);
}

TEST(MeanIntraClusterDistanceTest, SinglePassAgreesWithPerMeasure) {
  std::mt19937 rng(8);
  const auto rg = testing::random_graph(40, 0.3, rng);
  const std::vector<VertexId> members = {1, 4, 9, 16, 25, 36, 2, 3};
  const MeanDistances all = mean_intra_cluster_distances(rg.graph, members);
  for (DistanceMeasure m : kAllMeasures) {
    EXPECT_EQ(all[m], mean_intra_cluster_distance(rg.graph, members, m));
  }
}

TEST(ClusterSummariesTest, G1AllIdentical) {
  const PlantedGraph p = generate_ppm({50, 45, 1.0, 0.0, 11});
  const auto summaries = cluster_summaries(p.graph, p.clusters);
  ASSERT_EQ(summaries.size(), 50u);
  for (const ClusterSummary& s : summaries) {
    EXPECT_EQ(s.n_k, 45u);
    EXPECT_EQ(s.intra_edges, 990u);
    EXPECT_EQ(s.density, 1.0);
    EXPECT_EQ(s.mean_jaccard, 2.0 / 45.0);
    EXPECT_EQ(s.mean_otoc, 1.0 / 44.0);
    EXPECT_EQ(s.mean_burt, 0.0);
  }
}

TEST(ClusterSummariesTest, TwoTriangleClusters) {
  const Graph g = testing::two_triangle_graph();
  const auto a = ClusterAssignment::from_labels({0, 0, 0, 1, 1, 1});
  const auto summaries = cluster_summaries(g, a);
  ASSERT_EQ(summaries.size(), 2u);
  for (const ClusterSummary& s : summaries) {
    EXPECT_EQ(s.intra_edges, 3u);
    EXPECT_EQ(s.density, 1.0);
  }
}

TEST(ClusterSummariesTest, EdgelessSingleCluster) {
  const Graph g = Graph::build(3, {});
  const auto summaries = cluster_summaries(g, ClusterAssignment::from_labels({0, 0, 0}));
  ASSERT_EQ(summaries.size(), 1u);
  EXPECT_EQ(summaries[0].density, 0.0);
  EXPECT_EQ(summaries[0].mean_jaccard, 0.0);
  EXPECT_EQ(summaries[0].mean_otoc, 0.0);
  EXPECT_EQ(summaries[0].mean_burt, 0.0);
}

TEST(ClusterSummariesTest, SingletonClusterIsAnError) {
  const Graph g = complete_graph(3);
  EXPECT_THROW(cluster_summaries(g, ClusterAssignment::from_labels({0, 0, 1})),
               DegenerateClusterError);
  EXPECT_THROW(cluster_summaries(g, ClusterAssignment::from_labels({0, 0})),
               std::invalid_argument);
}

TEST(ClusterSummariesTest, ThreadCountDoesNotMatter) {
  const PlantedGraph p = generate_ppm({12, 20, 0.8, 0.1, 5});
  const auto a = cluster_summaries(p.graph, p.clusters, 1);
  const auto b = cluster_summaries(p.graph, p.clusters, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].mean_jaccard, b[i].mean_jaccard);
    EXPECT_EQ(a[i].mean_burt, b[i].mean_burt);
  }
}

// Naive recomputation from the dense matrix.
TEST(ClusterSummariesPropertyTest, MatchesDenseRecomputation) {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 29;
    const auto rg = testing::random_graph(n, std::uniform_real_distribution<>(0, 1)(rng), rng);
    const std::size_t k = 1 + rng() % (n / 2);
    std::vector<ClusterId> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<ClusterId>(v % k);
    std::shuffle(labels.begin(), labels.end(), rng);
    const auto assignment = ClusterAssignment::from_labels(labels, k);
    const auto summaries = cluster_summaries(rg.graph, assignment);
    for (ClusterId c = 0; c < k; ++c) {
      std::vector<std::size_t> members;
      for (std::size_t v = 0; v < n; ++v) {
        if (labels[v] == c) members.push_back(v);
      }
      std::size_t edges = 0;
      double j = 0.0, o = 0.0, b = 0.0;
      std::size_t pairs = 0;
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          edges += rg.dense[members[x]][members[y]];
          j += testing::dense_jaccard(rg.dense, members[x], members[y]);
          o += testing::dense_otoc(rg.dense, members[x], members[y]);
          b += testing::dense_burt(rg.dense, members[x], members[y]);
          ++pairs;
        }
      }
      const ClusterSummary& s = summaries[c];
      ASSERT_EQ(s.n_k, members.size());
      ASSERT_EQ(s.intra_edges, edges);
      EXPECT_LE(relative_gap(s.density, static_cast<double>(edges) / pairs), 1e-12);
      EXPECT_LE(std::abs(s.mean_jaccard - j / pairs), 1e-12);
      EXPECT_LE(std::abs(s.mean_otoc - o / pairs), 1e-12);
      EXPECT_LE(std::abs(s.mean_burt - b / pairs), 1e-12 * std::max(1.0, b / pairs));
      EXPECT_GE(s.mean_jaccard, 0.0);
      EXPECT_LE(s.mean_jaccard, 1.0);
      EXPECT_GE(s.mean_otoc, 0.0);
      EXPECT_LE(s.mean_otoc, 1.0);
    }
  }
}

TEST(ClusterSummariesPropertyTest, MemberOrderInvariant) {
  std::mt19937 rng(77);
  const auto rg = testing::random_graph(60, 0.25, rng);
  std::vector<VertexId> members(30);
  std::iota(members.begin(), members.end(), 10);
  const IntraDensity d0 = intra_cluster_density(rg.graph, members);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(members.begin(), members.end(), rng);
    const IntraDensity d = intra_cluster_density(rg.graph, members);
    EXPECT_EQ(d.intra_edges, d0.intra_edges);
    for (DistanceMeasure m : kAllMeasures) {
      std::vector<VertexId> sorted = members;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_LE(relative_gap(mean_intra_cluster_distance(rg.graph, members, m),
                             mean_intra_cluster_distance(rg.graph, sorted, m)),
                1e-12);
    }
  }
}

// Closed-form enumeration of G1's pair types: 50 * C(45, 2) intra pairs
// (Jaccard 2/45, OtOc 1/44, Burt 0) and the rest inter pairs with disjoint
// 44-neighborhoods (Jaccard 1, OtOc 1, Burt sqrt(88)).
TEST(GlobalMeanDistanceTest, G1ClosedForm) {
  const PlantedGraph p = generate_ppm({50, 45, 1.0, 0.0, 0});
  const double total = 2250.0 * 2249.0 / 2.0;
  const double intra = 50.0 * 990.0;
  const double inter = total - intra;
  const MeanDistances m = global_mean_distances(p.graph);
  EXPECT_NEAR(m.burt, inter * std::sqrt(88.0) / total, 1e-12);
  EXPECT_NEAR(m.burt, 9.1973, 1e-4);
  EXPECT_NEAR(m.jaccard, (intra * 2.0 / 45.0 + inter) / total, 1e-12);
  EXPECT_NEAR(m.jaccard, 0.981, 5e-4);
  EXPECT_NEAR(m.otoc, (intra / 44.0 + inter) / total, 1e-12);
}

TEST(GlobalMeanDistanceTest, SingleEdge) {
  const std::vector<Edge> edges = {{0, 1}};
  EXPECT_EQ(global_mean_distance(Graph::build(2, edges), DistanceMeasure::kJaccard), 1.0);
}

TEST(GlobalMeanDistanceTest, MatchesPairEnumeration) {
  std::mt19937 rng(123);
  const auto rg = testing::random_graph(70, 0.3, rng);
  double sums[3] = {0, 0, 0};
  for (std::size_t u = 0; u < 70; ++u) {
    for (std::size_t v = u + 1; v < 70; ++v) {
      sums[0] += testing::dense_jaccard(rg.dense, u, v);
      sums[1] += testing::dense_otoc(rg.dense, u, v);
      sums[2] += testing::dense_burt(rg.dense, u, v);
    }
  }
  const double pairs = 70.0 * 69.0 / 2.0;
  GlobalMeanOptions threaded;
  threaded.threads = 3;
  const MeanDistances m = global_mean_distances(rg.graph);
  EXPECT_NEAR(m.jaccard, sums[0] / pairs, 1e-12);
  EXPECT_NEAR(m.otoc, sums[1] / pairs, 1e-12);
  EXPECT_NEAR(m.burt, sums[2] / pairs, 1e-11);
  const MeanDistances t = global_mean_distances(rg.graph, threaded);
  EXPECT_EQ(t.jaccard, m.jaccard);
  EXPECT_EQ(t.burt, m.burt);
}

TEST(GlobalMeanDistanceTest, SampledEstimator) {
  const PlantedGraph p = generate_ppm({10, 20, 0.8, 0.1, 2});
  const MeanDistances exact = global_mean_distances(p.graph);
  GlobalMeanOptions full;
  full.pair_budget = 200 * 199 / 2;
  const MeanDistances all = global_mean_distances(p.graph, full);
  EXPECT_NEAR(all.jaccard, exact.jaccard, 1e-12);

  GlobalMeanOptions sampled;
  sampled.pair_budget = 5000;
  sampled.seed = 9;
  const MeanDistances est = global_mean_distances(p.graph, sampled);
  EXPECT_NEAR(est.jaccard, exact.jaccard, 0.01);
  EXPECT_NEAR(est.burt, exact.burt, 0.05 * exact.burt);
  EXPECT_EQ(global_mean_distances(p.graph, sampled).jaccard, est.jaccard);
}

TEST(GlobalMeanDistanceTest, Errors) {
  const Graph g = complete_graph(4);
  GlobalMeanOptions too_many;
  too_many.pair_budget = 7;
  EXPECT_THROW(global_mean_distances(g, too_many), std::invalid_argument);
  EXPECT_THROW(global_mean_distances(Graph::build(1, {})), DegenerateClusterError);
}

TEST(SampleVertexPairsTest, DistinctSortedAndValid) {
  const auto pairs = sample_vertex_pairs(50, 600, 4);
  ASSERT_EQ(pairs.size(), 600u);
  EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
  EXPECT_EQ(std::set<Edge>(pairs.begin(), pairs.end()).size(), 600u);
  for (const auto& [u, v] : pairs) {
    EXPECT_LT(u, v);
    EXPECT_LT(v, 50u);
  }
  const auto every = sample_vertex_pairs(5, 10, 1);
  EXPECT_EQ(every.front(), (Edge{0, 1}));
  EXPECT_EQ(every.back(), (Edge{3, 4}));
}

}  // namespace
}  // namespace clusterdist
