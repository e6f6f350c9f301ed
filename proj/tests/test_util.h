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

// Shared fixtures and brute-force oracles. Oracles here work on dense 0/1
// adjacency matrices and never call into the sparse kernels they check.

#ifndef CLUSTERDIST_TESTS_TEST_UTIL_H_
#define CLUSTERDIST_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "clusterdist/graph.h"

namespace clusterdist::testing {

using DenseAdjacency = std::vector<std::vector<int>>;

// Two triangles {v1, v2, v3} and {v4, v5, v6} bridged by v3-v4, with
// v1..v6 mapped to ids 0..5.
inline Graph two_triangle_graph() {
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
  return Graph::build(6, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::build(n, edges);
}

// Erdos-Renyi G(n, p) drawn with std::bernoulli_distribution; returns both
// the sparse graph and the dense matrix it came from.
struct RandomGraph {
  Graph graph;
  DenseAdjacency dense;
};

inline RandomGraph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  RandomGraph out;
  out.dense.assign(n, std::vector<int>(n, 0));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        out.dense[i][j] = out.dense[j][i] = 1;
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  out.graph = Graph::build(n, edges);
  return out;
}

inline std::size_t dense_common(const DenseAdjacency& a, std::size_t u, std::size_t v) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < a.size(); ++k) count += a[u][k] && a[v][k];
  return count;
}

inline std::size_t dense_degree(const DenseAdjacency& a, std::size_t u) {
  std::size_t d = 0;
  for (int x : a[u]) d += x;
  return d;
}

inline std::size_t dense_union(const DenseAdjacency& a, std::size_t u, std::size_t v) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < a.size(); ++k) count += a[u][k] || a[v][k];
  return count;
}

inline double dense_jaccard(const DenseAdjacency& a, std::size_t u, std::size_t v) {
  const std::size_t uni = dense_union(a, u, v);
  if (uni == 0) return 0.0;
  return 1.0 - static_cast<double>(dense_common(a, u, v)) / static_cast<double>(uni);
}

inline double dense_otoc(const DenseAdjacency& a, std::size_t u, std::size_t v) {
  const double du = static_cast<double>(dense_degree(a, u));
  const double dv = static_cast<double>(dense_degree(a, v));
  if (du == 0 && dv == 0) return 0.0;
  if (du == 0 || dv == 0) return 1.0;
  return 1.0 - static_cast<double>(dense_common(a, u, v)) / std::sqrt(du * dv);
}

// Burt's distance straight from the definition: squared row differences
// summed over every coordinate except u and v.
inline std::size_t dense_burt_squared(const DenseAdjacency& a, std::size_t u, std::size_t v) {
  std::size_t sum = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == u || k == v) continue;
    const int d = a[u][k] - a[v][k];
    sum += static_cast<std::size_t>(d * d);
  }
  return sum;
}

inline double dense_burt(const DenseAdjacency& a, std::size_t u, std::size_t v) {
  return std::sqrt(static_cast<double>(dense_burt_squared(a, u, v)));
}

}  // namespace clusterdist::testing

#endif  // CLUSTERDIST_TESTS_TEST_UTIL_H_
