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

#include "clusterdist/graph.h"

#include <algorithm>
#include <string>

namespace clusterdist {

Graph Graph::build(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count > std::size_t{UINT32_MAX}) {
    throw std::length_error("vertex count exceeds 32-bit id space");
  }
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidEdgeError("edge (" + std::to_string(u) + ", " +
                                 std::to_string(v) +
                                 ") has an endpoint outside [0, " +
                                 std::to_string(vertex_count) + ")",
                             u, v);
    }
    if (u == v) {
      throw InvalidEdgeError("self-loop (" + std::to_string(u) + ", " +
                                 std::to_string(v) + ") is not allowed",
                             u, v);
    }
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t i = 0; i < vertex_count; ++i) {
    g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  }
  std::vector<VertexId> raw(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  // Sort and deduplicate each list, then compact.
  g.targets_.reserve(raw.size());
  std::size_t out_begin = 0;
  for (std::size_t i = 0; i < vertex_count; ++i) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    g.targets_.insert(g.targets_.end(), first, last);
    g.offsets_[i] = out_begin;
    out_begin = g.targets_.size();
  }
  g.offsets_[vertex_count] = out_begin;
  g.targets_.shrink_to_fit();
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph with " +
                            std::to_string(vertex_count()) + " vertices");
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto nu = neighbors(u);
  check_vertex(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t sorted_intersection_size(std::span<const VertexId> a,
                                     std::span<const VertexId> b) {
  std::size_t count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::size_t common_neighbor_count(const Graph& g, VertexId u, VertexId v) {
  return sorted_intersection_size(g.neighbors(u), g.neighbors(v));
}

}  // namespace clusterdist
