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

#ifndef CLUSTERDIST_GRAPH_H_
#define CLUSTERDIST_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clusterdist {

// Dense 0-based vertex index.
using VertexId = std::uint32_t;

// Unordered vertex pair as given by the caller.
using Edge = std::pair<VertexId, VertexId>;

// Raised when an edge list violates simple-graph rules (self-loop or
// out-of-range endpoint). Carries the offending pair.
class InvalidEdgeError : public std::invalid_argument {
 public:
  InvalidEdgeError(const std::string& what, std::uint64_t u, std::uint64_t v)
      : std::invalid_argument(what), u_(u), v_(v) {}

  std::uint64_t u() const { return u_; }
  std::uint64_t v() const { return v_; }

 private:
  std::uint64_t u_;
  std::uint64_t v_;
};

// Immutable undirected simple graph in compressed sparse row form.
//
// Every neighbor list is strictly increasing and never contains its own
// vertex (open neighborhood). Adjacency is symmetric. The object is safe to
// share across threads once constructed.
class Graph {
 public:
  Graph() = default;

  // Builds a graph over `vertex_count` vertices. Duplicate pairs (in either
  // orientation) collapse to one edge. Throws InvalidEdgeError on a
  // self-loop or an endpoint >= vertex_count.
  static Graph build(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  // Open neighborhood of `v`, sorted ascending. The span stays valid for the
  // lifetime of the graph. Throws std::out_of_range for an invalid vertex.
  std::span<const VertexId> neighbors(VertexId v) const;

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  // True when {u, v} is an edge. O(log deg(u)).
  bool has_edge(VertexId u, VertexId v) const;

  // Each undirected edge once, as (smaller, larger), in ascending order.
  std::vector<Edge> edges() const;

  // Throws std::out_of_range unless v < vertex_count().
  void check_vertex(VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

// |c_u ∩ c_v| by a linear merge of the two sorted neighbor lists.
std::size_t common_neighbor_count(const Graph& g, VertexId u, VertexId v);

// Merge kernel on raw sorted lists; exposed for the distance kernels.
std::size_t sorted_intersection_size(std::span<const VertexId> a,
                                     std::span<const VertexId> b);

}  // namespace clusterdist

#endif  // CLUSTERDIST_GRAPH_H_
