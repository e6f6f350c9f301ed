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

#ifndef CLUSTERDIST_CLUSTER_ASSIGNMENT_H_
#define CLUSTERDIST_CLUSTER_ASSIGNMENT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clusterdist/graph.h"

namespace clusterdist {

using ClusterId = std::uint32_t;

// Ground-truth vertex -> cluster labeling with a per-cluster member index.
// Member lists are sorted; labels and members always agree.
class ClusterAssignment {
 public:
  ClusterAssignment() = default;

  // `cluster_count` of 0 means max(label) + 1. Throws std::invalid_argument
  // if a label is >= an explicit cluster_count.
  static ClusterAssignment from_labels(std::vector<ClusterId> labels,
                                       std::size_t cluster_count = 0);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t cluster_count() const { return member_offsets_.empty() ? 0 : member_offsets_.size() - 1; }

  ClusterId label(VertexId v) const;
  std::span<const VertexId> members(ClusterId c) const;
  const std::vector<ClusterId>& labels() const { return labels_; }

  friend bool operator==(const ClusterAssignment&, const ClusterAssignment&) = default;

 private:
  std::vector<ClusterId> labels_;
  std::vector<std::size_t> member_offsets_;
  std::vector<VertexId> members_;
};

}  // namespace clusterdist

#endif  // CLUSTERDIST_CLUSTER_ASSIGNMENT_H_
