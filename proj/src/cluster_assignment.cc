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

#include "clusterdist/cluster_assignment.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace clusterdist {

ClusterAssignment ClusterAssignment::from_labels(std::vector<ClusterId> labels,
                                                 std::size_t cluster_count) {
  if (cluster_count == 0 && !labels.empty()) {
    cluster_count = std::size_t{*std::max_element(labels.begin(), labels.end())} + 1;
  }
  ClusterAssignment a;
  a.member_offsets_.assign(cluster_count + 1, 0);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] >= cluster_count) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has cluster " +
                                  std::to_string(labels[v]) + " >= cluster count " +
                                  std::to_string(cluster_count));
    }
    ++a.member_offsets_[labels[v] + 1];
  }
  for (std::size_t c = 0; c < cluster_count; ++c) {
    a.member_offsets_[c + 1] += a.member_offsets_[c];
  }
  a.members_.resize(labels.size());
  std::vector<std::size_t> fill(a.member_offsets_.begin(), a.member_offsets_.end() - 1);
  // Ascending vertex order keeps every member list sorted.
  for (std::size_t v = 0; v < labels.size(); ++v) {
    a.members_[fill[labels[v]]++] = static_cast<VertexId>(v);
  }
  a.labels_ = std::move(labels);
  return a;
}

ClusterId ClusterAssignment::label(VertexId v) const {
  if (v >= labels_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " is not labeled");
  }
  return labels_[v];
}

std::span<const VertexId> ClusterAssignment::members(ClusterId c) const {
  if (c >= cluster_count()) {
    throw std::out_of_range("cluster " + std::to_string(c) + " out of range");
  }
  return {members_.data() + member_offsets_[c],
          member_offsets_[c + 1] - member_offsets_[c]};
}

}  // namespace clusterdist
