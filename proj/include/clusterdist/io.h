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

// Text formats for graphs and ground-truth clusterings.
//
// Edge list: one edge per line as two whitespace-separated non-negative
// integers. Lines starting with '#' are comments and blank lines are
// skipped. An optional `%% vertices N` header fixes the vertex count;
// without it the count is max id + 1.
//
// Cluster assignment: one `vertex cluster` pair per line, same comment
// rules. Every vertex in [0, n) must appear exactly once.

#ifndef CLUSTERDIST_IO_H_
#define CLUSTERDIST_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterdist/cluster_assignment.h"
#include "clusterdist/graph.h"

namespace clusterdist {

// Malformed input. what() is prefixed with "<source>:<line>: ".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListOptions {
  // Compact arbitrary ids to 0..n-1 in ascending id order. The header, if
  // any, is ignored in this mode.
  bool remap_ids = false;
};

struct EdgeListData {
  Graph graph;
  // original_ids[v] is the file id of dense vertex v. Empty unless remapped.
  std::vector<std::uint64_t> original_ids;
};

EdgeListData read_edge_list(std::istream& in, const EdgeListOptions& options = {},
                            const std::string& source = "<stream>");
Graph load_edge_list(const std::filesystem::path& path);
EdgeListData load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options);

// Writes the header plus each edge once as "u v" with u < v.
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

// Writes "original dense" pairs for a remapped load.
void save_id_mapping(const std::vector<std::uint64_t>& original_ids,
                     const std::filesystem::path& path);

ClusterAssignment read_cluster_assignment(std::istream& in,
                                          const std::string& source = "<stream>");
ClusterAssignment load_cluster_assignment(const std::filesystem::path& path);
void write_cluster_assignment(const ClusterAssignment& a, std::ostream& out);
void save_cluster_assignment(const ClusterAssignment& a, const std::filesystem::path& path);

}  // namespace clusterdist

#endif  // CLUSTERDIST_IO_H_
