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

// Dense bit-packed adjacency rows for all-pairs sweeps. Intersection size
// becomes an AND + popcount over |V|/64 words, which beats the sorted merge
// once average degree is more than a few percent of |V|.

#ifndef CLUSTERDIST_SRC_BITSET_ROWS_H_
#define CLUSTERDIST_SRC_BITSET_ROWS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clusterdist/graph.h"

namespace clusterdist::internal {

class BitsetRows {
 public:
  explicit BitsetRows(const Graph& g);

  // Bytes a BitsetRows for `vertex_count` vertices would occupy.
  static std::size_t bytes_for(std::size_t vertex_count);

  std::size_t common(VertexId u, VertexId v) const;
  bool test(VertexId u, VertexId v) const {
    return (row(u)[v / 64] >> (v % 64)) & 1u;
  }

 private:
  std::span<const std::uint64_t> row(VertexId v) const {
    return {bits_.data() + std::size_t{v} * words_, words_};
  }

  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace clusterdist::internal

#endif  // CLUSTERDIST_SRC_BITSET_ROWS_H_
