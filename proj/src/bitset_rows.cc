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

#include "bitset_rows.h"

#include <bit>

namespace clusterdist::internal {
namespace {

#if defined(__GNUC__) && defined(__x86_64__) && !defined(__clang__)
#define CLUSTERDIST_POPCNT_CLONES __attribute__((target_clones("popcnt", "default")))
#else
#define CLUSTERDIST_POPCNT_CLONES
#endif

CLUSTERDIST_POPCNT_CLONES
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t w = 0; w < words; ++w) count += std::popcount(a[w] & b[w]);
  return count;
}

}  // namespace

std::size_t BitsetRows::bytes_for(std::size_t vertex_count) {
  return vertex_count * ((vertex_count + 63) / 64) * sizeof(std::uint64_t);
}

BitsetRows::BitsetRows(const Graph& g) : words_((g.vertex_count() + 63) / 64) {
  bits_.assign(g.vertex_count() * words_, 0);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    std::uint64_t* out = bits_.data() + std::size_t{u} * words_;
    for (VertexId v : g.neighbors(u)) out[v / 64] |= std::uint64_t{1} << (v % 64);
  }
}

std::size_t BitsetRows::common(VertexId u, VertexId v) const {
  return and_popcount(row(u).data(), row(v).data(), words_);
}

}  // namespace clusterdist::internal
