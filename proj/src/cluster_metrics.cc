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
#include <random>
#include <string>
#include <unordered_set>

#include "bitset_rows.h"
#include "clusterdist/parallel.h"
#include "clusterdist/summation.h"

namespace clusterdist {
namespace {

// Above this the all-pairs sweep falls back to sorted merges.
constexpr std::size_t kMaxBitsetBytes = std::size_t{512} << 20;

std::vector<VertexId> sorted_members(const Graph& g, std::span<const VertexId> members) {
  if (members.size() < 2) {
    throw DegenerateClusterError("cluster has " + std::to_string(members.size()) +
                                 " member(s); at least 2 are required");
  }
  std::vector<VertexId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cluster members must be distinct");
  }
  g.check_vertex(sorted.back());
  return sorted;
}

double pair_count(std::size_t n) { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); }

struct TripleSum {
  CompensatedSum jaccard;
  CompensatedSum otoc;
  CompensatedSum burt;

  void add(const PairCounts& c) {
    jaccard.add(jaccard_from_counts(c));
    otoc.add(otsuka_ochiai_from_counts(c));
    burt.add(burt_from_counts(c));
  }

  void add(const TripleSum& other) {
    jaccard.add(other.jaccard);
    otoc.add(other.otoc);
    burt.add(other.burt);
  }

  MeanDistances mean(double count) const {
    return {jaccard.value() / count, otoc.value() / count, burt.value() / count};
  }
};

MeanDistances mean_over_members(const Graph& g, std::span<const VertexId> members) {
  const auto sorted = sorted_members(g, members);
  TripleSum sum;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      sum.add(pair_counts(g, sorted[i], sorted[j]));
    }
  }
  return sum.mean(pair_count(sorted.size()));
}

// Unbiased draw from [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Row offset of the lexicographic pair index: pairs (i, *) start here.
std::uint64_t row_offset(std::uint64_t n, std::uint64_t i) { return i * (2 * n - i - 1) / 2; }

Edge pair_from_index(std::uint64_t n, std::uint64_t index) {
  std::uint64_t lo = 0;
  std::uint64_t hi = n - 1;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (row_offset(n, mid) <= index) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const std::uint64_t j = lo + 1 + (index - row_offset(n, lo));
  return {static_cast<VertexId>(lo), static_cast<VertexId>(j)};
}

}  // namespace

IntraDensity intra_cluster_density(const Graph& g, std::span<const VertexId> members) {
  const auto sorted = sorted_members(g, members);
  std::size_t endpoint_hits = 0;
  for (VertexId u : sorted) endpoint_hits += sorted_intersection_size(g.neighbors(u), sorted);
  IntraDensity out;
  out.intra_edges = endpoint_hits / 2;
  out.density = static_cast<double>(out.intra_edges) / pair_count(sorted.size());
  return out;
}

double MeanDistances::operator[](DistanceMeasure m) const {
  switch (m) {
    case DistanceMeasure::kJaccard:
      return jaccard;
    case DistanceMeasure::kOtsukaOchiai:
      return otoc;
    case DistanceMeasure::kBurt:
      return burt;
  }
  throw std::invalid_argument("unknown distance measure");
}

double mean_intra_cluster_distance(const Graph& g, std::span<const VertexId> members,
                                   DistanceMeasure m) {
  const auto sorted = sorted_members(g, members);
  CompensatedSum sum;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      sum.add(distance(g, m, sorted[i], sorted[j]));
    }
  }
  return sum.value() / pair_count(sorted.size());
}

MeanDistances mean_intra_cluster_distances(const Graph& g, std::span<const VertexId> members) {
  return mean_over_members(g, members);
}

double ClusterSummary::mean(DistanceMeasure m) const {
  return MeanDistances{mean_jaccard, mean_otoc, mean_burt}[m];
}

std::vector<ClusterSummary> cluster_summaries(const Graph& g, const ClusterAssignment& clusters,
                                              std::size_t threads) {
  if (clusters.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("assignment labels " + std::to_string(clusters.vertex_count()) +
                                " vertices but the graph has " +
                                std::to_string(g.vertex_count()));
  }
  for (ClusterId c = 0; c < clusters.cluster_count(); ++c) {
    if (clusters.members(c).size() < 2) {
      throw DegenerateClusterError("cluster " + std::to_string(c) + " has " +
                                   std::to_string(clusters.members(c).size()) +
                                   " member(s); at least 2 are required");
    }
  }
  std::vector<ClusterSummary> out(clusters.cluster_count());
  parallel_for(out.size(), threads, [&](std::size_t c) {
    const auto members = clusters.members(static_cast<ClusterId>(c));
    const IntraDensity density = intra_cluster_density(g, members);
    const MeanDistances means = mean_over_members(g, members);
    out[c] = ClusterSummary{static_cast<ClusterId>(c), members.size(), density.intra_edges,
                            density.density, means.jaccard, means.otoc, means.burt};
  });
  return out;
}

std::vector<Edge> sample_vertex_pairs(std::size_t vertex_count, std::uint64_t count,
                                      std::uint64_t seed) {
  const std::uint64_t n = vertex_count;
  const std::uint64_t total = n < 2 ? 0 : n * (n - 1) / 2;
  if (count > total) {
    throw std::invalid_argument("pair budget " + std::to_string(count) + " exceeds the " +
                                std::to_string(total) + " available vertex pairs");
  }
  // Floyd's sampling without replacement.
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(count);
  for (std::uint64_t j = total - count; j < total; ++j) {
    const std::uint64_t t = bounded_draw(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> indices(chosen.begin(), chosen.end());
  std::sort(indices.begin(), indices.end());
  std::vector<Edge> pairs;
  pairs.reserve(indices.size());
  for (std::uint64_t index : indices) pairs.push_back(pair_from_index(n, index));
  return pairs;
}

MeanDistances global_mean_distances(const Graph& g, const GlobalMeanOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw DegenerateClusterError("global mean needs at least 2 vertices");

  if (options.pair_budget) {
    if (*options.pair_budget == 0) throw std::invalid_argument("pair budget must be positive");
    const auto pairs = sample_vertex_pairs(n, *options.pair_budget, options.seed);
    TripleSum sum;
    for (const auto& [u, v] : pairs) sum.add(pair_counts(g, u, v));
    return sum.mean(static_cast<double>(pairs.size()));
  }

  // One partial sum per row, folded in row order: the result is the same
  // for any worker count.
  std::vector<TripleSum> rows(n - 1);
  if (internal::BitsetRows::bytes_for(n) <= kMaxBitsetBytes) {
    const internal::BitsetRows bits(g);
    parallel_for(n - 1, options.threads, [&](std::size_t i) {
      const auto u = static_cast<VertexId>(i);
      TripleSum& row = rows[i];
      for (auto v = static_cast<VertexId>(i + 1); v < n; ++v) {
        row.add(PairCounts{g.degree(u), g.degree(v), bits.common(u, v), bits.test(u, v)});
      }
    });
  } else {
    parallel_for(n - 1, options.threads, [&](std::size_t i) {
      const auto u = static_cast<VertexId>(i);
      for (auto v = static_cast<VertexId>(i + 1); v < n; ++v) rows[i].add(pair_counts(g, u, v));
    });
  }
  TripleSum total;
  for (const TripleSum& row : rows) total.add(row);
  return total.mean(pair_count(n));
}

double global_mean_distance(const Graph& g, DistanceMeasure m, const GlobalMeanOptions& options) {
  return global_mean_distances(g, options)[m];
}

}  // namespace clusterdist
