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

#include "clusterdist/distances.h"

#include <algorithm>
#include <cmath>

#include "clusterdist/parallel.h"

namespace clusterdist {

std::string_view measure_name(DistanceMeasure m) {
  switch (m) {
    case DistanceMeasure::kJaccard:
      return "jaccard";
    case DistanceMeasure::kOtsukaOchiai:
      return "otoc";
    case DistanceMeasure::kBurt:
      return "burt";
  }
  return "unknown";
}

DistanceMeasure parse_measure(std::string_view name) {
  if (name == "jaccard") return DistanceMeasure::kJaccard;
  if (name == "otoc" || name == "otsuka_ochiai" || name == "otsuka-ochiai") {
    return DistanceMeasure::kOtsukaOchiai;
  }
  if (name == "burt") return DistanceMeasure::kBurt;
  throw std::invalid_argument("unknown distance measure '" + std::string(name) +
                              "' (expected jaccard, otoc or burt)");
}

PairCounts pair_counts(const Graph& g, VertexId u, VertexId v) {
  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  PairCounts c;
  c.degree_u = nu.size();
  c.degree_v = nv.size();
  c.common = sorted_intersection_size(nu, nv);
  c.adjacent = std::binary_search(nu.begin(), nu.end(), v);
  return c;
}

// The ratios are evaluated as (den - num) / den rather than 1 - num / den:
// integer differences are exact, so e.g. a clique pair gives exactly 2/n.
double jaccard_from_counts(const PairCounts& c) {
  const std::size_t union_size = c.degree_u + c.degree_v - c.common;
  if (union_size == 0) return 0.0;
  return static_cast<double>(union_size - c.common) / static_cast<double>(union_size);
}

double otsuka_ochiai_from_counts(const PairCounts& c) {
  if (c.degree_u == 0 && c.degree_v == 0) return 0.0;
  if (c.degree_u == 0 || c.degree_v == 0) return 1.0;
  const double scale =
      std::sqrt(static_cast<double>(c.degree_u) * static_cast<double>(c.degree_v));
  return (scale - static_cast<double>(c.common)) / scale;
}

double burt_from_counts(const PairCounts& c) {
  // |c_u Δ c_v| counts v (in c_u) and u (in c_v) when the pair is adjacent;
  // those two coordinates are excluded from the sum.
  const std::size_t symmetric_difference = c.degree_u + c.degree_v - 2 * c.common;
  return std::sqrt(static_cast<double>(symmetric_difference - (c.adjacent ? 2 : 0)));
}

double distance_from_counts(DistanceMeasure m, const PairCounts& c) {
  switch (m) {
    case DistanceMeasure::kJaccard:
      return jaccard_from_counts(c);
    case DistanceMeasure::kOtsukaOchiai:
      return otsuka_ochiai_from_counts(c);
    case DistanceMeasure::kBurt:
      return burt_from_counts(c);
  }
  throw std::invalid_argument("unknown distance measure");
}

double jaccard(const Graph& g, VertexId u, VertexId v) {
  return jaccard_from_counts(pair_counts(g, u, v));
}

double otsuka_ochiai(const Graph& g, VertexId u, VertexId v) {
  return otsuka_ochiai_from_counts(pair_counts(g, u, v));
}

double burt(const Graph& g, VertexId u, VertexId v) {
  return burt_from_counts(pair_counts(g, u, v));
}

double distance(const Graph& g, DistanceMeasure m, VertexId u, VertexId v) {
  return distance_from_counts(m, pair_counts(g, u, v));
}

PairDistanceError::PairDistanceError(std::size_t index, Edge pair, const std::string& cause)
    : std::out_of_range("pair #" + std::to_string(index) + " (" + std::to_string(pair.first) +
                        ", " + std::to_string(pair.second) + "): " + cause),
      index_(index),
      pair_(pair) {}

std::vector<PairDistance> pairwise(const Graph& g, DistanceMeasure m,
                                   std::span<const Edge> pairs, std::size_t threads) {
  std::vector<PairDistance> out(pairs.size());
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (pairs.size() + kBlock - 1) / kBlock;
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t end = std::min(pairs.size(), (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) {
      const auto [u, v] = pairs[i];
      try {
        out[i] = PairDistance{u, v, distance(g, m, u, v)};
      } catch (const std::out_of_range& e) {
        throw PairDistanceError(i, pairs[i], e.what());
      }
    }
  });
  return out;
}

}  // namespace clusterdist
