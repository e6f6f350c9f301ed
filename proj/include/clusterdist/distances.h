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

// Connectivity distances between two vertices, defined on their open
// neighborhoods c_u and c_v:
//
//   Jaccard         1 - |c_u ∩ c_v| / |c_u ∪ c_v|
//   Otsuka-Ochiai   1 - |c_u ∩ c_v| / sqrt(|c_u| |c_v|)
//   Burt            sqrt(sum over w != u, v of (A_uw - A_vw)^2)
//
// Two vertices with the same neighbors are at distance 0 even when they are
// different vertices, so these are pseudometrics on vertices.
//
// Empty neighborhoods: both empty gives Jaccard = Otsuka-Ochiai = 0, exactly
// one empty gives 1. Burt needs no special case.

#ifndef CLUSTERDIST_DISTANCES_H_
#define CLUSTERDIST_DISTANCES_H_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clusterdist/graph.h"

namespace clusterdist {

enum class DistanceMeasure { kJaccard, kOtsukaOchiai, kBurt };

inline constexpr std::array<DistanceMeasure, 3> kAllMeasures = {
    DistanceMeasure::kJaccard, DistanceMeasure::kOtsukaOchiai, DistanceMeasure::kBurt};

// "jaccard", "otoc", "burt".
std::string_view measure_name(DistanceMeasure m);
// Accepts the names above plus "otsuka_ochiai" / "otsuka-ochiai".
DistanceMeasure parse_measure(std::string_view name);

// Set cardinalities that fully determine all three distances of a pair.
struct PairCounts {
  std::size_t degree_u = 0;
  std::size_t degree_v = 0;
  std::size_t common = 0;
  bool adjacent = false;
};

PairCounts pair_counts(const Graph& g, VertexId u, VertexId v);

double jaccard_from_counts(const PairCounts& c);
double otsuka_ochiai_from_counts(const PairCounts& c);
double burt_from_counts(const PairCounts& c);
double distance_from_counts(DistanceMeasure m, const PairCounts& c);

double jaccard(const Graph& g, VertexId u, VertexId v);
double otsuka_ochiai(const Graph& g, VertexId u, VertexId v);
double burt(const Graph& g, VertexId u, VertexId v);
double distance(const Graph& g, DistanceMeasure m, VertexId u, VertexId v);

struct PairDistance {
  VertexId u = 0;
  VertexId v = 0;
  double value = 0.0;

  friend bool operator==(const PairDistance&, const PairDistance&) = default;
};

// A pair in a batch request referenced an invalid vertex.
class PairDistanceError : public std::out_of_range {
 public:
  PairDistanceError(std::size_t index, Edge pair, const std::string& cause);

  std::size_t index() const { return index_; }
  Edge pair() const { return pair_; }

 private:
  std::size_t index_;
  Edge pair_;
};

// Calls sink(PairDistance) for each pair in order, computing lazily. Errors
// surface as PairDistanceError naming the position and pair.
template <typename PairRange, typename Sink>
void for_each_pair_distance(const Graph& g, DistanceMeasure m, const PairRange& pairs,
                            Sink&& sink) {
  std::size_t index = 0;
  for (const auto& [u, v] : pairs) {
    double value;
    try {
      value = distance(g, m, u, v);
    } catch (const std::out_of_range& e) {
      throw PairDistanceError(index, Edge{u, v}, e.what());
    }
    sink(PairDistance{u, v, value});
    ++index;
  }
}

// Batch form: results are in input order and do not depend on `threads`.
std::vector<PairDistance> pairwise(const Graph& g, DistanceMeasure m,
                                   std::span<const Edge> pairs, std::size_t threads = 1);

}  // namespace clusterdist

#endif  // CLUSTERDIST_DISTANCES_H_
