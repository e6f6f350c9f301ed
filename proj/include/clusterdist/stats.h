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

#ifndef CLUSTERDIST_STATS_H_
#define CLUSTERDIST_STATS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clusterdist {

// Variances at or below this are treated as zero.
inline constexpr double kZeroVarianceThreshold = 1e-15;

struct CorrelationResult {
  // Empty when a series is constant; reports print it as "NA".
  std::optional<double> rho;
  std::size_t n_points = 0;

  bool defined() const { return rho.has_value(); }
};

// Sample Pearson coefficient, two-pass (mean-centred), clamped to [-1, 1].
// Throws std::invalid_argument on length mismatch or fewer than two points.
CorrelationResult pearson(std::span<const double> xs, std::span<const double> ys);

struct PointSet {
  std::vector<double> xs;
  std::vector<double> ys;
};

enum class PoolingMode {
  // Concatenate every set, then one coefficient.
  kConcatenate,
  // Arithmetic mean of the per-set coefficients that are defined.
  kMeanOfCoefficients,
};

CorrelationResult pooled(std::span<const PointSet> sets,
                         PoolingMode mode = PoolingMode::kConcatenate);

// "NA" or the value with `digits` significant digits.
std::string format_rho(const CorrelationResult& r, int digits = 6);

}  // namespace clusterdist

#endif  // CLUSTERDIST_STATS_H_
