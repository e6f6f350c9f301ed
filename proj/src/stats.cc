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

#include "clusterdist/stats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "clusterdist/summation.h"

namespace clusterdist {
namespace {

double mean_of(std::span<const double> v) {
  CompensatedSum s;
  for (double x : v) s.add(x);
  return s.value() / static_cast<double>(v.size());
}

}  // namespace

CorrelationResult pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument(fmt::format("series lengths differ ({} vs {})", xs.size(), ys.size()));
  }
  if (xs.size() < 2) {
    throw std::invalid_argument(fmt::format("need at least 2 points, got {}", xs.size()));
  }
  const double mx = mean_of(xs);
  const double my = mean_of(ys);
  CompensatedSum sxx;
  CompensatedSum syy;
  CompensatedSum sxy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx.add(dx * dx);
    syy.add(dy * dy);
    sxy.add(dx * dy);
  }
  CorrelationResult r;
  r.n_points = xs.size();
  const double n = static_cast<double>(xs.size());
  if (sxx.value() / n <= kZeroVarianceThreshold || syy.value() / n <= kZeroVarianceThreshold) {
    return r;
  }
  const double rho = sxy.value() / (std::sqrt(sxx.value()) * std::sqrt(syy.value()));
  r.rho = std::clamp(rho, -1.0, 1.0);
  return r;
}

CorrelationResult pooled(std::span<const PointSet> sets, PoolingMode mode) {
  if (mode == PoolingMode::kMeanOfCoefficients) {
    CompensatedSum sum;
    std::size_t defined = 0;
    CorrelationResult out;
    for (const PointSet& s : sets) {
      if (s.xs.empty() && s.ys.empty()) continue;
      const CorrelationResult r = pearson(s.xs, s.ys);
      out.n_points += r.n_points;
      if (r.rho) {
        sum.add(*r.rho);
        ++defined;
      }
    }
    if (out.n_points < 2) throw std::invalid_argument("pooling needs at least 2 points");
    if (defined > 0) out.rho = sum.value() / static_cast<double>(defined);
    return out;
  }

  std::vector<double> xs;
  std::vector<double> ys;
  for (const PointSet& s : sets) {
    if (s.xs.size() != s.ys.size()) throw std::invalid_argument("point set with unequal series");
    xs.insert(xs.end(), s.xs.begin(), s.xs.end());
    ys.insert(ys.end(), s.ys.begin(), s.ys.end());
  }
  if (xs.size() < 2) throw std::invalid_argument("pooling needs at least 2 points");
  return pearson(xs, ys);
}

std::string format_rho(const CorrelationResult& r, int digits) {
  if (!r.rho) return "NA";
  return fmt::format("{:.{}g}", *r.rho, digits);
}

}  // namespace clusterdist
