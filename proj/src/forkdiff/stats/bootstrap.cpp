// Copyright 2026 The forkdiff Authors
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

#include "forkdiff/stats/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "forkdiff/util/error.hpp"
#include "forkdiff/util/rng.hpp"

namespace forkdiff {

double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw ValidationError("quantile of empty vector");
  if (q <= 0.0) return sorted.front();
  if (q >= 1.0) return sorted.back();
  double pos = q * static_cast<double>(sorted.size() - 1);
  size_t lo = static_cast<size_t>(std::floor(pos));
  size_t hi = static_cast<size_t>(std::ceil(pos));
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

BootstrapEstimate bootstrap_estimate(std::span<const double> values,
                                     const BootstrapParams& params,
                                     uint64_t seed) {
  if (values.empty()) {
    throw ValidationError("bootstrap_estimate: empty value list");
  }
  if (params.n_resamples < 1 || params.sample_size < 1) {
    throw ValidationError("bootstrap_estimate: resamples and sample size must be positive");
  }
  if (params.confidence <= 0.0 || params.confidence >= 1.0) {
    throw ValidationError("bootstrap_estimate: confidence must be in (0,1)");
  }

  const size_t n = values.size();
  std::vector<double> resample_means(params.n_resamples);
  for (int r = 0; r < params.n_resamples; ++r) {
    Rng rng = Rng::derive(seed, static_cast<uint64_t>(r));
    double sum = 0.0;
    for (int i = 0; i < params.sample_size; ++i) {
      sum += values[rng.next_index(n)];
    }
    resample_means[r] = sum / static_cast<double>(params.sample_size);
  }

  double grand = 0.0;
  for (double m : resample_means) grand += m;
  grand /= static_cast<double>(resample_means.size());

  std::vector<double> sorted = resample_means;
  std::sort(sorted.begin(), sorted.end());
  double alpha = 1.0 - params.confidence;

  BootstrapEstimate estimate;
  estimate.mean = grand;
  estimate.ci_low = quantile_sorted(sorted, alpha / 2.0);
  estimate.ci_high = quantile_sorted(sorted, 1.0 - alpha / 2.0);
  estimate.n_resamples = params.n_resamples;
  estimate.sample_size = params.sample_size;
  estimate.confidence = params.confidence;
  return estimate;
}

nlohmann::json to_json(const BootstrapEstimate& estimate) {
  return nlohmann::json{{"mean", estimate.mean},
                        {"ci_low", estimate.ci_low},
                        {"ci_high", estimate.ci_high},
                        {"n_resamples", estimate.n_resamples},
                        {"sample_size", estimate.sample_size},
                        {"confidence", estimate.confidence}};
}

}  // namespace forkdiff
