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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

namespace forkdiff {

struct BootstrapParams {
  int n_resamples = 10000;
  int sample_size = 1000;
  double confidence = 0.95;
};

struct BootstrapEstimate {
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  int n_resamples = 0;
  int sample_size = 0;
  double confidence = 0.95;
};

// Resampling-with-replacement estimate of a mean. Each of n_resamples
// resamples draws sample_size values (with replacement; sample_size may
// exceed the input size); the reported mean is the grand mean of resample
// means and the interval is the empirical quantile pair at
// (1-confidence)/2 and 1-(1-confidence)/2. Resample r draws from an RNG
// stream derived as (seed, r), so results are independent of evaluation
// order and reproducible for a fixed seed.
BootstrapEstimate bootstrap_estimate(std::span<const double> values,
                                     const BootstrapParams& params,
                                     uint64_t seed);

// Quantile with linear interpolation between order statistics (the
// "type 7" convention). `sorted` must be ascending.
double quantile_sorted(const std::vector<double>& sorted, double q);

nlohmann::json to_json(const BootstrapEstimate& estimate);

}  // namespace forkdiff
