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
#include <vector>

namespace forkdiff {

struct KMeansOptions {
  int max_iter = 300;
  int n_init = 10;
};

struct KMeansResult {
  std::vector<int> labels;
  std::vector<std::vector<double>> centroids;
  double inertia = 0.0;
  // Inertia after each Lloyd iteration of the winning initialization;
  // non-increasing by construction.
  std::vector<double> inertia_history;
};

// Lloyd's algorithm with k-means++ seeding, Euclidean metric, best of
// n_init restarts by inertia. Deterministic for a fixed seed: restart r
// uses the RNG stream derived from (seed, r). Empty clusters are refilled
// with the point currently farthest from its centroid.
KMeansResult kmeans(const std::vector<std::vector<double>>& vectors, int k,
                    uint64_t seed, const KMeansOptions& options = {});

// Mean silhouette coefficient over all points (Euclidean). Singleton
// clusters contribute 0. Throws DataError when every pairwise distance is
// zero, where the coefficient is undefined.
double silhouette_score(const std::vector<std::vector<double>>& vectors,
                        const std::vector<int>& labels);

struct SelectKOptions {
  int k_min = 2;
  int k_max = 15;
  // Silhouette is evaluated on a seeded subsample of at most this many
  // points; clustering itself always runs on the full set.
  int silhouette_cap = 5000;
  KMeansOptions kmeans;
};

struct SelectKResult {
  int best_k = 0;
  std::vector<double> scores;  // silhouette per k, index 0 = k_min
};

// Scans k in [k_min, k_max], picking the k that maximizes the mean
// silhouette; ties go to the smaller k. Requires |vectors| > k_max.
SelectKResult select_k(const std::vector<std::vector<double>>& vectors,
                       uint64_t seed, const SelectKOptions& options = {});

}  // namespace forkdiff
