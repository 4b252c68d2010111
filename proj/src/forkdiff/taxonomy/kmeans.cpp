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

#include "forkdiff/taxonomy/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "forkdiff/util/error.hpp"
#include "forkdiff/util/rng.hpp"

namespace forkdiff {

namespace {

// Row-major contiguous copy for cache-friendly inner loops.
struct Matrix {
  std::vector<double> data;
  size_t rows = 0;
  size_t cols = 0;

  const double* row(size_t r) const { return data.data() + r * cols; }
  double* row(size_t r) { return data.data() + r * cols; }
};

Matrix pack(const std::vector<std::vector<double>>& vectors) {
  Matrix m;
  m.rows = vectors.size();
  m.cols = vectors.empty() ? 0 : vectors.front().size();
  m.data.resize(m.rows * m.cols);
  for (size_t r = 0; r < m.rows; ++r) {
    if (vectors[r].size() != m.cols) {
      throw ValidationError("kmeans: ragged input vectors");
    }
    std::copy(vectors[r].begin(), vectors[r].end(), m.row(r));
  }
  return m;
}

double squared_distance(const double* a, const double* b, size_t d) {
  double sum = 0.0;
  for (size_t i = 0; i < d; ++i) {
    double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

// D^2-weighted k-means++ seeding.
Matrix seed_centroids(const Matrix& points, int k, Rng* rng) {
  const size_t n = points.rows;
  const size_t d = points.cols;
  Matrix centroids;
  centroids.rows = static_cast<size_t>(k);
  centroids.cols = d;
  centroids.data.resize(centroids.rows * d);

  size_t first = rng->next_index(n);
  std::copy(points.row(first), points.row(first) + d, centroids.row(0));

  std::vector<double> best_dist(n);
  for (size_t i = 0; i < n; ++i) {
    best_dist[i] = squared_distance(points.row(i), centroids.row(0), d);
  }
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (double w : best_dist) total += w;
    size_t chosen;
    if (total <= 0.0) {
      chosen = rng->next_index(n);  // all points coincide with a centroid
    } else {
      double target = rng->next_double() * total;
      double acc = 0.0;
      chosen = n - 1;
      for (size_t i = 0; i < n; ++i) {
        acc += best_dist[i];
        if (acc >= target) {
          chosen = i;
          break;
        }
      }
    }
    std::copy(points.row(chosen), points.row(chosen) + d, centroids.row(c));
    for (size_t i = 0; i < n; ++i) {
      best_dist[i] = std::min(
          best_dist[i], squared_distance(points.row(i), centroids.row(c), d));
    }
  }
  return centroids;
}

struct SingleRun {
  std::vector<int> labels;
  Matrix centroids;
  double inertia = 0.0;
  std::vector<double> inertia_history;
};

SingleRun lloyd(const Matrix& points, int k, Rng rng, int max_iter) {
  const size_t n = points.rows;
  const size_t d = points.cols;
  SingleRun run;
  run.centroids = seed_centroids(points, k, &rng);
  run.labels.assign(n, -1);

  std::vector<double> sums(static_cast<size_t>(k) * d);
  std::vector<int64_t> counts(k);
  std::vector<double> point_dist(n);

  for (int iter = 0; iter < max_iter; ++iter) {
    bool any_change = false;
    double inertia = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      int best_c = 0;
      for (int c = 0; c < k; ++c) {
        double dist = squared_distance(points.row(i), run.centroids.row(c), d);
        if (dist < best) {
          best = dist;
          best_c = c;
        }
      }
      if (run.labels[i] != best_c) {
        run.labels[i] = best_c;
        any_change = true;
      }
      point_dist[i] = best;
      inertia += best;
    }
    run.inertia = inertia;
    run.inertia_history.push_back(inertia);
    if (!any_change) break;

    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), int64_t{0});
    for (size_t i = 0; i < n; ++i) {
      double* sum = sums.data() + static_cast<size_t>(run.labels[i]) * d;
      const double* p = points.row(i);
      for (size_t j = 0; j < d; ++j) sum[j] += p[j];
      ++counts[run.labels[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        double* centroid = run.centroids.row(c);
        const double* sum = sums.data() + static_cast<size_t>(c) * d;
        for (size_t j = 0; j < d; ++j) centroid[j] = sum[j] / counts[c];
      } else {
        // Refill an empty cluster with the worst-fitted point.
        size_t farthest = 0;
        for (size_t i = 1; i < n; ++i) {
          if (point_dist[i] > point_dist[farthest]) farthest = i;
        }
        std::copy(points.row(farthest), points.row(farthest) + d,
                  run.centroids.row(c));
        point_dist[farthest] = 0.0;
      }
    }
  }
  return run;
}

}  // namespace

KMeansResult kmeans(const std::vector<std::vector<double>>& vectors, int k,
                    uint64_t seed, const KMeansOptions& options) {
  if (k < 1) throw ValidationError("kmeans: k must be >= 1");
  if (vectors.size() < static_cast<size_t>(k)) {
    throw ValidationError("kmeans: k exceeds the number of vectors");
  }
  Matrix points = pack(vectors);

  SingleRun best;
  bool have_best = false;
  for (int init = 0; init < std::max(1, options.n_init); ++init) {
    SingleRun run = lloyd(points, k, Rng::derive(seed, static_cast<uint64_t>(init)),
                          options.max_iter);
    if (!have_best || run.inertia < best.inertia) {
      best = std::move(run);
      have_best = true;
    }
  }

  KMeansResult result;
  result.labels = std::move(best.labels);
  result.inertia = best.inertia;
  result.inertia_history = std::move(best.inertia_history);
  result.centroids.resize(k);
  for (int c = 0; c < k; ++c) {
    result.centroids[c].assign(best.centroids.row(c),
                               best.centroids.row(c) + best.centroids.cols);
  }
  return result;
}

double silhouette_score(const std::vector<std::vector<double>>& vectors,
                        const std::vector<int>& labels) {
  if (vectors.size() != labels.size() || vectors.empty()) {
    throw ValidationError("silhouette: labels must match vectors");
  }
  Matrix points = pack(vectors);
  const size_t n = points.rows;
  int k = 0;
  for (int label : labels) {
    if (label < 0) throw ValidationError("silhouette: negative label");
    k = std::max(k, label + 1);
  }
  std::vector<int64_t> cluster_sizes(k);
  for (int label : labels) ++cluster_sizes[label];

  bool any_positive_distance = false;
  double total = 0.0;
  std::vector<double> sums(k);
  for (size_t i = 0; i < n; ++i) {
    std::fill(sums.begin(), sums.end(), 0.0);
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double dist = std::sqrt(
          squared_distance(points.row(i), points.row(j), points.cols));
      if (dist > 0.0) any_positive_distance = true;
      sums[labels[j]] += dist;
    }
    int own = labels[i];
    if (cluster_sizes[own] <= 1) continue;  // singleton contributes 0
    double a = sums[own] / static_cast<double>(cluster_sizes[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      if (c == own || cluster_sizes[c] == 0) continue;
      b = std::min(b, sums[c] / static_cast<double>(cluster_sizes[c]));
    }
    if (!std::isfinite(b)) continue;  // single non-empty cluster
    double denom = std::max(a, b);
    if (denom > 0.0) total += (b - a) / denom;
  }
  if (!any_positive_distance) {
    throw DataError("silhouette: all points identical, score undefined");
  }
  return total / static_cast<double>(n);
}

SelectKResult select_k(const std::vector<std::vector<double>>& vectors,
                       uint64_t seed, const SelectKOptions& options) {
  if (options.k_min < 2 || options.k_max < options.k_min) {
    throw ValidationError("select_k: bad k range");
  }
  if (vectors.size() <= static_cast<size_t>(options.k_max)) {
    throw ValidationError("select_k: need more vectors than the largest k");
  }

  // Seeded subsample used only for silhouette evaluation.
  const size_t n = vectors.size();
  std::vector<size_t> eval_indices(n);
  for (size_t i = 0; i < n; ++i) eval_indices[i] = i;
  if (n > static_cast<size_t>(options.silhouette_cap)) {
    Rng rng = Rng::derive(seed, "silhouette-subsample");
    eval_indices = rng.permutation(n);
    eval_indices.resize(static_cast<size_t>(options.silhouette_cap));
    std::sort(eval_indices.begin(), eval_indices.end());
  }
  std::vector<std::vector<double>> eval_vectors;
  eval_vectors.reserve(eval_indices.size());
  for (size_t idx : eval_indices) eval_vectors.push_back(vectors[idx]);

  // One pairwise distance matrix shared by every k; float keeps the
  // worst case (5000 points) near 100 MB.
  Matrix eval_points = pack(eval_vectors);
  const size_t m = eval_points.rows;
  std::vector<float> dist(m * m, 0.0f);
  bool any_positive_distance = false;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      float dij = static_cast<float>(std::sqrt(squared_distance(
          eval_points.row(i), eval_points.row(j), eval_points.cols)));
      dist[i * m + j] = dij;
      dist[j * m + i] = dij;
      if (dij > 0.0f) any_positive_distance = true;
    }
  }
  if (!any_positive_distance) {
    throw DataError("select_k: all points identical, silhouette undefined");
  }

  auto silhouette_from_matrix = [&](const std::vector<int>& labels, int k) {
    std::vector<int64_t> cluster_sizes(k);
    for (int label : labels) ++cluster_sizes[label];
    double total = 0.0;
    std::vector<double> sums(k);
    for (size_t i = 0; i < m; ++i) {
      std::fill(sums.begin(), sums.end(), 0.0);
      const float* row = dist.data() + i * m;
      for (size_t j = 0; j < m; ++j) sums[labels[j]] += row[j];
      int own = labels[i];
      if (cluster_sizes[own] <= 1) continue;
      double a = sums[own] / static_cast<double>(cluster_sizes[own] - 1);
      double b = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        if (c == own || cluster_sizes[c] == 0) continue;
        b = std::min(b, sums[c] / static_cast<double>(cluster_sizes[c]));
      }
      if (!std::isfinite(b)) continue;
      double denom = std::max(a, b);
      if (denom > 0.0) total += (b - a) / denom;
    }
    return total / static_cast<double>(m);
  };

  SelectKResult result;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int k = options.k_min; k <= options.k_max; ++k) {
    KMeansResult clustering =
        kmeans(vectors, k, Rng::derive(seed, "k=" + std::to_string(k)).next_u64(),
               options.kmeans);
    std::vector<int> eval_labels;
    eval_labels.reserve(eval_indices.size());
    for (size_t idx : eval_indices) eval_labels.push_back(clustering.labels[idx]);
    double score = silhouette_from_matrix(eval_labels, k);
    result.scores.push_back(score);
    if (score > best_score) {  // strict: ties keep the smaller k
      best_score = score;
      result.best_k = k;
    }
  }
  return result;
}

}  // namespace forkdiff
