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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "forkdiff/stats/bootstrap.hpp"
#include "forkdiff/taxonomy/backend.hpp"
#include "forkdiff/taxonomy/kmeans.hpp"
#include "forkdiff/taxonomy/prompts.hpp"
#include "forkdiff/text/diff.hpp"

namespace forkdiff {

// Single-string rendering of an edit. Covered features are text changes
// plus category/tag/template deltas; edits without any covered feature are
// ineligible and leave the pipeline.
struct EditRepresentation {
  std::string title;
  std::string flat_text;
  bool eligible = false;
};

EditRepresentation flatten_edit(const ContentDiff& diff);

struct EditSummary {
  std::string title;
  std::string text;
  std::vector<double> embedding;
  bool over_length = false;   // exceeded the word limit, accepted anyway
  bool failed = false;        // summarization failed, routed to Other
};

struct TaxonomyParams {
  uint64_t seed = 42;
  int k_min = 2;
  int k_max = 15;
  int max_words = 40;
  int naming_sample_size = 20;
  int silhouette_cap = 5000;
  KMeansOptions kmeans;
  BootstrapParams ecfr_bootstrap;  // sample_size is clamped per cluster
  int backend_concurrency = 1;
  PromptSet prompts = PromptSet::defaults();
  double temperature = 0.0;
};

struct TaxonomyCluster {
  int id = 0;  // 0..k-1, Other uses k
  std::string name;
  std::string description;
  std::vector<size_t> members;  // indices into the summaries vector
  double size_fraction = 0.0;
  std::optional<BootstrapEstimate> ecfr_pre;
  std::optional<BootstrapEstimate> ecfr_post;
};

struct TaxonomyResult {
  int chosen_k = 0;
  std::vector<double> silhouette_scores;
  std::vector<EditSummary> summaries;      // one per eligible edit
  std::vector<TaxonomyCluster> clusters;   // k clusters + trailing Other
  std::vector<int> final_assignment;       // summary index -> cluster id
  double ecfr_pre_overall = 0.0;
  double ecfr_post_overall = 0.0;
  int64_t ineligible_edits = 0;
  int64_t summary_failures = 0;
  int64_t judge_parse_failures = 0;
  int64_t reassign_parse_failures = 0;
};

// Individually exposed steps (the full run composes them in order).

// Summary text for one eligible edit: renders the summarization prompt,
// parses the {"desc": ...} reply, retries malformed JSON up to 3 times.
EditSummary summarize_edit(const EditRepresentation& rep, LlmBackend& backend,
                           const TaxonomyParams& params);

// Unit-norm embeddings for the given texts; re-normalizes locally when the
// backend's norm drifts by more than 1e-6 and rejects ragged dimensions.
std::vector<std::vector<double>> embed_summaries(
    const std::vector<std::string>& texts, LlmBackend& backend);

// Name + description from a seeded sample of up to `naming_sample_size`
// member summaries (padded by resampling when the cluster is smaller).
std::pair<std::string, std::string> name_cluster(
    const std::vector<std::string>& member_summaries, LlmBackend& backend,
    const TaxonomyParams& params, uint64_t salt);

// Full pipeline: flatten -> summarize -> embed -> select k -> k-means ->
// name -> ECFR -> correction -> final ECFR and sizes.
TaxonomyResult run_taxonomy(const std::vector<ContentDiff>& diffs,
                            LlmBackend& backend, const TaxonomyParams& params);

nlohmann::json taxonomy_report(const TaxonomyResult& result);

}  // namespace forkdiff
