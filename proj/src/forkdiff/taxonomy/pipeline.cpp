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

#include "forkdiff/taxonomy/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "forkdiff/util/error.hpp"
#include "forkdiff/util/parallel.hpp"
#include "forkdiff/util/rng.hpp"
#include "forkdiff/util/strings.hpp"

namespace forkdiff {

namespace {

constexpr const char* kOtherName = "Other changes";
constexpr const char* kOtherDescription =
    "The edit does not fit any of the provided clusters.";

void append_lines(std::string* out, const char* header,
                  const std::vector<std::string>& items) {
  if (items.empty()) return;
  *out += header;
  *out += "\n";
  for (const auto& item : items) {
    *out += "- " + item + "\n";
  }
}

template <typename Set>
void append_delta(std::string* out, const char* header, const Set& added,
                  const Set& removed) {
  if (added.empty() && removed.empty()) return;
  *out += header;
  *out += "\n";
  for (const auto& item : added) *out += "+ " + item + "\n";
  for (const auto& item : removed) *out += "- " + item + "\n";
}

// Pulls the first JSON object out of a completion, tolerating markdown
// fences and prose around it.
nlohmann::json extract_json_object(const std::string& response) {
  size_t begin = response.find('{');
  size_t end = response.rfind('}');
  if (begin == std::string::npos || end == std::string::npos || end < begin) {
    throw DataError("no JSON object in completion");
  }
  return nlohmann::json::parse(response.substr(begin, end - begin + 1));
}

int count_words(const std::string& text) {
  int words = 0;
  bool in_word = false;
  for (unsigned char c : text) {
    bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r';
    if (!space && !in_word) ++words;
    in_word = !space;
  }
  return words;
}

std::string cluster_details(const std::string& name,
                            const std::string& description) {
  return name + ": " + description;
}

}  // namespace

EditRepresentation flatten_edit(const ContentDiff& diff) {
  EditRepresentation rep;
  rep.title = diff.title;

  std::string text = "TITLE: " + diff.title + "\n";
  append_lines(&text, "ADDED:", diff.inserted);
  append_lines(&text, "DELETED:", diff.deleted);
  if (!diff.changed.empty()) {
    text += "CHANGED:\n";
    for (const auto& pair : diff.changed) {
      text += "- OLD: " + pair.old_sentence + "\n  NEW: " + pair.new_sentence + "\n";
    }
  }
  append_delta(&text, "CATEGORIES:", diff.categories_added,
               diff.categories_removed);
  append_delta(&text, "TAGS:", diff.tags_added, diff.tags_removed);
  append_delta(&text, "TEMPLATES:", diff.templates_added,
               diff.templates_removed);

  rep.flat_text = std::move(text);
  rep.eligible = diff.has_text_change() || !diff.categories_added.empty() ||
                 !diff.categories_removed.empty() || !diff.tags_added.empty() ||
                 !diff.tags_removed.empty() || !diff.templates_added.empty() ||
                 !diff.templates_removed.empty();
  return rep;
}

EditSummary summarize_edit(const EditRepresentation& rep, LlmBackend& backend,
                           const TaxonomyParams& params) {
  if (!rep.eligible) {
    throw ValidationError("summarize_edit: edit '" + rep.title +
                          "' has no covered features");
  }
  EditSummary summary;
  summary.title = rep.title;
  std::string prompt = render_prompt(
      params.prompts.summarize,
      {{"MAX_WORDS", std::to_string(params.max_words)},
       {"EDIT_STRING", rep.flat_text}});

  for (int attempt = 0; attempt < 4; ++attempt) {  // initial try + 3 retries
    std::string response = backend.complete(prompt, params.temperature);
    try {
      nlohmann::json parsed = extract_json_object(response);
      summary.text = parsed.at("desc").get<std::string>();
      summary.over_length = count_words(summary.text) > params.max_words;
      return summary;
    } catch (const std::exception&) {
      continue;
    }
  }
  summary.failed = true;
  return summary;
}

std::vector<std::vector<double>> embed_summaries(
    const std::vector<std::string>& texts, LlmBackend& backend) {
  if (texts.empty()) {
    throw ValidationError("embed_summaries: no texts");
  }
  auto vectors = backend.embed(texts);
  if (vectors.size() != texts.size()) {
    throw DataError("embedding backend returned a short batch");
  }
  size_t dim = vectors.front().size();
  for (auto& v : vectors) {
    if (v.size() != dim || dim == 0) {
      throw DataError("embedding batch has inconsistent dimensions");
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw DataError("embedding backend returned a zero vector");
    if (std::abs(norm - 1.0) > 1e-6) {
      for (double& x : v) x /= norm;
    }
  }
  return vectors;
}

std::pair<std::string, std::string> name_cluster(
    const std::vector<std::string>& member_summaries, LlmBackend& backend,
    const TaxonomyParams& params, uint64_t salt) {
  if (member_summaries.empty()) {
    throw ValidationError("name_cluster: empty cluster");
  }
  Rng rng = Rng::derive(params.seed, "name-cluster-" + std::to_string(salt));
  const size_t want = static_cast<size_t>(params.naming_sample_size);
  std::vector<std::string> samples;
  if (member_summaries.size() >= want) {
    auto perm = rng.permutation(member_summaries.size());
    for (size_t i = 0; i < want; ++i) samples.push_back(member_summaries[perm[i]]);
  } else {
    samples = member_summaries;
    while (samples.size() < want) {  // pad small clusters by resampling
      samples.push_back(member_summaries[rng.next_index(member_summaries.size())]);
    }
  }
  std::string joined;
  for (const auto& s : samples) {
    if (!joined.empty()) joined += "\n";
    joined += s;
  }
  std::string prompt = render_prompt(params.prompts.naming,
                                     {{"CLUSTER_SAMPLES", joined}});
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::string response = backend.complete(prompt, params.temperature);
    try {
      nlohmann::json parsed = extract_json_object(response);
      return {parsed.at("name").get<std::string>(),
              parsed.at("description").get<std::string>()};
    } catch (const std::exception&) {
      continue;
    }
  }
  return {"Unnamed cluster " + std::to_string(salt),
          "Edits grouped by embedding similarity."};
}

namespace {

struct JudgeOutcome {
  bool yes = false;
  bool parse_failure = false;
};

JudgeOutcome judge_fit(const std::string& summary_text,
                       const std::string& details, LlmBackend& backend,
                       const TaxonomyParams& params) {
  std::string prompt = render_prompt(params.prompts.fit,
                                     {{"EDIT_SUMMARY", summary_text},
                                      {"CLUSTER_DETAILS", details}});
  JudgeOutcome outcome;
  for (int attempt = 0; attempt < 2; ++attempt) {  // one retry
    std::string response = backend.complete(prompt, params.temperature);
    std::string token = to_lower_ascii(trim(response));
    if (!token.empty() && token.back() == '.') token.pop_back();
    if (token == "yes") {
      outcome.yes = true;
      return outcome;
    }
    if (token == "no") {
      outcome.yes = false;
      return outcome;
    }
  }
  outcome.yes = false;  // unusable replies count as a misfit
  outcome.parse_failure = true;
  return outcome;
}

BootstrapEstimate ecfr_estimate(const std::vector<double>& verdicts,
                                const TaxonomyParams& params,
                                const std::string& stream_label) {
  BootstrapParams bootstrap = params.ecfr_bootstrap;
  bootstrap.sample_size = std::min<int>(bootstrap.sample_size,
                                        static_cast<int>(verdicts.size()));
  return bootstrap_estimate(verdicts, bootstrap,
                            Rng::derive(params.seed, stream_label).next_u64());
}

}  // namespace

TaxonomyResult run_taxonomy(const std::vector<ContentDiff>& diffs,
                            LlmBackend& backend, const TaxonomyParams& params) {
  TaxonomyResult result;

  // 1. Flatten; ineligible edits leave the pipeline here.
  std::vector<EditRepresentation> reps;
  for (const auto& diff : diffs) {
    EditRepresentation rep = flatten_edit(diff);
    if (rep.eligible) {
      reps.push_back(std::move(rep));
    } else {
      ++result.ineligible_edits;
    }
  }
  const size_t n_edits = reps.size();
  result.summaries.resize(n_edits);
  if (n_edits == 0) {
    result.clusters.push_back(
        TaxonomyCluster{0, kOtherName, kOtherDescription, {}, 0.0, {}, {}});
    return result;
  }

  // 2. Summaries (concurrent, index-addressed).
  parallel_for(n_edits, params.backend_concurrency, [&](size_t i) {
    result.summaries[i] = summarize_edit(reps[i], backend, params);
  });
  std::vector<size_t> ok;  // summary indices that can be clustered
  for (size_t i = 0; i < n_edits; ++i) {
    if (result.summaries[i].failed) {
      ++result.summary_failures;
    } else {
      ok.push_back(i);
    }
  }

  // 3. Embeddings.
  if (!ok.empty()) {
    std::vector<std::string> texts;
    texts.reserve(ok.size());
    for (size_t i : ok) texts.push_back(result.summaries[i].text);
    auto vectors = embed_summaries(texts, backend);
    for (size_t j = 0; j < ok.size(); ++j) {
      result.summaries[ok[j]].embedding = std::move(vectors[j]);
    }
  }

  // 4.+5. Select k and cluster. Small or degenerate corpora collapse to a
  // single cluster.
  std::vector<int> labels(ok.size(), 0);
  int k = ok.empty() ? 0 : 1;
  if (!ok.empty()) {
    std::vector<std::vector<double>> vectors;
    vectors.reserve(ok.size());
    for (size_t i : ok) vectors.push_back(result.summaries[i].embedding);

    int k_max_eff = std::min<int>(params.k_max, static_cast<int>(ok.size()) - 1);
    if (k_max_eff >= 2) {
      SelectKOptions select_options;
      select_options.k_min = std::min(params.k_min, k_max_eff);
      select_options.k_max = k_max_eff;
      select_options.silhouette_cap = params.silhouette_cap;
      select_options.kmeans = params.kmeans;
      try {
        SelectKResult selection =
            select_k(vectors, Rng::derive(params.seed, "select-k").next_u64(),
                     select_options);
        result.silhouette_scores = selection.scores;
        k = selection.best_k;
        KMeansResult clustering = kmeans(
            vectors, k, Rng::derive(params.seed, "kmeans").next_u64(),
            params.kmeans);
        labels = clustering.labels;
      } catch (const DataError&) {
        k = 1;  // identical embeddings: one cluster
      }
    }
  }
  result.chosen_k = k;

  // Cluster membership; Other always exists with id k.
  const int other_id = k;
  result.clusters.assign(k + 1, TaxonomyCluster{});
  for (int c = 0; c <= k; ++c) result.clusters[c].id = c;
  result.clusters[other_id].name = kOtherName;
  result.clusters[other_id].description = kOtherDescription;

  result.final_assignment.assign(n_edits, other_id);
  for (size_t j = 0; j < ok.size(); ++j) {
    result.final_assignment[ok[j]] = labels[j];
    result.clusters[labels[j]].members.push_back(ok[j]);
  }
  for (size_t i = 0; i < n_edits; ++i) {
    if (result.summaries[i].failed) {
      result.clusters[other_id].members.push_back(i);
    }
  }

  // 6. Names and descriptions for the real clusters.
  for (int c = 0; c < k; ++c) {
    auto& cluster = result.clusters[c];
    if (cluster.members.empty()) continue;  // cannot happen post-refill; guard
    std::vector<std::string> member_texts;
    member_texts.reserve(cluster.members.size());
    for (size_t i : cluster.members) member_texts.push_back(result.summaries[i].text);
    auto [name, description] =
        name_cluster(member_texts, backend, params, static_cast<uint64_t>(c));
    cluster.name = name;
    cluster.description = description;
  }

  // Verdict memo: judging the same summary against the same cluster twice
  // always reuses the first verdict, which keeps the post-correction rate
  // comparable with the pre-correction one.
  std::map<std::pair<size_t, int>, bool> verdicts;
  auto judge_batch = [&](const std::vector<std::pair<size_t, int>>& pairs) {
    std::vector<std::pair<size_t, int>> todo;
    for (const auto& pair : pairs) {
      if (verdicts.find(pair) == verdicts.end()) todo.push_back(pair);
    }
    std::vector<JudgeOutcome> outcomes(todo.size());
    parallel_for(todo.size(), params.backend_concurrency, [&](size_t t) {
      const auto& [summary_idx, cluster_id] = todo[t];
      outcomes[t] = judge_fit(
          result.summaries[summary_idx].text,
          cluster_details(result.clusters[cluster_id].name,
                          result.clusters[cluster_id].description),
          backend, params);
    });
    for (size_t t = 0; t < todo.size(); ++t) {
      verdicts[todo[t]] = outcomes[t].yes;
      if (outcomes[t].parse_failure) ++result.judge_parse_failures;
    }
  };

  // 7. Pre-correction ECFR per cluster and overall.
  {
    std::vector<std::pair<size_t, int>> pairs;
    for (int c = 0; c < k; ++c) {
      for (size_t i : result.clusters[c].members) pairs.emplace_back(i, c);
    }
    judge_batch(pairs);
    int64_t total_yes = 0;
    for (int c = 0; c < k; ++c) {
      auto& cluster = result.clusters[c];
      if (cluster.members.empty()) continue;
      std::vector<double> values;
      values.reserve(cluster.members.size());
      for (size_t i : cluster.members) {
        bool yes = verdicts.at({i, c});
        values.push_back(yes ? 1.0 : 0.0);
        if (yes) ++total_yes;
      }
      cluster.ecfr_pre =
          ecfr_estimate(values, params, "ecfr-pre-" + std::to_string(c));
    }
    result.ecfr_pre_overall =
        pairs.empty() ? 0.0
                      : static_cast<double>(total_yes) /
                            static_cast<double>(pairs.size());
  }

  // 8. Correction: reassign the misfits, Other as the escape hatch.
  if (k > 0) {
    std::string all_details;
    for (int c = 0; c < k; ++c) {
      all_details += std::to_string(c) + ". " +
                     cluster_details(result.clusters[c].name,
                                     result.clusters[c].description) +
                     "\n";
    }
    if (!all_details.empty()) all_details.pop_back();

    std::vector<size_t> misfits;
    for (int c = 0; c < k; ++c) {
      for (size_t i : result.clusters[c].members) {
        if (!verdicts.at({i, c})) misfits.push_back(i);
      }
    }
    std::vector<int> targets(misfits.size(), other_id);
    std::vector<char> parse_failed(misfits.size(), 0);
    parallel_for(misfits.size(), params.backend_concurrency, [&](size_t t) {
      std::string prompt = render_prompt(
          params.prompts.reassign,
          {{"EDIT_SUMMARY", result.summaries[misfits[t]].text},
           {"ALL_CLUSTERS_DETAILS", all_details}});
      std::string response = backend.complete(prompt, params.temperature);
      // First integer in the reply is the cluster number.
      size_t pos = response.find_first_of("0123456789");
      if (pos == std::string::npos) {
        parse_failed[t] = 1;
        return;
      }
      int number = std::atoi(response.c_str() + pos);
      targets[t] = (number >= 0 && number < k) ? number : other_id;
    });
    for (size_t t = 0; t < misfits.size(); ++t) {
      if (parse_failed[t]) ++result.reassign_parse_failures;
      int target = targets[t];
      int source = result.final_assignment[misfits[t]];
      if (target == source) continue;
      auto& members = result.clusters[source].members;
      members.erase(std::find(members.begin(), members.end(), misfits[t]));
      result.clusters[target].members.push_back(misfits[t]);
      result.final_assignment[misfits[t]] = target;
    }
    for (auto& cluster : result.clusters) {
      std::sort(cluster.members.begin(), cluster.members.end());
    }
  }

  // 9. Post-correction ECFR over the final assignment (memoized verdicts
  // keep unmoved members stable).
  {
    std::vector<std::pair<size_t, int>> pairs;
    for (size_t i = 0; i < n_edits; ++i) {
      if (result.summaries[i].failed) continue;
      pairs.emplace_back(i, result.final_assignment[i]);
    }
    judge_batch(pairs);
    int64_t total_yes = 0;
    for (auto& cluster : result.clusters) {
      std::vector<double> values;
      for (size_t i : cluster.members) {
        if (result.summaries[i].failed) continue;
        bool yes = verdicts.at({i, cluster.id});
        values.push_back(yes ? 1.0 : 0.0);
        if (yes) ++total_yes;
      }
      if (!values.empty()) {
        cluster.ecfr_post = ecfr_estimate(
            values, params, "ecfr-post-" + std::to_string(cluster.id));
      }
    }
    result.ecfr_post_overall =
        pairs.empty() ? 0.0
                      : static_cast<double>(total_yes) /
                            static_cast<double>(pairs.size());
  }

  // 10. Size fractions over all eligible edits.
  for (auto& cluster : result.clusters) {
    cluster.size_fraction =
        static_cast<double>(cluster.members.size()) / static_cast<double>(n_edits);
  }
  return result;
}

nlohmann::json taxonomy_report(const TaxonomyResult& result) {
  nlohmann::json clusters = nlohmann::json::array();
  for (const auto& cluster : result.clusters) {
    nlohmann::json j{{"id", cluster.id},
                     {"name", cluster.name},
                     {"description", cluster.description},
                     {"size", cluster.members.size()},
                     {"size_fraction", cluster.size_fraction}};
    if (cluster.ecfr_pre) j["ecfr_pre"] = to_json(*cluster.ecfr_pre);
    if (cluster.ecfr_post) j["ecfr_post"] = to_json(*cluster.ecfr_post);
    clusters.push_back(std::move(j));
  }
  nlohmann::json assignments = nlohmann::json::array();
  for (size_t i = 0; i < result.summaries.size(); ++i) {
    assignments.push_back({{"title", result.summaries[i].title},
                           {"cluster_id", result.final_assignment[i]},
                           {"summary", result.summaries[i].text},
                           {"summary_failed", result.summaries[i].failed},
                           {"over_length", result.summaries[i].over_length}});
  }
  return nlohmann::json{
      {"chosen_k", result.chosen_k},
      {"silhouette_scores", result.silhouette_scores},
      {"ecfr_pre_overall", result.ecfr_pre_overall},
      {"ecfr_post_overall", result.ecfr_post_overall},
      {"clusters", clusters},
      {"assignments", assignments},
      {"diagnostics",
       {{"ineligible_edits", result.ineligible_edits},
        {"summary_failures", result.summary_failures},
        {"judge_parse_failures", result.judge_parse_failures},
        {"reassign_parse_failures", result.reassign_parse_failures}}}};
}

}  // namespace forkdiff
