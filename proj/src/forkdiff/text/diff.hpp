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

#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "forkdiff/model/page.hpp"
#include "forkdiff/text/wikitext.hpp"

namespace forkdiff {

// Default pairing threshold; a pair is accepted only when similarity is
// strictly greater.
inline constexpr double kDefaultSimilarityThreshold = 0.6;

struct ChangedPair {
  std::string old_sentence;
  std::string new_sentence;
  double similarity = 0.0;

  friend bool operator==(const ChangedPair&, const ChangedPair&) = default;
};

// Reference deltas are keyed by registrable domain; the URLs seen on the
// respective side are retained per domain.
using DomainDelta = std::map<std::string, std::vector<std::string>>;

struct ContentDiff {
  std::string title;
  std::vector<std::string> inserted;
  std::vector<std::string> deleted;
  std::vector<ChangedPair> changed;
  std::set<std::string> categories_added;
  std::set<std::string> categories_removed;
  DomainDelta references_added;
  DomainDelta references_removed;
  std::set<std::string> media_added;
  std::set<std::string> media_removed;
  std::set<std::string> templates_added;
  std::set<std::string> templates_removed;
  std::set<std::string> tags_added;
  std::set<std::string> tags_removed;

  bool empty() const;
  bool has_text_change() const;
};

struct PairingResult {
  std::vector<ChangedPair> pairs;
  std::vector<std::string> residual_inserted;
  std::vector<std::string> residual_deleted;
};

// Greedy best-first matching of inserted vs deleted sentences. The highest
// cross similarity strictly above the threshold is accepted first, both
// sentences retire, and the scan repeats; ties break on the earlier deleted
// index, then the earlier inserted index.
PairingResult pair_changed(const std::vector<std::string>& inserted,
                           const std::vector<std::string>& deleted,
                           double threshold);

// Structural delta of two wikitext documents; the first is the base.
ContentDiff diff_texts(const std::string& title, const std::string& base_text,
                       const std::string& fork_text, double threshold);

// Diff of a crawled pair. Requires status == changed with both texts.
ContentDiff diff_pages(const PageRecord& record,
                       double threshold = kDefaultSimilarityThreshold);

nlohmann::json to_json(const ContentDiff& diff);
ContentDiff content_diff_from_json(const nlohmann::json& j);

void write_content_diffs(const std::string& path,
                         const std::vector<ContentDiff>& diffs);
std::vector<ContentDiff> read_content_diffs(const std::string& path);

}  // namespace forkdiff
