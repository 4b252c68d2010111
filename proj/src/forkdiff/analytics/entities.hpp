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
#include <memory>
#include <string>
#include <vector>

#include "forkdiff/text/diff.hpp"

namespace forkdiff {

enum class EntityLabel { kLoc, kOrg, kPer, kMisc };

std::string to_string(EntityLabel label);
EntityLabel entity_label_from_string(const std::string& s);

struct NamedEntity {
  std::string surface;
  EntityLabel label = EntityLabel::kMisc;
  std::string lemma;  // deduplication key, never empty
};

// Pluggable recognizer. Implementations must be deterministic for a fixed
// input text.
class EntityRecognizer {
 public:
  virtual ~EntityRecognizer() = default;
  virtual std::vector<NamedEntity> recognize(const std::string& text) const = 0;
};

// Baseline recognizer backed by a surface -> (lemma, label) table with
// longest-match lookup, plus a capitalized-token fallback tagged MISC.
class GazetteerRecognizer : public EntityRecognizer {
 public:
  // TSV rows: surface <TAB> lemma <TAB> label(LOC|ORG|PER|MISC).
  static GazetteerRecognizer from_tsv(const std::string& path);
  // Empty gazetteer: fallback behaviour only.
  GazetteerRecognizer() = default;

  void add(const std::string& surface, const std::string& lemma,
           EntityLabel label);

  std::vector<NamedEntity> recognize(const std::string& text) const override;

 private:
  struct GazetteerEntry {
    std::string lemma;
    EntityLabel label;
  };
  // Keyed by lowercased surface token sequence.
  std::map<std::vector<std::string>, GazetteerEntry> entries_;
  size_t max_entry_tokens_ = 0;
};

// Adapter for an external recognizer service: POST {"text": ...} returning
// [{"surface","label","lemma","start","end"}].
class HttpRecognizer : public EntityRecognizer {
 public:
  HttpRecognizer(std::string base_url, std::string path);
  std::vector<NamedEntity> recognize(const std::string& text) const override;

 private:
  std::string base_url_;
  std::string path_;
};

struct EntityCount {
  std::string lemma;
  EntityLabel label = EntityLabel::kMisc;
  int64_t count = 0;  // pages mentioning the lemma on that side
  double pct = 0.0;   // of pages with any text change
};

struct EntityDeltas {
  std::vector<EntityCount> added;
  std::vector<EntityCount> deleted;
  int64_t pages_with_text_changes = 0;
  int64_t pages_skipped = 0;  // recognizer failures
};

// Entities in deleted text (deleted sentences + old sides of changed pairs)
// and added text (inserted + new sides), deduplicated by lemma per page and
// side, ranked by page count. Recognizer failures skip the page and are
// counted in diagnostics.
EntityDeltas entity_deltas(const std::vector<ContentDiff>& diffs,
                           const EntityRecognizer& recognizer, int k);

}  // namespace forkdiff
