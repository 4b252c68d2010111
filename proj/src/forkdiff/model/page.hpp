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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "forkdiff/util/time.hpp"

namespace forkdiff {

enum class PageStatus { kDuplicated, kChanged, kMissing };

std::string to_string(PageStatus status);
PageStatus page_status_from_string(const std::string& s);

struct RevisionMeta {
  int64_t rev_id = 0;     // > 0
  int64_t parent_id = 0;  // 0 = root revision
  UtcSeconds timestamp = 0;
  std::string user;
  bool is_bot = false;
  std::string comment;

  friend bool operator==(const RevisionMeta&, const RevisionMeta&) = default;
};

// One fork/upstream page pair. Presence of the optional fields follows the
// status: missing pages carry no fork data, changed pages carry both texts.
struct PageRecord {
  std::string title;
  PageStatus status = PageStatus::kDuplicated;
  std::optional<RevisionMeta> fork_last_rev;
  std::optional<RevisionMeta> upstream_parent_rev;
  std::optional<std::string> fork_text;
  std::optional<std::string> upstream_text;
  // Sub-flag for pages pooled into `missing` because access was blocked
  // rather than the page being deleted.
  bool access_blocked = false;
  // Lineage walk found no common (rev_id, parent_id) pair.
  bool lineage_unmatched = false;
};

struct CrawlManifest {
  std::vector<std::string> titles;
  UtcSeconds fetched_at = 0;
  std::map<std::string, int64_t> counts;  // status name -> count
};

nlohmann::json to_json(const RevisionMeta& rev);
RevisionMeta revision_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PageRecord& record);
PageRecord page_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CrawlManifest& manifest);

// pages.jsonl round-trip.
void write_page_records(const std::string& path,
                        const std::vector<PageRecord>& records);
std::vector<PageRecord> read_page_records(const std::string& path);

}  // namespace forkdiff
