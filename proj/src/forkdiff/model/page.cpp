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

#include "forkdiff/model/page.hpp"

#include <sstream>

#include "forkdiff/util/error.hpp"
#include "forkdiff/util/fsio.hpp"

namespace forkdiff {

std::string to_string(PageStatus status) {
  switch (status) {
    case PageStatus::kDuplicated:
      return "duplicated";
    case PageStatus::kChanged:
      return "changed";
    case PageStatus::kMissing:
      return "missing";
  }
  return "duplicated";
}

PageStatus page_status_from_string(const std::string& s) {
  if (s == "duplicated") return PageStatus::kDuplicated;
  if (s == "changed") return PageStatus::kChanged;
  if (s == "missing") return PageStatus::kMissing;
  throw DataError("unknown page status: " + s);
}

nlohmann::json to_json(const RevisionMeta& rev) {
  return nlohmann::json{{"rev_id", rev.rev_id},
                        {"parent_id", rev.parent_id},
                        {"timestamp", format_iso8601(rev.timestamp)},
                        {"user", rev.user},
                        {"is_bot", rev.is_bot},
                        {"comment", rev.comment}};
}

RevisionMeta revision_from_json(const nlohmann::json& j) {
  RevisionMeta rev;
  rev.rev_id = j.at("rev_id").get<int64_t>();
  rev.parent_id = j.at("parent_id").get<int64_t>();
  rev.timestamp = parse_iso8601(j.at("timestamp").get<std::string>());
  rev.user = j.value("user", "");
  rev.is_bot = j.value("is_bot", false);
  rev.comment = j.value("comment", "");
  return rev;
}

nlohmann::json to_json(const PageRecord& record) {
  nlohmann::json j;
  j["title"] = record.title;
  j["status"] = to_string(record.status);
  if (record.fork_last_rev) j["fork_last_rev"] = to_json(*record.fork_last_rev);
  if (record.upstream_parent_rev) {
    j["upstream_parent_rev"] = to_json(*record.upstream_parent_rev);
  }
  if (record.fork_text) j["fork_text"] = *record.fork_text;
  if (record.upstream_text) j["upstream_text"] = *record.upstream_text;
  if (record.access_blocked) j["access_blocked"] = true;
  if (record.lineage_unmatched) j["lineage_unmatched"] = true;
  return j;
}

PageRecord page_record_from_json(const nlohmann::json& j) {
  PageRecord record;
  record.title = j.at("title").get<std::string>();
  record.status = page_status_from_string(j.at("status").get<std::string>());
  if (j.contains("fork_last_rev") && !j["fork_last_rev"].is_null()) {
    record.fork_last_rev = revision_from_json(j["fork_last_rev"]);
  }
  if (j.contains("upstream_parent_rev") && !j["upstream_parent_rev"].is_null()) {
    record.upstream_parent_rev = revision_from_json(j["upstream_parent_rev"]);
  }
  if (j.contains("fork_text") && !j["fork_text"].is_null()) {
    record.fork_text = j["fork_text"].get<std::string>();
  }
  if (j.contains("upstream_text") && !j["upstream_text"].is_null()) {
    record.upstream_text = j["upstream_text"].get<std::string>();
  }
  record.access_blocked = j.value("access_blocked", false);
  record.lineage_unmatched = j.value("lineage_unmatched", false);
  return record;
}

nlohmann::json to_json(const CrawlManifest& manifest) {
  return nlohmann::json{{"titles", manifest.titles},
                        {"fetched_at", format_iso8601(manifest.fetched_at)},
                        {"counts", manifest.counts}};
}

void write_page_records(const std::string& path,
                        const std::vector<PageRecord>& records) {
  std::ostringstream out;
  for (const auto& record : records) {
    out << to_json(record).dump() << '\n';
  }
  write_file_atomic(path, out.str());
}

std::vector<PageRecord> read_page_records(const std::string& path) {
  std::vector<PageRecord> records;
  for_each_line(path, [&](const std::string& line) {
    if (line.empty()) return;
    records.push_back(page_record_from_json(nlohmann::json::parse(line)));
  });
  return records;
}

}  // namespace forkdiff
