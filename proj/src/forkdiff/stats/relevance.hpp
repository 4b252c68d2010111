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
#include <string>
#include <vector>

#include <json.hpp>

#include "forkdiff/model/page.hpp"
#include "forkdiff/stats/bootstrap.hpp"
#include "forkdiff/util/time.hpp"

namespace forkdiff {

// One revision-log row; the revert label is supplied by the ingested dump,
// never computed here.
struct RevisionLogEntry {
  std::string title;
  int64_t rev_id = 0;
  UtcSeconds timestamp = 0;
  std::string user;
  bool is_ip = false;
  bool was_reverted = false;
};

struct RelevanceMetrics {
  std::string title;
  double monthly_views = 0.0;  // mean over covered months
  int64_t edit_count = 0;
  double ip_edit_rate = 0.0;   // in [0,1]; 0 for empty logs
  double revert_rate = 0.0;    // in [0,1]; 0 for empty logs
};

struct DateWindow {
  UtcSeconds begin = 0;  // inclusive
  UtcSeconds end = 0;    // exclusive
};

// Per-page metrics over one page's log entries within the window. Months
// covered by the window but absent from `views` count as zero views.
RelevanceMetrics compute_metrics(const std::vector<RevisionLogEntry>& log,
                                 const std::map<Month, int64_t>& views,
                                 const DateWindow& window,
                                 const std::string& title);

// Metric names used as keys in group estimates and reports.
inline constexpr const char* kMetricNames[] = {"monthly_views", "edit_count",
                                               "ip_edit_rate", "revert_rate"};

// One bootstrap estimate per (status group, metric). Groups with zero pages
// are omitted. The RNG stream for each cell derives from (seed, group:metric).
std::map<std::string, std::map<std::string, BootstrapEstimate>> group_estimates(
    const std::vector<RelevanceMetrics>& metrics,
    const std::map<std::string, PageStatus>& statuses,
    const BootstrapParams& params, uint64_t seed);

// Fraction of total views attributable to each status group. All zeros
// (with a diagnostic) when no views exist at all.
std::map<std::string, double> views_share(
    const std::vector<RelevanceMetrics>& metrics,
    const std::map<std::string, PageStatus>& statuses);

nlohmann::json to_json(const RevisionLogEntry& entry);
RevisionLogEntry revlog_entry_from_json(const nlohmann::json& j);

// revlog.jsonl / views.jsonl ingestion.
std::vector<RevisionLogEntry> read_revision_log(const std::string& path);
std::map<std::string, std::map<Month, int64_t>> read_views(const std::string& path);

}  // namespace forkdiff
