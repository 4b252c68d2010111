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

#include "forkdiff/stats/relevance.hpp"

#include "forkdiff/util/error.hpp"
#include "forkdiff/util/fsio.hpp"
#include "forkdiff/util/rng.hpp"
#include "forkdiff/util/strings.hpp"

namespace forkdiff {

RelevanceMetrics compute_metrics(const std::vector<RevisionLogEntry>& log,
                                 const std::map<Month, int64_t>& views,
                                 const DateWindow& window,
                                 const std::string& title) {
  if (window.end <= window.begin) {
    throw ValidationError("compute_metrics: empty date window");
  }
  RelevanceMetrics m;
  m.title = title;

  int64_t in_window = 0;
  int64_t ip_edits = 0;
  int64_t reverted = 0;
  for (const auto& entry : log) {
    if (entry.timestamp < window.begin || entry.timestamp >= window.end) continue;
    ++in_window;
    if (entry.is_ip) ++ip_edits;
    if (entry.was_reverted) ++reverted;
  }
  m.edit_count = in_window;
  // Rates on an empty log are defined as zero so group aggregation stays
  // total.
  m.ip_edit_rate = in_window > 0 ? static_cast<double>(ip_edits) / in_window : 0.0;
  m.revert_rate = in_window > 0 ? static_cast<double>(reverted) / in_window : 0.0;

  Month first = month_of(window.begin);
  Month last = month_of(window.end - 1);
  int n_months = months_between(first, last);
  int64_t total_views = 0;
  for (Month month = first; month <= last; month = month.next()) {
    auto it = views.find(month);
    if (it != views.end()) total_views += it->second;
  }
  m.monthly_views =
      n_months > 0 ? static_cast<double>(total_views) / n_months : 0.0;
  return m;
}

std::map<std::string, std::map<std::string, BootstrapEstimate>> group_estimates(
    const std::vector<RelevanceMetrics>& metrics,
    const std::map<std::string, PageStatus>& statuses,
    const BootstrapParams& params, uint64_t seed) {
  std::map<std::string, std::map<std::string, std::vector<double>>> grouped;
  for (const auto& m : metrics) {
    auto it = statuses.find(m.title);
    if (it == statuses.end()) {
      throw ValidationError("group_estimates: no status for page '" + m.title + "'");
    }
    auto& group = grouped[to_string(it->second)];
    group["monthly_views"].push_back(m.monthly_views);
    group["edit_count"].push_back(static_cast<double>(m.edit_count));
    group["ip_edit_rate"].push_back(m.ip_edit_rate);
    group["revert_rate"].push_back(m.revert_rate);
  }

  std::map<std::string, std::map<std::string, BootstrapEstimate>> out;
  for (const auto& [group, by_metric] : grouped) {
    for (const auto& [metric, values] : by_metric) {
      out[group][metric] = bootstrap_estimate(
          values, params, Rng::derive(seed, group + ":" + metric).next_u64());
    }
  }
  return out;
}

std::map<std::string, double> views_share(
    const std::vector<RelevanceMetrics>& metrics,
    const std::map<std::string, PageStatus>& statuses) {
  std::map<std::string, double> totals;
  double grand_total = 0.0;
  for (const auto& m : metrics) {
    auto it = statuses.find(m.title);
    if (it == statuses.end()) {
      throw ValidationError("views_share: no status for page '" + m.title + "'");
    }
    totals[to_string(it->second)] += m.monthly_views;
    grand_total += m.monthly_views;
  }
  std::map<std::string, double> shares;
  for (const auto& [group, total] : totals) {
    shares[group] = grand_total > 0.0 ? total / grand_total : 0.0;
  }
  return shares;
}

nlohmann::json to_json(const RevisionLogEntry& entry) {
  return nlohmann::json{{"title", entry.title},
                        {"rev_id", entry.rev_id},
                        {"timestamp", format_iso8601(entry.timestamp)},
                        {"user", entry.user},
                        {"is_ip", entry.is_ip},
                        {"was_reverted", entry.was_reverted}};
}

RevisionLogEntry revlog_entry_from_json(const nlohmann::json& j) {
  RevisionLogEntry entry;
  entry.title = j.at("title").get<std::string>();
  entry.rev_id = j.value("rev_id", int64_t{0});
  entry.timestamp = parse_iso8601(j.at("timestamp").get<std::string>());
  entry.user = j.value("user", "");
  // The IP flag may be supplied; otherwise it is derived from the username.
  entry.is_ip = j.contains("is_ip") ? j["is_ip"].get<bool>()
                                    : is_ip_literal(entry.user);
  entry.was_reverted = j.value("was_reverted", false);
  return entry;
}

std::vector<RevisionLogEntry> read_revision_log(const std::string& path) {
  std::vector<RevisionLogEntry> entries;
  for_each_line(path, [&](const std::string& line) {
    if (line.empty()) return;
    entries.push_back(revlog_entry_from_json(nlohmann::json::parse(line)));
  });
  return entries;
}

std::map<std::string, std::map<Month, int64_t>> read_views(
    const std::string& path) {
  std::map<std::string, std::map<Month, int64_t>> views;
  for_each_line(path, [&](const std::string& line) {
    if (line.empty()) return;
    nlohmann::json j = nlohmann::json::parse(line);
    views[j.at("title").get<std::string>()]
         [Month::parse(j.at("month").get<std::string>())] =
             j.at("count").get<int64_t>();
  });
  return views;
}

}  // namespace forkdiff
