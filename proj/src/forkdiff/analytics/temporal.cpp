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

#include "forkdiff/analytics/temporal.hpp"

#include <algorithm>

#include "forkdiff/util/error.hpp"
#include "forkdiff/util/strings.hpp"

namespace forkdiff {

double TemporalHeatmap::total() const {
  double sum = 0.0;
  for (const auto& row : cells) {
    for (double v : row) sum += v;
  }
  return sum;
}

bool BotFilter::is_bot(const std::string& user) const {
  if (!enabled) return false;
  if (extra_bots.count(user) > 0) return true;
  std::string lower = fold_lower_utf8(user);
  auto ends_with = [&](std::string_view suffix) {
    return lower.size() >= suffix.size() &&
           lower.compare(lower.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with("bot") || ends_with("бот");
}

TemporalHeatmap temporal_heatmap(const std::vector<RevisionLogEntry>& log,
                                 const BotFilter& filter,
                                 const std::string& label) {
  TemporalHeatmap heatmap;
  heatmap.label = label;
  if (log.empty()) return heatmap;

  std::array<std::array<int64_t, 24>, 7> counts{};
  UtcSeconds min_ts = log.front().timestamp;
  UtcSeconds max_ts = log.front().timestamp;
  bool any = false;
  for (const auto& entry : log) {
    if (filter.is_bot(entry.user)) continue;
    min_ts = std::min(min_ts, entry.timestamp);
    max_ts = std::max(max_ts, entry.timestamp);
    if (!any) {
      min_ts = max_ts = entry.timestamp;
      any = true;
    }
    int dow = day_of_week(entry.timestamp);
    int hour = civil_from_utc(entry.timestamp).hour;
    ++counts[dow][hour];
  }
  if (!any) return heatmap;

  // Occurrences of each (day, hour) slot between the first and last edit,
  // counted over whole hours.
  std::array<std::array<int64_t, 24>, 7> occurrences{};
  int64_t first_hour = min_ts / 3600;
  int64_t last_hour = max_ts / 3600;
  int64_t span = last_hour - first_hour + 1;
  int64_t full_weeks = span / 168;
  for (auto& row : occurrences) row.fill(full_weeks);
  for (int64_t h = first_hour + full_weeks * 168; h <= last_hour; ++h) {
    UtcSeconds ts = h * 3600;
    ++occurrences[day_of_week(ts)][civil_from_utc(ts).hour];
  }

  for (int d = 0; d < 7; ++d) {
    for (int h = 0; h < 24; ++h) {
      if (occurrences[d][h] > 0) {
        heatmap.cells[d][h] =
            static_cast<double>(counts[d][h]) / occurrences[d][h];
      } else {
        heatmap.cells[d][h] = 0.0;
      }
    }
  }
  return heatmap;
}

double office_hours_share(const TemporalHeatmap& heatmap,
                          const OfficeHours& hours) {
  double total = heatmap.total();
  if (total <= 0.0) {
    throw DataError("office_hours_share: heatmap has no edits");
  }
  double office = 0.0;
  for (int d = 0; d < 5; ++d) {  // Monday..Friday
    for (int h = hours.first_hour; h <= hours.last_hour; ++h) {
      office += heatmap.cells[d][h];
    }
  }
  return office / total;
}

}  // namespace forkdiff
