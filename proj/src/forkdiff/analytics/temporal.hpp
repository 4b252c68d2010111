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

#include <array>
#include <set>
#include <string>
#include <vector>

#include "forkdiff/stats/relevance.hpp"

namespace forkdiff {

// Mean edits per (day-of-week, UTC hour) slot; day 0 = Monday. The mean
// divides each slot's edit count by the number of times that slot occurs
// in the covered date range, so a single fully-covered week gives raw
// counts.
struct TemporalHeatmap {
  std::array<std::array<double, 24>, 7> cells{};
  std::string label;

  double total() const;
};

struct BotFilter {
  bool enabled = true;
  std::set<std::string> extra_bots;  // exact usernames, case-sensitive

  // Usernames ending in "bot"/"бот" (case-insensitive) or listed above.
  bool is_bot(const std::string& user) const;
};

TemporalHeatmap temporal_heatmap(const std::vector<RevisionLogEntry>& log,
                                 const BotFilter& filter,
                                 const std::string& label);

struct OfficeHours {
  int first_hour = 8;
  int last_hour = 17;  // inclusive, 10 hourly bins by default
};

// Share of the heatmap mass on weekday cells within the office-hour band.
// Throws DataError when the heatmap is all zero.
double office_hours_share(const TemporalHeatmap& heatmap,
                          const OfficeHours& hours = {});

}  // namespace forkdiff
