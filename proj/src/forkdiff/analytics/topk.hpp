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

#include <string>
#include <vector>

#include "forkdiff/text/diff.hpp"

namespace forkdiff {

struct RankedChange {
  std::string key;   // category name or reference domain
  int64_t count = 0; // diffs containing the change (per-page dedup)
  double pct = 0.0;  // of non-empty diffs
};

struct TopChanges {
  std::vector<RankedChange> added;
  std::vector<RankedChange> removed;
  // Both candidate denominators are reported so consumers can pick either
  // convention: every changed page, or only pages with a non-empty delta.
  int64_t denominator_changed_pages = 0;
  int64_t denominator_pages_with_edits = 0;
};

// Top-k added/removed categories across diffs, ranked by count then name.
// Percentages use the pages-with-any-edit denominator.
TopChanges top_category_changes(const std::vector<ContentDiff>& diffs, int k);

// Top-k added/removed reference domains. A domain counts once per page per
// side regardless of how many URLs it contributed.
TopChanges top_reference_changes(const std::vector<ContentDiff>& diffs, int k);

}  // namespace forkdiff
