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

#include "forkdiff/analytics/topk.hpp"

#include <algorithm>
#include <map>

#include "forkdiff/util/error.hpp"

namespace forkdiff {

namespace {

std::vector<RankedChange> rank(const std::map<std::string, int64_t>& counts,
                               int k, int64_t denominator) {
  std::vector<RankedChange> ranked;
  ranked.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    RankedChange change;
    change.key = key;
    change.count = count;
    change.pct = denominator > 0
                     ? 100.0 * static_cast<double>(count) / denominator
                     : 0.0;
    ranked.push_back(std::move(change));
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedChange& a, const RankedChange& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.key < b.key;
            });
  if (static_cast<int>(ranked.size()) > k) ranked.resize(k);
  return ranked;
}

template <typename AddedFn, typename RemovedFn>
TopChanges top_changes(const std::vector<ContentDiff>& diffs, int k,
                       AddedFn added_keys, RemovedFn removed_keys) {
  if (k < 1) throw ValidationError("top changes: k must be >= 1");
  std::map<std::string, int64_t> added;
  std::map<std::string, int64_t> removed;
  TopChanges top;
  top.denominator_changed_pages = static_cast<int64_t>(diffs.size());
  for (const auto& diff : diffs) {
    if (!diff.empty()) ++top.denominator_pages_with_edits;
    for (const auto& key : added_keys(diff)) ++added[key];
    for (const auto& key : removed_keys(diff)) ++removed[key];
  }
  top.added = rank(added, k, top.denominator_pages_with_edits);
  top.removed = rank(removed, k, top.denominator_pages_with_edits);
  return top;
}

std::vector<std::string> delta_domains(const DomainDelta& delta) {
  std::vector<std::string> keys;
  keys.reserve(delta.size());
  for (const auto& [domain, urls] : delta) keys.push_back(domain);
  return keys;
}

}  // namespace

TopChanges top_category_changes(const std::vector<ContentDiff>& diffs, int k) {
  return top_changes(
      diffs, k,
      [](const ContentDiff& d) {
        return std::vector<std::string>(d.categories_added.begin(),
                                        d.categories_added.end());
      },
      [](const ContentDiff& d) {
        return std::vector<std::string>(d.categories_removed.begin(),
                                        d.categories_removed.end());
      });
}

TopChanges top_reference_changes(const std::vector<ContentDiff>& diffs, int k) {
  return top_changes(
      diffs, k,
      [](const ContentDiff& d) { return delta_domains(d.references_added); },
      [](const ContentDiff& d) { return delta_domains(d.references_removed); });
}

}  // namespace forkdiff
