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

#include "forkdiff/text/diff.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "forkdiff/text/levenshtein.hpp"
#include "forkdiff/util/error.hpp"
#include "forkdiff/util/fsio.hpp"
#include "forkdiff/util/strings.hpp"

namespace forkdiff {

namespace {

template <typename T>
std::set<T> set_minus(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  for (const T& v : a) {
    if (b.count(v) == 0) out.insert(v);
  }
  return out;
}

// Order-preserving multiset difference: sentences of `from` not covered by
// occurrences in `against`.
std::vector<std::string> multiset_minus(const std::vector<std::string>& from,
                                        const std::vector<std::string>& against) {
  std::unordered_map<std::string, int> budget;
  for (const auto& s : against) ++budget[s];
  std::vector<std::string> out;
  for (const auto& s : from) {
    auto it = budget.find(s);
    if (it != budget.end() && it->second > 0) {
      --it->second;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

DomainDelta domain_delta(const std::vector<Reference>& side,
                         const std::vector<Reference>& other) {
  std::set<std::string> other_domains;
  for (const auto& r : other) other_domains.insert(r.domain);
  DomainDelta delta;
  for (const auto& r : side) {
    if (other_domains.count(r.domain) == 0) delta[r.domain].push_back(r.url);
  }
  return delta;
}

double round4(double v) { return std::round(v * 10000.0) / 10000.0; }

nlohmann::json delta_to_json(const DomainDelta& delta) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [domain, urls] : delta) {
    arr.push_back({{"domain", domain}, {"urls", urls}});
  }
  return arr;
}

DomainDelta delta_from_json(const nlohmann::json& arr) {
  DomainDelta delta;
  for (const auto& item : arr) {
    delta[item.at("domain").get<std::string>()] =
        item.at("urls").get<std::vector<std::string>>();
  }
  return delta;
}

}  // namespace

bool ContentDiff::empty() const {
  return inserted.empty() && deleted.empty() && changed.empty() &&
         categories_added.empty() && categories_removed.empty() &&
         references_added.empty() && references_removed.empty() &&
         media_added.empty() && media_removed.empty() &&
         templates_added.empty() && templates_removed.empty() &&
         tags_added.empty() && tags_removed.empty();
}

bool ContentDiff::has_text_change() const {
  return !inserted.empty() || !deleted.empty() || !changed.empty();
}

PairingResult pair_changed(const std::vector<std::string>& inserted,
                           const std::vector<std::string>& deleted,
                           double threshold) {
  struct Candidate {
    double similarity;
    size_t del_index;
    size_t ins_index;
  };
  // Decode once; similarity is evaluated over Unicode scalar values.
  std::vector<std::vector<char32_t>> ins_cps(inserted.size());
  std::vector<std::vector<char32_t>> del_cps(deleted.size());
  for (size_t i = 0; i < inserted.size(); ++i) ins_cps[i] = utf8_decode(inserted[i]);
  for (size_t i = 0; i < deleted.size(); ++i) del_cps[i] = utf8_decode(deleted[i]);

  std::vector<Candidate> candidates;
  candidates.reserve(inserted.size() * deleted.size());
  for (size_t d = 0; d < deleted.size(); ++d) {
    for (size_t i = 0; i < inserted.size(); ++i) {
      double sim = normalized_levenshtein(del_cps[d], ins_cps[i]);
      if (sim > threshold) candidates.push_back({sim, d, i});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.similarity != b.similarity) return a.similarity > b.similarity;
              if (a.del_index != b.del_index) return a.del_index < b.del_index;
              return a.ins_index < b.ins_index;
            });

  PairingResult result;
  std::vector<bool> ins_used(inserted.size(), false);
  std::vector<bool> del_used(deleted.size(), false);
  for (const Candidate& c : candidates) {
    if (ins_used[c.ins_index] || del_used[c.del_index]) continue;
    ins_used[c.ins_index] = true;
    del_used[c.del_index] = true;
    result.pairs.push_back(
        {deleted[c.del_index], inserted[c.ins_index], c.similarity});
  }
  for (size_t i = 0; i < inserted.size(); ++i) {
    if (!ins_used[i]) result.residual_inserted.push_back(inserted[i]);
  }
  for (size_t d = 0; d < deleted.size(); ++d) {
    if (!del_used[d]) result.residual_deleted.push_back(deleted[d]);
  }
  return result;
}

ContentDiff diff_texts(const std::string& title, const std::string& base_text,
                       const std::string& fork_text, double threshold) {
  WikitextElements base = parse_wikitext(base_text);
  WikitextElements fork = parse_wikitext(fork_text);

  ContentDiff diff;
  diff.title = title;
  diff.categories_added = set_minus(fork.categories, base.categories);
  diff.categories_removed = set_minus(base.categories, fork.categories);
  diff.media_added = set_minus(fork.media, base.media);
  diff.media_removed = set_minus(base.media, fork.media);
  diff.templates_added = set_minus(fork.templates, base.templates);
  diff.templates_removed = set_minus(base.templates, fork.templates);
  diff.tags_added = set_minus(fork.tags, base.tags);
  diff.tags_removed = set_minus(base.tags, fork.tags);
  diff.references_added = domain_delta(fork.references, base.references);
  diff.references_removed = domain_delta(base.references, fork.references);

  std::vector<std::string> raw_inserted =
      multiset_minus(fork.sentences, base.sentences);
  std::vector<std::string> raw_deleted =
      multiset_minus(base.sentences, fork.sentences);
  PairingResult paired = pair_changed(raw_inserted, raw_deleted, threshold);
  diff.inserted = std::move(paired.residual_inserted);
  diff.deleted = std::move(paired.residual_deleted);
  diff.changed = std::move(paired.pairs);
  return diff;
}

ContentDiff diff_pages(const PageRecord& record, double threshold) {
  if (record.status != PageStatus::kChanged) {
    throw ValidationError("diff_pages: page '" + record.title +
                          "' has status " + to_string(record.status) +
                          ", expected changed");
  }
  if (!record.fork_text || !record.upstream_text) {
    throw ValidationError("diff_pages: page '" + record.title +
                          "' is missing revision text");
  }
  return diff_texts(record.title, *record.upstream_text, *record.fork_text,
                    threshold);
}

nlohmann::json to_json(const ContentDiff& diff) {
  nlohmann::json changed = nlohmann::json::array();
  for (const auto& pair : diff.changed) {
    changed.push_back({{"old", pair.old_sentence},
                       {"new", pair.new_sentence},
                       {"similarity", round4(pair.similarity)}});
  }
  return nlohmann::json{
      {"title", diff.title},
      {"inserted", diff.inserted},
      {"deleted", diff.deleted},
      {"changed", changed},
      {"categories_added", diff.categories_added},
      {"categories_removed", diff.categories_removed},
      {"references_added", delta_to_json(diff.references_added)},
      {"references_removed", delta_to_json(diff.references_removed)},
      {"media_added", diff.media_added},
      {"media_removed", diff.media_removed},
      {"templates_added", diff.templates_added},
      {"templates_removed", diff.templates_removed},
      {"tags_added", diff.tags_added},
      {"tags_removed", diff.tags_removed}};
}

ContentDiff content_diff_from_json(const nlohmann::json& j) {
  ContentDiff diff;
  diff.title = j.at("title").get<std::string>();
  diff.inserted = j.at("inserted").get<std::vector<std::string>>();
  diff.deleted = j.at("deleted").get<std::vector<std::string>>();
  for (const auto& pair : j.at("changed")) {
    diff.changed.push_back({pair.at("old").get<std::string>(),
                            pair.at("new").get<std::string>(),
                            pair.at("similarity").get<double>()});
  }
  auto get_set = [&](const char* key) {
    return j.at(key).get<std::set<std::string>>();
  };
  diff.categories_added = get_set("categories_added");
  diff.categories_removed = get_set("categories_removed");
  diff.references_added = delta_from_json(j.at("references_added"));
  diff.references_removed = delta_from_json(j.at("references_removed"));
  diff.media_added = get_set("media_added");
  diff.media_removed = get_set("media_removed");
  diff.templates_added = get_set("templates_added");
  diff.templates_removed = get_set("templates_removed");
  diff.tags_added = get_set("tags_added");
  diff.tags_removed = get_set("tags_removed");
  return diff;
}

void write_content_diffs(const std::string& path,
                         const std::vector<ContentDiff>& diffs) {
  std::ostringstream out;
  for (const auto& diff : diffs) {
    out << to_json(diff).dump() << '\n';
  }
  write_file_atomic(path, out.str());
}

std::vector<ContentDiff> read_content_diffs(const std::string& path) {
  std::vector<ContentDiff> diffs;
  for_each_line(path, [&](const std::string& line) {
    if (line.empty()) return;
    diffs.push_back(content_diff_from_json(nlohmann::json::parse(line)));
  });
  return diffs;
}

}  // namespace forkdiff
