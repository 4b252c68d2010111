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

#include "forkdiff/analytics/geo.hpp"

#include <cctype>

#include "forkdiff/util/error.hpp"
#include "forkdiff/util/fsio.hpp"
#include "forkdiff/util/strings.hpp"

namespace forkdiff {

std::string country_set_key(const std::set<std::string>& countries) {
  std::string key;
  for (const auto& code : countries) {
    if (!key.empty()) key.push_back('+');
    key += code;
  }
  return key;
}

std::map<std::string, GeoKeyStats> geo_group_rates(
    const std::map<std::string, PageStatus>& statuses,
    const std::vector<GeoAnnotation>& geo) {
  std::map<std::string, GeoKeyStats> stats;
  std::set<std::string> seen_titles;
  for (const auto& annotation : geo) {
    if (!seen_titles.insert(annotation.title).second) {
      throw DataError("geo_group_rates: duplicate annotation for '" +
                      annotation.title + "'");
    }
    if (annotation.countries.empty()) continue;
    auto it = statuses.find(annotation.title);
    if (it == statuses.end()) continue;  // unannotated corpus subset
    auto& entry = stats[country_set_key(annotation.countries)];
    ++entry.count_by_status[to_string(it->second)];
    ++entry.total;
  }
  for (auto& [key, entry] : stats) {
    for (const auto& [status, count] : entry.count_by_status) {
      entry.rate_by_status[status] =
          static_cast<double>(count) / static_cast<double>(entry.total);
    }
  }
  return stats;
}

std::vector<GeoAnnotation> read_geo_annotations(const std::string& path) {
  std::vector<GeoAnnotation> annotations;
  int line_no = 0;
  for_each_line(path, [&](const std::string& line) {
    ++line_no;
    if (line.empty() || line.front() == '#') return;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError("geo TSV line " + std::to_string(line_no) +
                      ": expected title<TAB>codes");
    }
    GeoAnnotation annotation;
    annotation.title = line.substr(0, tab);
    for (const auto& raw : split(line.substr(tab + 1), ',')) {
      std::string code = trim(raw);
      if (code.empty()) continue;
      if (code.size() != 2 || !std::isalpha(static_cast<unsigned char>(code[0])) ||
          !std::isalpha(static_cast<unsigned char>(code[1]))) {
        throw DataError("geo TSV line " + std::to_string(line_no) +
                        ": invalid country code '" + code + "'");
      }
      code[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(code[0])));
      code[1] = static_cast<char>(std::toupper(static_cast<unsigned char>(code[1])));
      annotation.countries.insert(code);
    }
    annotations.push_back(std::move(annotation));
  });
  return annotations;
}

}  // namespace forkdiff
