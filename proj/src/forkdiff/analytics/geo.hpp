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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "forkdiff/model/page.hpp"

namespace forkdiff {

// Country annotation for one page, ingested from an external prediction
// tool's TSV; this module never computes predictions itself.
struct GeoAnnotation {
  std::string title;
  std::set<std::string> countries;  // ISO 3166-1 alpha-2
};

struct GeoKeyStats {
  std::map<std::string, double> rate_by_status;   // sums to 1 per key
  std::map<std::string, int64_t> count_by_status;
  int64_t total = 0;
};

// Rates of each status within every distinct country-set key. Keys are the
// sorted alpha-2 codes joined with '+' (e.g. "RU+UA"); pages with an empty
// country set are excluded.
std::map<std::string, GeoKeyStats> geo_group_rates(
    const std::map<std::string, PageStatus>& statuses,
    const std::vector<GeoAnnotation>& geo);

// TSV rows: title <TAB> comma-separated alpha-2 codes. Duplicate titles are
// rejected; invalid codes raise DataError.
std::vector<GeoAnnotation> read_geo_annotations(const std::string& path);

std::string country_set_key(const std::set<std::string>& countries);

}  // namespace forkdiff
