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

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace forkdiff {

struct Reference {
  std::string url;
  std::string domain;  // registrable domain of url

  friend bool operator==(const Reference&, const Reference&) = default;
  friend auto operator<=>(const Reference&, const Reference&) = default;
};

// Structural elements of one wikitext document. Sentences are plain prose
// with all markup stripped; the remaining fields are the metadata deltas
// the diff layer compares as sets.
struct WikitextElements {
  std::vector<std::string> sentences;
  std::set<std::string> categories;
  std::vector<Reference> references;  // appearance order, deduped by URL
  std::set<std::string> media;
  std::set<std::string> templates;  // template names, parameters dropped
  std::set<std::string> tags;       // parameterized invocations "Name|p1|p2"
  int malformed_constructs = 0;     // diagnostics; parsing never fails
};

// Best-effort structural parse. Total over any UTF-8 input: malformed
// markup is treated as plain text and counted, never raised.
WikitextElements parse_wikitext(std::string_view text);

}  // namespace forkdiff
