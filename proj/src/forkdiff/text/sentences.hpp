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
#include <string_view>
#include <vector>

namespace forkdiff {

// Splits plain prose (markup already stripped) into sentences. Boundaries
// are runs of sentence-final punctuation (. ! ? …) followed by whitespace
// and an uppercase letter or digit. A single period is not a boundary when
// the preceding token is a known Cyrillic/Latin abbreviation or a lone
// initial. Output sentences are whitespace-collapsed; empties dropped.
std::vector<std::string> segment_sentences(std::string_view prose);

// True when the lowercased token blocks a sentence break before a period.
bool is_guarded_abbreviation(std::string_view token_lower);

}  // namespace forkdiff
