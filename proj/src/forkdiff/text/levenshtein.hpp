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

#include <cstddef>
#include <string_view>
#include <vector>

namespace forkdiff {

// Edit distance (insert/delete/substitute, unit costs) over Unicode scalar
// values.
std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b);
std::size_t levenshtein_distance_utf8(std::string_view a, std::string_view b);

// 1 - distance / max(|a|, |b|), in [0, 1]; 1.0 when both strings are empty.
// Lengths count Unicode scalar values, not bytes.
double normalized_levenshtein(std::string_view a, std::string_view b);
double normalized_levenshtein(const std::vector<char32_t>& a,
                              const std::vector<char32_t>& b);

}  // namespace forkdiff
