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

// Canonical composition (NFC) over Unicode scalar values: canonical
// decomposition, canonical reordering by combining class, then primary
// composition. Tables are generated from the Unicode character database;
// Hangul syllables are handled algorithmically.
std::vector<char32_t> nfc(const std::vector<char32_t>& input);

std::string nfc_utf8(std::string_view text);

}  // namespace forkdiff
