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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace forkdiff {

// Decode UTF-8 into Unicode scalar values. Invalid byte sequences decode to
// U+FFFD, one replacement per rejected byte, so decoding is total.
std::vector<char32_t> utf8_decode(std::string_view text);

std::string utf8_encode(const std::vector<char32_t>& codepoints);
void utf8_append(std::string* out, char32_t cp);

std::string trim(std::string_view s);

// Collapse runs of Unicode-ish whitespace (ASCII space/tab/newline, NBSP)
// to a single space and trim the ends.
std::string collapse_whitespace(std::string_view s);

std::string to_lower_ascii(std::string_view s);

bool starts_with_ci(std::string_view text, std::string_view prefix);

std::vector<std::string> split(std::string_view s, char sep);

// True for Latin A-Z, Cyrillic А-Я / Ё and other common uppercase letters.
bool is_upper_letter(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);

// Lowercase for ASCII and the Cyrillic block; other codepoints unchanged.
char32_t fold_lower(char32_t cp);
std::string fold_lower_utf8(std::string_view s);

bool is_ip_literal(const std::string& user);

}  // namespace forkdiff
