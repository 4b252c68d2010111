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

#include "forkdiff/text/sentences.hpp"

#include <unordered_set>

#include "forkdiff/util/strings.hpp"

namespace forkdiff {

namespace {

const std::unordered_set<std::string>& abbreviation_set() {
  // Tokens that commonly precede a period mid-sentence. Stored lowercase
  // without the trailing dot. Single letters are guarded by rule, not here.
  static const std::unordered_set<std::string> kAbbrev = {
      // Cyrillic
      "ул", "пр", "просп", "пер", "пл", "наб", "пос", "дер", "обл", "гор",
      "гг", "вв", "им", "см", "ср", "др", "тд", "тп", "те", "тк", "руб",
      "коп", "тыс", "млн", "млрд", "стр", "корп", "кв", "акад", "проф",
      "доц", "ред", "изд", "рис", "табл", "гл", "ст", "абз", "прим",
      "англ", "рус", "укр", "лат", "греч", "нем", "фр", "итал", "исп",
      "род", "ум", "экз", "чел", "шт", "сокр",
      // Latin
      "mr", "mrs", "ms", "dr", "prof", "st", "jr", "sr", "vs", "etc", "eg",
      "ie", "no", "vol", "pp", "ed", "fig", "ca", "approx", "dept", "univ",
      "inc", "ltd", "co", "corp", "cf", "al", "op", "cit", "rev", "gen",
      "col", "capt", "sgt", "mt", "ft",
  };
  return kAbbrev;
}

bool is_sentence_final(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026;  // …
}

bool is_closing(char32_t cp) {
  return cp == U')' || cp == U']' || cp == U'"' || cp == U'\'' ||
         cp == 0x00BB /* » */ || cp == 0x201D /* ” */ || cp == 0x2019;
}

bool is_space_cp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == 0x00A0;
}

// Token of letters immediately preceding position `pos` (exclusive).
std::string preceding_token_lower(const std::vector<char32_t>& cps,
                                  size_t pos) {
  size_t end = pos;
  size_t begin = end;
  while (begin > 0 && is_letter(cps[begin - 1])) --begin;
  std::string token;
  for (size_t i = begin; i < end; ++i) utf8_append(&token, fold_lower(cps[i]));
  return token;
}

}  // namespace

bool is_guarded_abbreviation(std::string_view token_lower) {
  if (token_lower.empty()) return false;
  return abbreviation_set().count(std::string(token_lower)) > 0;
}

std::vector<std::string> segment_sentences(std::string_view prose) {
  std::vector<std::string> sentences;
  const std::vector<char32_t> cps = utf8_decode(prose);
  const size_t n = cps.size();

  auto flush = [&](size_t begin, size_t end) {
    std::string raw;
    for (size_t i = begin; i < end; ++i) utf8_append(&raw, cps[i]);
    std::string s = collapse_whitespace(raw);
    if (!s.empty()) sentences.push_back(std::move(s));
  };

  size_t start = 0;
  size_t i = 0;
  while (i < n) {
    if (!is_sentence_final(cps[i])) {
      ++i;
      continue;
    }
    const size_t punct_begin = i;
    bool lone_period = cps[i] == U'.' && (i + 1 >= n || cps[i + 1] != U'.');
    while (i < n && is_sentence_final(cps[i])) ++i;
    if (i - punct_begin > 1) lone_period = false;
    while (i < n && is_closing(cps[i])) ++i;
    const size_t sentence_end = i;

    size_t j = i;
    while (j < n && is_space_cp(cps[j])) ++j;
    bool followed_by_break =
        j > i && j < n && (is_upper_letter(cps[j]) || is_digit(cps[j]));
    if (!followed_by_break) continue;

    if (lone_period) {
      std::string token = preceding_token_lower(cps, punct_begin);
      size_t token_cps = utf8_decode(token).size();
      if (token_cps == 1 || is_guarded_abbreviation(token)) continue;
    }

    flush(start, sentence_end);
    start = j;
    i = j;
  }
  if (start < n) flush(start, n);
  return sentences;
}

}  // namespace forkdiff
