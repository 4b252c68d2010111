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

#include "forkdiff/text/unicode_norm.hpp"

#include <algorithm>
#include <cstdint>

#include "forkdiff/util/strings.hpp"

namespace forkdiff {

namespace {

#include "unicode_tables.inc"

constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

uint8_t combining_class(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kCccTable), std::end(kCccTable), cp,
      [](const CccEntry& e, char32_t c) { return e.cp < c; });
  if (it != std::end(kCccTable) && it->cp == cp) return it->ccc;
  return 0;
}

const DecompEntry* find_decomposition(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kDecompTable), std::end(kDecompTable), cp,
      [](const DecompEntry& e, char32_t c) { return e.cp < c; });
  if (it != std::end(kDecompTable) && it->cp == cp) return &*it;
  return nullptr;
}

char32_t find_composition(char32_t a, char32_t b) {
  auto it = std::lower_bound(std::begin(kComposeTable), std::end(kComposeTable),
                             std::pair<char32_t, char32_t>{a, b},
                             [](const ComposeEntry& e,
                                const std::pair<char32_t, char32_t>& key) {
                               if (e.a != key.first) return e.a < key.first;
                               return e.b < key.second;
                             });
  if (it != std::end(kComposeTable) && it->a == a && it->b == b) return it->c;
  return 0;
}

void decompose_into(char32_t cp, std::vector<char32_t>* out) {
  if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
    int s = static_cast<int>(cp - kHangulSBase);
    out->push_back(kHangulLBase + s / kHangulNCount);
    out->push_back(kHangulVBase + (s % kHangulNCount) / kHangulTCount);
    int t = s % kHangulTCount;
    if (t > 0) out->push_back(kHangulTBase + t);
    return;
  }
  const DecompEntry* e = find_decomposition(cp);
  if (e == nullptr) {
    out->push_back(cp);
    return;
  }
  decompose_into(e->a, out);
  if (e->b != 0) decompose_into(e->b, out);
}

// Stable bubble over maximal runs of nonzero combining class.
void canonical_order(std::vector<char32_t>* seq) {
  const size_t n = seq->size();
  size_t i = 0;
  while (i < n) {
    if (combining_class((*seq)[i]) == 0) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < n && combining_class((*seq)[j]) != 0) ++j;
    for (size_t a = i; a + 1 < j; ++a) {
      for (size_t b = i; b + 1 < j - (a - i); ++b) {
        if (combining_class((*seq)[b]) > combining_class((*seq)[b + 1])) {
          std::swap((*seq)[b], (*seq)[b + 1]);
        }
      }
    }
    i = j;
  }
}

char32_t compose_pair(char32_t a, char32_t b) {
  // Hangul LV and LVT composition.
  if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount &&
      b >= kHangulVBase && b < kHangulVBase + kHangulVCount) {
    int l = static_cast<int>(a - kHangulLBase);
    int v = static_cast<int>(b - kHangulVBase);
    return kHangulSBase + (l * kHangulVCount + v) * kHangulTCount;
  }
  if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
      (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
      b < kHangulTBase + kHangulTCount) {
    return a + (b - kHangulTBase);
  }
  return find_composition(a, b);
}

}  // namespace

std::vector<char32_t> nfc(const std::vector<char32_t>& input) {
  std::vector<char32_t> seq;
  seq.reserve(input.size());
  for (char32_t cp : input) decompose_into(cp, &seq);
  canonical_order(&seq);

  if (seq.empty()) return seq;

  // Primary composition (UAX #15). A character composes with the last
  // starter unless blocked by an intervening character of combining class
  // >= its own. prev_ccc == -1 means the character directly follows the
  // starter, which also enables starter+starter (Hangul) composition.
  std::vector<char32_t> out;
  out.reserve(seq.size());
  std::ptrdiff_t last_starter = -1;
  int prev_ccc = -1;
  for (char32_t cp : seq) {
    int ccc = combining_class(cp);
    if (last_starter >= 0 && (prev_ccc == -1 || prev_ccc < ccc)) {
      char32_t composed = compose_pair(out[last_starter], cp);
      if (composed != 0) {
        out[last_starter] = composed;
        continue;
      }
    }
    out.push_back(cp);
    if (ccc == 0) {
      last_starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
      prev_ccc = -1;
    } else {
      prev_ccc = ccc;
    }
  }
  return out;
}

std::string nfc_utf8(std::string_view text) {
  return utf8_encode(nfc(utf8_decode(text)));
}

}  // namespace forkdiff
