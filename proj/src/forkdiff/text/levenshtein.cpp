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

#include "forkdiff/text/levenshtein.hpp"

#include <algorithm>

#include "forkdiff/util/strings.hpp"

namespace forkdiff {

namespace {

std::size_t distance_impl(const char32_t* a, std::size_t m, const char32_t* b,
                          std::size_t n) {
  // Trimming the common affixes does not change the distance.
  while (m > 0 && n > 0 && *a == *b) ++a, ++b, --m, --n;
  while (m > 0 && n > 0 && a[m - 1] == b[n - 1]) --m, --n;
  if (m == 0) return n;
  if (n == 0) return m;
  if (n > m) {
    std::swap(a, b);
    std::swap(m, n);
  }

  // Single-row dynamic program; prev_diag carries the substitution cell.
  std::vector<std::size_t> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t prev_diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t del = row[j] + 1;
      std::size_t ins = row[j - 1] + 1;
      std::size_t sub = prev_diag + (a[i - 1] != b[j - 1] ? 1 : 0);
      prev_diag = row[j];
      row[j] = std::min({del, ins, sub});
    }
  }
  return row[n];
}

}  // namespace

std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b) {
  return distance_impl(a.data(), a.size(), b.data(), b.size());
}

std::size_t levenshtein_distance_utf8(std::string_view a, std::string_view b) {
  auto ua = utf8_decode(a);
  auto ub = utf8_decode(b);
  return distance_impl(ua.data(), ua.size(), ub.data(), ub.size());
}

double normalized_levenshtein(const std::vector<char32_t>& a,
                              const std::vector<char32_t>& b) {
  std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  std::size_t d = distance_impl(a.data(), a.size(), b.data(), b.size());
  return 1.0 - static_cast<double>(d) / static_cast<double>(longest);
}

double normalized_levenshtein(std::string_view a, std::string_view b) {
  return normalized_levenshtein(utf8_decode(a), utf8_decode(b));
}

}  // namespace forkdiff
