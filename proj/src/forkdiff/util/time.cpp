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

#include "forkdiff/util/time.hpp"

#include <chrono>
#include <cstdio>

#include "forkdiff/util/error.hpp"

namespace forkdiff {

namespace {

// Proleptic Gregorian day counting (Hinnant's algorithms).
int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int* y, int* m, int* d) {
  z += 719468;
  const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int64_t yy = static_cast<int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  *d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  *m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  *y = static_cast<int>(yy + (*m <= 2));
}

bool parse_fixed_uint(const std::string& s, size_t pos, size_t len, int* out) {
  int v = 0;
  for (size_t i = pos; i < pos + len; ++i) {
    if (i >= s.size() || s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  *out = v;
  return true;
}

}  // namespace

UtcSeconds parse_iso8601(const std::string& text) {
  // YYYY-MM-DDTHH:MM:SS with optional .fff and optional trailing Z.
  CivilTime c;
  if (text.size() < 19 || text[4] != '-' || text[7] != '-' ||
      (text[10] != 'T' && text[10] != ' ') || text[13] != ':' ||
      text[16] != ':' || !parse_fixed_uint(text, 0, 4, &c.year) ||
      !parse_fixed_uint(text, 5, 2, &c.month) ||
      !parse_fixed_uint(text, 8, 2, &c.day) ||
      !parse_fixed_uint(text, 11, 2, &c.hour) ||
      !parse_fixed_uint(text, 14, 2, &c.minute) ||
      !parse_fixed_uint(text, 17, 2, &c.second)) {
    throw ValidationError("bad ISO-8601 timestamp: " + text);
  }
  if (c.month < 1 || c.month > 12 || c.day < 1 || c.day > 31 || c.hour > 23 ||
      c.minute > 59 || c.second > 60) {
    throw ValidationError("out-of-range ISO-8601 timestamp: " + text);
  }
  return utc_from_civil(c);
}

std::string format_iso8601(UtcSeconds t) {
  CivilTime c = civil_from_utc(t);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", c.year,
                c.month, c.day, c.hour, c.minute, c.second);
  return buf;
}

CivilTime civil_from_utc(UtcSeconds t) {
  int64_t days = t / 86400;
  int64_t rem = t % 86400;
  if (rem < 0) {
    rem += 86400;
    days -= 1;
  }
  CivilTime c;
  civil_from_days(days, &c.year, &c.month, &c.day);
  c.hour = static_cast<int>(rem / 3600);
  c.minute = static_cast<int>((rem % 3600) / 60);
  c.second = static_cast<int>(rem % 60);
  return c;
}

UtcSeconds utc_from_civil(const CivilTime& c) {
  return days_from_civil(c.year, c.month, c.day) * 86400 + c.hour * 3600 +
         c.minute * 60 + c.second;
}

int day_of_week(UtcSeconds t) {
  int64_t days = t / 86400;
  if (t % 86400 < 0) days -= 1;
  // 1970-01-01 was a Thursday (index 3 with Monday = 0).
  int dow = static_cast<int>((days + 3) % 7);
  return dow < 0 ? dow + 7 : dow;
}

Month Month::parse(const std::string& text) {
  Month m;
  if (text.size() != 7 || text[4] != '-' ||
      !parse_fixed_uint(text, 0, 4, &m.year) ||
      !parse_fixed_uint(text, 5, 2, &m.month) || m.month < 1 || m.month > 12) {
    throw ValidationError("bad month, expected YYYY-MM: " + text);
  }
  return m;
}

std::string Month::str() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
  return buf;
}

Month Month::next() const {
  Month m = *this;
  if (++m.month > 12) {
    m.month = 1;
    ++m.year;
  }
  return m;
}

int months_between(const Month& first, const Month& last) {
  int n = (last.year - first.year) * 12 + (last.month - first.month) + 1;
  return n > 0 ? n : 0;
}

Month month_of(UtcSeconds t) {
  CivilTime c = civil_from_utc(t);
  return Month{c.year, c.month};
}

UtcSeconds now_utc() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace forkdiff
