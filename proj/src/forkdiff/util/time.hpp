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

namespace forkdiff {

// All instants are UTC, stored as seconds since the Unix epoch.
using UtcSeconds = int64_t;

struct CivilTime {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
  int hour = 0;
  int minute = 0;
  int second = 0;
};

// "2023-06-01T12:34:56Z" -> epoch seconds. Throws ValidationError on
// malformed input. Fractional seconds are truncated if present.
UtcSeconds parse_iso8601(const std::string& text);

std::string format_iso8601(UtcSeconds t);

CivilTime civil_from_utc(UtcSeconds t);
UtcSeconds utc_from_civil(const CivilTime& c);

// Day of week with 0 = Monday .. 6 = Sunday.
int day_of_week(UtcSeconds t);

// A calendar month "YYYY-MM". Validated on parse.
struct Month {
  int year = 1970;
  int month = 1;

  static Month parse(const std::string& text);
  std::string str() const;
  Month next() const;

  friend bool operator==(const Month&, const Month&) = default;
  friend auto operator<=>(const Month& a, const Month& b) {
    return (a.year * 12 + a.month) <=> (b.year * 12 + b.month);
  }
};

// Number of months in [first, last] inclusive; 0 when last < first.
int months_between(const Month& first, const Month& last);

// Month containing the given instant.
Month month_of(UtcSeconds t);

UtcSeconds now_utc();

}  // namespace forkdiff
