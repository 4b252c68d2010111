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

#include "forkdiff/text/domains.hpp"

#include <unordered_set>
#include <vector>

#include "forkdiff/util/strings.hpp"

namespace forkdiff {

namespace {

// Multi-label public suffixes relevant to the corpora this tool targets
// (post-Soviet, EU and anglophone registries). Single-label TLDs need no
// entry; the fallback rule handles them.
const std::unordered_set<std::string>& suffix_set() {
  static const std::unordered_set<std::string> kSuffixes = {
      // .ua
      "com.ua", "gov.ua", "net.ua", "org.ua", "edu.ua", "in.ua", "kiev.ua",
      "kyiv.ua", "kharkov.ua", "dnepropetrovsk.ua", "od.ua", "lviv.ua",
      // .ru regional legacy
      "msk.ru", "spb.ru", "nov.ru", "com.ru", "org.ru", "net.ru", "pp.ru",
      // .by / .kz / .ge / .am / .az / .md
      "gov.by", "com.by", "org.by", "edu.by", "gov.kz", "com.kz", "edu.kz",
      "org.kz", "com.ge", "gov.ge", "edu.ge", "com.am", "gov.am", "com.az",
      "gov.az", "gov.md", "com.md",
      // .uk / .au / .nz / .za
      "co.uk", "org.uk", "gov.uk", "ac.uk", "net.uk", "me.uk", "ltd.uk",
      "plc.uk", "sch.uk", "com.au", "net.au", "org.au", "edu.au", "gov.au",
      "co.nz", "org.nz", "govt.nz", "ac.nz", "co.za", "org.za", "gov.za",
      // .br / .mx / .ar / .tr / .cn / .jp / .kr / .in / .il
      "com.br", "org.br", "gov.br", "net.br", "edu.br", "com.mx", "gob.mx",
      "org.mx", "com.ar", "gob.ar", "org.ar", "com.tr", "gov.tr", "org.tr",
      "edu.tr", "com.cn", "gov.cn", "org.cn", "edu.cn", "net.cn", "co.jp",
      "or.jp", "ne.jp", "go.jp", "ac.jp", "ad.jp", "co.kr", "or.kr", "go.kr",
      "ac.kr", "co.in", "org.in", "gov.in", "net.in", "ac.in", "co.il",
      "org.il", "gov.il", "ac.il", "muni.il",
      // misc
      "com.pl", "org.pl", "gov.pl", "edu.pl", "net.pl", "co.at", "or.at",
      "gv.at", "ac.at",
  };
  return kSuffixes;
}

bool looks_like_ipv4(const std::string& host) {
  int dots = 0;
  for (char c : host) {
    if (c == '.') {
      ++dots;
    } else if (c < '0' || c > '9') {
      return false;
    }
  }
  return dots == 3;
}

}  // namespace

std::string url_host(std::string_view url) {
  std::string_view rest = url;
  size_t scheme = rest.find("://");
  if (scheme != std::string_view::npos) {
    rest = rest.substr(scheme + 3);
  } else if (rest.substr(0, 2) == "//") {
    rest = rest.substr(2);
  }
  size_t end = rest.find_first_of("/?#");
  if (end != std::string_view::npos) rest = rest.substr(0, end);
  size_t at = rest.rfind('@');
  if (at != std::string_view::npos) rest = rest.substr(at + 1);
  // IPv6 literal in brackets.
  if (!rest.empty() && rest.front() == '[') {
    size_t close = rest.find(']');
    if (close != std::string_view::npos) return std::string(rest.substr(1, close - 1));
  }
  size_t colon = rest.find(':');
  if (colon != std::string_view::npos) rest = rest.substr(0, colon);
  std::string host = to_lower_ascii(rest);
  while (!host.empty() && host.back() == '.') host.pop_back();
  return host;
}

std::string registrable_domain(std::string_view url) {
  std::string host = url_host(url);
  if (host.empty()) return host;
  if (looks_like_ipv4(host) || host.find(':') != std::string::npos) return host;

  std::vector<std::string> labels = split(host, '.');
  if (labels.size() <= 2) return host;

  // Match the longest known public suffix, then keep one label more.
  const auto& suffixes = suffix_set();
  for (size_t take = std::min<size_t>(labels.size() - 1, 3); take >= 2; --take) {
    std::string candidate;
    for (size_t i = labels.size() - take; i < labels.size(); ++i) {
      if (!candidate.empty()) candidate.push_back('.');
      candidate += labels[i];
    }
    if (suffixes.count(candidate) > 0) {
      return labels[labels.size() - take - 1] + "." + candidate;
    }
  }
  return labels[labels.size() - 2] + "." + labels[labels.size() - 1];
}

}  // namespace forkdiff
