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

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "forkdiff/util/time.hpp"

namespace forkdiff {

struct WikiEndpoint {
  std::string base_url;  // MediaWiki Action API, e.g. https://host/w/api.php
  std::string label;     // "upstream" | "fork"
  double rate_limit = 10.0;  // max requests per second, > 0
  int max_retries = 5;
  // Optional REST pageviews base (".../api/rest_v1"); the Action API
  // pageviews prop is used when empty.
  std::string pageviews_rest_base;
  std::string pageviews_project;  // e.g. "ru.wikipedia.org"

  void validate() const;  // throws ValidationError
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Minimal GET transport so tests can substitute a scripted fake.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  // Full URL including query string. Connection-level failures throw
  // TransportError; HTTP error statuses are returned, not thrown.
  virtual HttpResponse get(const std::string& url) = 0;
};

class HttplibTransport : public HttpTransport {
 public:
  HttpResponse get(const std::string& url) override;
};

// Enforces a minimum spacing of 1/rate seconds between grants across all
// threads (a capacity-one token bucket), so no request is ever issued
// faster than the configured rate.
class RateLimiter {
 public:
  explicit RateLimiter(double per_second);
  void acquire();

 private:
  std::chrono::steady_clock::duration interval_;
  std::chrono::steady_clock::time_point next_;
  std::mutex mutex_;
};

// Content-addressed response cache: one file per (label, canonical request)
// under dir/label/sha256(url).json. Writes are atomic; hits replay the
// recorded body, status and original fetch time.
class ResponseCache {
 public:
  explicit ResponseCache(std::string dir);

  struct Entry {
    int status = 0;
    std::string body;
    UtcSeconds fetched_at = 0;
  };

  std::optional<Entry> lookup(const std::string& label,
                              const std::string& url) const;
  void store(const std::string& label, const std::string& url,
             const Entry& entry) const;

  const std::string& dir() const { return dir_; }

 private:
  std::string path_for(const std::string& label, const std::string& url) const;
  std::string dir_;
};

// Percent-encoding for query parameter values.
std::string url_encode(std::string_view value);

// base?k1=v1&k2=v2 with keys in sorted order — the canonical request form
// used for cache addressing.
std::string build_url(const std::string& base,
                      const std::map<std::string, std::string>& params);

}  // namespace forkdiff
