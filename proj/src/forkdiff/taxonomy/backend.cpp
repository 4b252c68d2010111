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

#include "forkdiff/taxonomy/backend.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include <json.hpp>

#include "forkdiff/util/error.hpp"
#include "forkdiff/util/fsio.hpp"
#include "forkdiff/util/hash.hpp"
#include "forkdiff/util/rng.hpp"
#include "forkdiff/util/strings.hpp"

namespace forkdiff {

namespace {

uint64_t fnv64(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  auto cps = utf8_decode(text);
  std::string current;
  for (char32_t cp : cps) {
    if (is_letter(cp) || is_digit(cp)) {
      utf8_append(&current, fold_lower(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

bool is_meaningful(const std::string& token) {
  static const std::set<std::string> kStop = {
      "edit",   "edits",    "page",    "pages",   "wikipedia", "change",
      "changes", "changed", "added",   "removed", "deleted",   "inserted",
      "about",  "with",     "from",    "this",    "that",      "have",
      "been",   "title",    "summary", "cluster", "details",   "lines",
  };
  return utf8_decode(token).size() >= 4 && kStop.count(token) == 0;
}

std::set<std::string> meaningful_set(std::string_view text) {
  std::set<std::string> out;
  for (auto& t : word_tokens(text)) {
    if (is_meaningful(t)) out.insert(t);
  }
  return out;
}

// Extracts the payload of the last <...> span; tolerates '<' or '>' inside
// by anchoring on the given lead-in marker.
std::string after_marker(const std::string& prompt, std::string_view marker,
                         char close) {
  size_t at = prompt.rfind(marker);
  if (at == std::string::npos) return "";
  size_t begin = at + marker.size();
  size_t end = prompt.find_last_of(close);
  if (end == std::string::npos || end <= begin) return prompt.substr(begin);
  return prompt.substr(begin, end - begin);
}

std::string capitalize(const std::string& word) {
  auto cps = utf8_decode(word);
  if (!cps.empty()) {
    char32_t c = cps[0];
    if (c >= U'a' && c <= U'z') cps[0] = c - 32;
    if (c >= 0x0430 && c <= 0x044F) cps[0] = c - 32;
    if (c == 0x0451) cps[0] = 0x0401;
  }
  return utf8_encode(cps);
}

std::vector<std::string> top_tokens(const std::string& text, size_t k) {
  std::map<std::string, int> freq;
  for (auto& t : word_tokens(text)) {
    if (is_meaningful(t)) ++freq[t];
  }
  std::vector<std::pair<std::string, int>> ordered(freq.begin(), freq.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> out;
  for (size_t i = 0; i < ordered.size() && i < k; ++i) {
    out.push_back(ordered[i].first);
  }
  return out;
}

}  // namespace

MockBackend::MockBackend(int embedding_dim) : embedding_dim_(embedding_dim) {
  if (embedding_dim < 1) {
    throw ValidationError("mock backend: embedding dimension must be positive");
  }
}

std::string MockBackend::complete(const std::string& prompt,
                                  double /*temperature*/) {
  // Summarization request: condense the edit string into distinct tokens.
  if (prompt.find("\"desc\" field") != std::string::npos) {
    std::string edit = after_marker(prompt, "provided in the <>: <", '>');
    std::vector<std::string> words;
    std::set<std::string> seen;
    for (auto& t : word_tokens(edit)) {
      if (seen.insert(t).second) words.push_back(t);
      if (words.size() >= 38) break;
    }
    std::string desc;
    for (const auto& w : words) {
      if (!desc.empty()) desc.push_back(' ');
      desc += w;
    }
    if (desc.empty()) desc = "no visible changes";
    return nlohmann::json{{"desc", desc}}.dump();
  }

  // Binary fit judgement: YES when the summary shares vocabulary with the
  // cluster details.
  if (prompt.find("YES or NO") != std::string::npos) {
    std::string summary = after_marker(prompt, "Edit summary: <", '>');
    size_t tilde_begin = prompt.find("Cluster details: ~");
    std::string details;
    if (tilde_begin != std::string::npos) {
      details = prompt.substr(tilde_begin + 18);
      size_t tilde_end = details.find_last_of('~');
      if (tilde_end != std::string::npos) details = details.substr(0, tilde_end);
    }
    auto summary_tokens = meaningful_set(summary);
    auto detail_tokens = meaningful_set(details);
    for (const auto& t : summary_tokens) {
      if (detail_tokens.count(t) > 0) return "YES";
    }
    return "NO";
  }

  // Reassignment: answer the numbered cluster line with the best overlap,
  // falling back to the highest number (the escape class).
  if (prompt.find("cluster number") != std::string::npos) {
    std::string summary = after_marker(prompt, "Edit summary: <", '>');
    auto summary_tokens = meaningful_set(summary);
    int best_number = -1;
    size_t best_overlap = 0;
    int max_number = 0;
    for (const auto& line : split(prompt, '\n')) {
      size_t dot = line.find(". ");
      if (dot == std::string::npos || dot == 0 || dot > 4) continue;
      bool numeric = true;
      for (size_t i = 0; i < dot; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(line[i]))) numeric = false;
      }
      if (!numeric) continue;
      int number = std::atoi(line.substr(0, dot).c_str());
      max_number = std::max(max_number, number);
      auto line_tokens = meaningful_set(line.substr(dot + 2));
      size_t overlap = 0;
      for (const auto& t : summary_tokens) {
        if (line_tokens.count(t) > 0) ++overlap;
      }
      if (overlap > best_overlap ||
          (overlap == best_overlap && overlap > 0 && number < best_number)) {
        best_overlap = overlap;
        best_number = number;
      }
    }
    if (best_overlap == 0 || best_number < 0) best_number = max_number;
    return std::to_string(best_number);
  }

  // Naming request: derive a name and description from the dominant tokens.
  if (prompt.find("\"name\"") != std::string::npos) {
    std::string samples = after_marker(prompt, "provided in the <>: <", '>');
    auto top = top_tokens(samples, 3);
    std::string name;
    for (size_t i = 0; i < top.size() && i < 2; ++i) {
      if (!name.empty()) name.push_back(' ');
      name += capitalize(top[i]);
    }
    if (name.empty()) name = "Assorted Edits";
    std::string description = "Edits mention";
    if (top.empty()) {
      description += " miscellaneous small changes";
    } else {
      for (size_t i = 0; i < top.size(); ++i) {
        description += (i == 0 ? " " : ", ") + top[i];
      }
    }
    description += ".";
    return nlohmann::json{{"name", name}, {"description", description}}.dump();
  }

  return "UNRECOGNIZED PROMPT";
}

std::vector<std::vector<double>> MockBackend::embed(
    const std::vector<std::string>& texts) {
  std::vector<std::vector<double>> vectors;
  vectors.reserve(texts.size());
  for (const auto& text : texts) {
    std::vector<double> v(embedding_dim_, 0.0);
    for (const auto& token : word_tokens(text)) {
      Rng rng(fnv64(token));
      v[rng.next_index(static_cast<size_t>(embedding_dim_))] += 1.0;
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm == 0.0) {
      v[0] = 1.0;
    } else {
      norm = std::sqrt(norm);
      for (double& x : v) x /= norm;
    }
    vectors.push_back(std::move(v));
  }
  return vectors;
}

HttpBackend::HttpBackend(Options options) : options_(std::move(options)) {
  if (options_.api_key.empty()) {
    const char* key = std::getenv("FORKDIFF_LLM_KEY");
    if (key != nullptr) options_.api_key = key;
  }
}

std::string HttpBackend::post_json(const std::string& path,
                                   const std::string& body) {
  std::string last_error;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) {
      double delay = options_.backoff_base_seconds * std::pow(2.0, attempt - 1);
      std::this_thread::sleep_for(std::chrono::duration<double>(delay));
    }
    httplib::Client client(options_.base_url);
    client.set_read_timeout(120, 0);
    httplib::Headers headers;
    if (!options_.api_key.empty()) {
      headers.emplace("Authorization", "Bearer " + options_.api_key);
    }
    auto res = client.Post(options_.path_prefix + path, headers, body,
                           "application/json");
    if (res && res->status == 200) return res->body;
    if (res) {
      last_error = "HTTP " + std::to_string(res->status);
      // 4xx other than 429 will not succeed on retry.
      if (res->status >= 400 && res->status < 500 && res->status != 429) break;
    } else {
      last_error = "connection failure";
    }
  }
  throw TransportError("LLM backend request failed (" + last_error +
                       "): " + options_.base_url + options_.path_prefix + path);
}

std::string HttpBackend::complete(const std::string& prompt, double temperature) {
  nlohmann::json request{
      {"model", options_.completion_model},
      {"temperature", temperature},
      {"messages",
       nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})}};
  nlohmann::json response =
      nlohmann::json::parse(post_json("/chat/completions", request.dump()));
  try {
    return response.at("choices").at(0).at("message").at("content")
        .get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw DataError("LLM completion response missing choices[0].message.content");
  }
}

std::vector<std::vector<double>> HttpBackend::embed(
    const std::vector<std::string>& texts) {
  nlohmann::json request{{"model", options_.embedding_model}, {"input", texts}};
  nlohmann::json response =
      nlohmann::json::parse(post_json("/embeddings", request.dump()));
  std::vector<std::vector<double>> vectors(texts.size());
  try {
    for (const auto& item : response.at("data")) {
      size_t index = item.at("index").get<size_t>();
      if (index >= vectors.size()) throw DataError("embedding index out of range");
      vectors[index] = item.at("embedding").get<std::vector<double>>();
    }
  } catch (const nlohmann::json::exception&) {
    throw DataError("LLM embedding response missing data[].embedding");
  }
  for (const auto& v : vectors) {
    if (v.empty()) throw DataError("LLM embedding response left gaps");
  }
  return vectors;
}

CachingBackend::CachingBackend(std::shared_ptr<LlmBackend> inner,
                               std::string cache_dir)
    : inner_(std::move(inner)), cache_dir_(std::move(cache_dir)) {
  ensure_dir(cache_dir_);
}

std::string CachingBackend::cache_path(const std::string& kind,
                                       const std::string& model,
                                       const std::string& key_material) const {
  std::string safe_model = model;
  for (char& c : safe_model) {
    if (c == '/' || c == ':') c = '_';
  }
  return cache_dir_ + "/" + safe_model + "/" + kind + "-" +
         sha256_hex(key_material) + ".json";
}

std::string CachingBackend::complete(const std::string& prompt,
                                     double temperature) {
  char temp_buf[32];
  std::snprintf(temp_buf, sizeof(temp_buf), "%.6g", temperature);
  std::string path = cache_path("complete", inner_->completion_model(),
                                prompt + '\x00' + temp_buf);
  if (file_exists(path)) {
    std::lock_guard<std::mutex> lock(mutex_);
    ++hits_;
    return nlohmann::json::parse(read_file(path)).at("response").get<std::string>();
  }
  std::string response = inner_->complete(prompt, temperature);
  write_file_atomic(path, nlohmann::json{{"response", response}}.dump());
  std::lock_guard<std::mutex> lock(mutex_);
  ++misses_;
  return response;
}

std::vector<std::vector<double>> CachingBackend::embed(
    const std::vector<std::string>& texts) {
  std::vector<std::vector<double>> vectors(texts.size());
  std::vector<size_t> missing;
  for (size_t i = 0; i < texts.size(); ++i) {
    std::string path = cache_path("embed", inner_->embedding_model(), texts[i]);
    if (file_exists(path)) {
      vectors[i] = nlohmann::json::parse(read_file(path))
                       .at("embedding")
                       .get<std::vector<double>>();
      std::lock_guard<std::mutex> lock(mutex_);
      ++hits_;
    } else {
      missing.push_back(i);
    }
  }
  if (!missing.empty()) {
    std::vector<std::string> batch;
    batch.reserve(missing.size());
    for (size_t i : missing) batch.push_back(texts[i]);
    auto fresh = inner_->embed(batch);
    if (fresh.size() != missing.size()) {
      throw DataError("embedding backend returned a short batch");
    }
    for (size_t b = 0; b < missing.size(); ++b) {
      vectors[missing[b]] = fresh[b];
      write_file_atomic(
          cache_path("embed", inner_->embedding_model(), texts[missing[b]]),
          nlohmann::json{{"embedding", fresh[b]}}.dump());
    }
    std::lock_guard<std::mutex> lock(mutex_);
    misses_ += static_cast<int64_t>(missing.size());
  }
  return vectors;
}

}  // namespace forkdiff
