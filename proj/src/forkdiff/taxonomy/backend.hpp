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

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace forkdiff {

// Completion + embedding backend. Implementations at temperature 0 are
// treated as deterministic, which makes the on-disk response cache sound.
class LlmBackend {
 public:
  virtual ~LlmBackend() = default;

  virtual std::string complete(const std::string& prompt, double temperature) = 0;

  // One unit-norm-ish vector per input text, uniform dimension.
  virtual std::vector<std::vector<double>> embed(
      const std::vector<std::string>& texts) = 0;

  virtual std::string completion_model() const = 0;
  virtual std::string embedding_model() const = 0;
};

// Default model identifiers for the HTTP backend.
inline constexpr const char* kDefaultCompletionModel = "gpt-4o-mini-2024-07-18";
inline constexpr const char* kDefaultEmbeddingModel = "text-embedding-3-small";

// Fully offline deterministic backend. Summaries condense the edit string,
// embeddings are hashed bags of tokens, and the judge/reassignment answers
// derive from token overlap, so the whole pipeline runs reproducibly with
// no network access.
class MockBackend : public LlmBackend {
 public:
  explicit MockBackend(int embedding_dim = 1536);

  std::string complete(const std::string& prompt, double temperature) override;
  std::vector<std::vector<double>> embed(
      const std::vector<std::string>& texts) override;

  std::string completion_model() const override { return "mock-completion"; }
  std::string embedding_model() const override { return "mock-embedding"; }

 private:
  int embedding_dim_;
};

// OpenAI-compatible JSON-over-HTTPS backend: POST {base}/chat/completions
// and {base}/embeddings. The key comes from the FORKDIFF_LLM_KEY
// environment variable unless set explicitly.
class HttpBackend : public LlmBackend {
 public:
  struct Options {
    std::string base_url = "https://api.openai.com";
    std::string path_prefix = "/v1";
    std::string completion_model = kDefaultCompletionModel;
    std::string embedding_model = kDefaultEmbeddingModel;
    std::string api_key;     // empty: read FORKDIFF_LLM_KEY
    int max_retries = 5;
    double backoff_base_seconds = 1.0;
  };

  explicit HttpBackend(Options options);

  std::string complete(const std::string& prompt, double temperature) override;
  std::vector<std::vector<double>> embed(
      const std::vector<std::string>& texts) override;

  std::string completion_model() const override { return options_.completion_model; }
  std::string embedding_model() const override { return options_.embedding_model; }

 private:
  std::string post_json(const std::string& path, const std::string& body);
  Options options_;
};

// Write-through disk cache keyed by (model id, prompt hash). Embeddings are
// cached per input text.
class CachingBackend : public LlmBackend {
 public:
  CachingBackend(std::shared_ptr<LlmBackend> inner, std::string cache_dir);

  std::string complete(const std::string& prompt, double temperature) override;
  std::vector<std::vector<double>> embed(
      const std::vector<std::string>& texts) override;

  std::string completion_model() const override { return inner_->completion_model(); }
  std::string embedding_model() const override { return inner_->embedding_model(); }

  int64_t hits() const { return hits_; }
  int64_t misses() const { return misses_; }

 private:
  std::string cache_path(const std::string& kind, const std::string& model,
                         const std::string& key_material) const;

  std::shared_ptr<LlmBackend> inner_;
  std::string cache_dir_;
  std::mutex mutex_;
  int64_t hits_ = 0;
  int64_t misses_ = 0;
};

}  // namespace forkdiff
