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

#include "forkdiff/taxonomy/prompts.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>

#include "forkdiff/util/error.hpp"
#include "forkdiff/util/fsio.hpp"

namespace forkdiff {

namespace {

constexpr std::string_view kSummarizePrompt =
    R"(You will be provided with details regarding edit to the Wikipedia page.
You need to deeply analyse the changes, define what was edited and provide a description of the changes.

Provide a short summary and specific factual changes.
Pay attention to details about adding/removing/changing characteristics.
Avoid generalizations and provide specific examples.  (max {MAX_WORDS} words)
Return the answer in JSON format with only "desc" field and the following structure:
{{
    "desc": "string"  # description of specific factual changes
}}
The edit to analyze will be provided in the <>: <{EDIT_STRING}>
)";

constexpr std::string_view kFitPrompt =
    R"(You are provided with a specific edit to the Wikipedia page (defined in <>) along with possible cluster details (defined in ~~) to which the edit belongs.
You need to analyse the edit and decide whether the edit fits the provided cluster or not.
Provide ONLY a short answer (YES or NO).
Edit summary: <{EDIT_SUMMARY}>
Cluster details: ~{CLUSTER_DETAILS}~
)";

constexpr std::string_view kReassignPrompt =
    R"(You are provided with a specific edit to the Wikipedia page (defined in <>).
You need to reclassify the edit to the correct cluster based on the provided cluster details.
Cluster details:
{ALL_CLUSTERS_DETAILS}
8. Other changes: The edit does not fit any of the provided clusters. (always use this option if the edit does not fit any of the provided clusters)

Provide ONLY a short answer (cluster number).
Edit summary: <{EDIT_SUMMARY}>
)";

// The upstream appendix ships summarization, fit and reassignment prompts
// only; the naming prompt below follows the documented requirements for
// cluster characterization and is editable like the others.
constexpr std::string_view kNamingPrompt =
    R"(You are provided with a sample of edit summaries that all belong to one cluster of similar Wikipedia edits (one summary per line, defined in <>).
You need to generate a short name and a brief description for the cluster.
The description must outline the specific changes made within the edits, including examples of the editing tactics employed.
Return the answer in JSON format with only "name" and "description" fields and the following structure:
{{
    "name": "string"  # short cluster name
    "description": "string"  # brief cluster description
}}
The edit summaries are provided in the <>: <{CLUSTER_SAMPLES}>
)";

std::string load_or(const std::string& dir, const char* file,
                    std::string_view fallback) {
  std::string path = dir + "/" + file;
  if (file_exists(path)) return read_file(path);
  return std::string(fallback);
}

}  // namespace

PromptSet PromptSet::defaults() {
  return PromptSet{std::string(kSummarizePrompt), std::string(kFitPrompt),
                   std::string(kReassignPrompt), std::string(kNamingPrompt)};
}

PromptSet PromptSet::load(const std::string& dir) {
  if (dir.empty()) return defaults();
  if (!std::filesystem::exists(dir)) {
    throw ValidationError("prompt directory not found: " + dir);
  }
  PromptSet prompts;
  prompts.summarize = load_or(dir, "summarize.txt", kSummarizePrompt);
  prompts.fit = load_or(dir, "fit.txt", kFitPrompt);
  prompts.reassign = load_or(dir, "reassign.txt", kReassignPrompt);
  prompts.naming = load_or(dir, "naming.txt", kNamingPrompt);
  return prompts;
}

void PromptSet::write_defaults(const std::string& dir) {
  ensure_dir(dir);
  write_file_atomic(dir + "/summarize.txt", std::string(kSummarizePrompt));
  write_file_atomic(dir + "/fit.txt", std::string(kFitPrompt));
  write_file_atomic(dir + "/reassign.txt", std::string(kReassignPrompt));
  write_file_atomic(dir + "/naming.txt", std::string(kNamingPrompt));
}

std::string render_prompt(std::string_view tpl,
                          const std::map<std::string, std::string>& vars) {
  std::string out;
  out.reserve(tpl.size());
  size_t i = 0;
  while (i < tpl.size()) {
    char c = tpl[i];
    if (c == '{' && i + 1 < tpl.size() && tpl[i + 1] == '{') {
      out.push_back('{');
      i += 2;
      continue;
    }
    if (c == '}' && i + 1 < tpl.size() && tpl[i + 1] == '}') {
      out.push_back('}');
      i += 2;
      continue;
    }
    if (c == '{') {
      size_t close = tpl.find('}', i + 1);
      if (close != std::string_view::npos) {
        std::string name(tpl.substr(i + 1, close - i - 1));
        bool placeholder_like =
            !name.empty() &&
            std::all_of(name.begin(), name.end(), [](unsigned char ch) {
              return std::isupper(ch) || ch == '_';
            });
        if (placeholder_like) {
          auto it = vars.find(name);
          if (it == vars.end()) {
            throw ValidationError("prompt template references unknown placeholder {" +
                                  name + "}");
          }
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

}  // namespace forkdiff
