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

#include <map>
#include <string>
#include <string_view>

namespace forkdiff {

// The four prompt templates driving the taxonomy pipeline. Templates use
// {PLACEHOLDER} substitution with {{ and }} as literal-brace escapes.
struct PromptSet {
  std::string summarize;  // {MAX_WORDS}, {EDIT_STRING}
  std::string fit;        // {EDIT_SUMMARY}, {CLUSTER_DETAILS}
  std::string reassign;   // {EDIT_SUMMARY}, {ALL_CLUSTERS_DETAILS}
  std::string naming;     // {CLUSTER_SAMPLES}

  // Built-in defaults.
  static PromptSet defaults();

  // Loads any of summarize.txt / fit.txt / reassign.txt / naming.txt found
  // under dir, keeping defaults for the rest.
  static PromptSet load(const std::string& dir);

  // Writes the default template files into dir (used by tooling).
  static void write_defaults(const std::string& dir);
};

// Renders {NAME} placeholders from vars and unescapes {{ }}. An
// all-uppercase placeholder missing from vars raises ValidationError.
std::string render_prompt(std::string_view tpl,
                          const std::map<std::string, std::string>& vars);

}  // namespace forkdiff
