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

#include <functional>
#include <string>
#include <vector>

namespace forkdiff {

std::string read_file(const std::string& path);

// Write-temp-then-rename so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

void ensure_dir(const std::string& path);

bool file_exists(const std::string& path);

// Calls fn for each line; '\n' separated, a trailing '\r' is stripped.
void for_each_line(const std::string& path,
                   const std::function<void(const std::string&)>& fn);

std::vector<std::string> read_lines(const std::string& path);

}  // namespace forkdiff
