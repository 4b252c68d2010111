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

#include <string>
#include <string_view>

namespace forkdiff {

// Lowercased host part of a URL; empty string when the URL has no host.
std::string url_host(std::string_view url);

// Registrable domain of a URL: one label below the public suffix. Backed by
// an embedded subset of the public suffix list covering the common
// multi-label suffixes; unknown TLDs fall back to the last two labels.
// IP-literal hosts are returned whole.
std::string registrable_domain(std::string_view url);

}  // namespace forkdiff
