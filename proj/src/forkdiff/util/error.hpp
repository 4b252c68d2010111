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

#include <stdexcept>
#include <string>

namespace forkdiff {

// Stable error categories. The numeric values double as process exit codes
// and as C API status codes, so they must not be reordered.
enum class ErrorCode : int {
  kOk = 0,
  kValidation = 1,
  kDependency = 2,
  kTransport = 3,
  kData = 4,
  kInternal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Bad configuration, bad arguments, violated preconditions.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorCode::kValidation, message) {}
};

// A pipeline stage was requested before its inputs exist.
class DependencyError : public Error {
 public:
  explicit DependencyError(const std::string& message)
      : Error(ErrorCode::kDependency, message) {}
};

// Network or remote API failure that persisted through retries.
class TransportError : public Error {
 public:
  explicit TransportError(const std::string& message)
      : Error(ErrorCode::kTransport, message) {}
};

// Malformed or inconsistent data encountered while processing.
class DataError : public Error {
 public:
  explicit DataError(const std::string& message)
      : Error(ErrorCode::kData, message) {}
};

}  // namespace forkdiff
