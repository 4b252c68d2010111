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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace forkdiff {

// SplitMix64 (Steele, Lea & Flood 2014). Chosen over std:: engines because
// every numeric result in this project must be reproducible bit-for-bit
// across standard libraries; the algorithm is fully specified by the three
// constants below.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform index in [0, n). Multiply-shift bound, slight modulo-free bias
  // of < n / 2^64 which is irrelevant at the n used here.
  std::size_t next_index(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller on two uniform draws.
  double next_gaussian() {
    double u1 = 0.0;
    while (u1 == 0.0) u1 = next_double();
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  // Independent child stream for (seed, index) fan-out. Mixing both inputs
  // through the output function decorrelates neighbouring indices.
  static Rng derive(uint64_t seed, uint64_t index) {
    Rng mixer(seed);
    uint64_t a = mixer.next_u64();
    Rng mixer2(index ^ 0xA3EC647659359ACDULL);
    return Rng(a ^ mixer2.next_u64());
  }

  // Stream keyed by a label, e.g. a pipeline stage name. FNV-1a over bytes.
  static Rng derive(uint64_t seed, const std::string& label) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : label) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return derive(seed, h);
  }

  // Fisher-Yates over indices 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) {
      std::size_t j = next_index(i);
      std::swap(p[i - 1], p[j]);
    }
    return p;
  }

 private:
  uint64_t state_;
};

}  // namespace forkdiff
