// Copyright 2026 The lsss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lsss {

// Unbiased draw in [0, bound). Rejection sampling over raw mt19937_64 output
// keeps the stream identical on every platform; std::uniform_int_distribution
// leaves the mapping implementation-defined and would break seed
// reproducibility across standard libraries.
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
  // 2^64 mod bound, computed without 128-bit arithmetic.
  uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Cheap seed mixer for deriving per-worker seeds from a master seed.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seeded in-place shuffle, same caveat as uniform_below: std::shuffle draws
// through uniform_int_distribution and is not reproducible across platforms.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = size_t(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace lsss
