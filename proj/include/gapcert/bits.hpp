// Copyright 2026 The gapcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>

namespace gapcert::bits {

inline constexpr uint64_t kAllSet = ~uint64_t{0};

// Mask with the low `n` bits set, n in [0, 64].
constexpr uint64_t low_mask(unsigned n) {
  return n >= 64 ? kAllSet : (uint64_t{1} << n) - 1;
}

constexpr bool test(const uint64_t* words, uint64_t bit) {
  return (words[bit >> 6] >> (bit & 63)) & 1;
}

constexpr void set(uint64_t* words, uint64_t bit) {
  words[bit >> 6] |= uint64_t{1} << (bit & 63);
}

constexpr void clear(uint64_t* words, uint64_t bit) {
  words[bit >> 6] &= ~(uint64_t{1} << (bit & 63));
}

// Index of the first set bit in [from, end), or `end` if there is none.
inline uint64_t next_set(const uint64_t* words, uint64_t from, uint64_t end) {
  if (from >= end) return end;
  uint64_t wi = from >> 6;
  uint64_t w = words[wi] & ~low_mask(from & 63);
  while (true) {
    if (w != 0) {
      const uint64_t bit = (wi << 6) + static_cast<unsigned>(std::countr_zero(w));
      return bit < end ? bit : end;
    }
    ++wi;
    if ((wi << 6) >= end) return end;
    w = words[wi];
  }
}

// Index of the first clear bit in [from, end), or `end` if there is none.
inline uint64_t next_clear(const uint64_t* words, uint64_t from, uint64_t end) {
  if (from >= end) return end;
  uint64_t wi = from >> 6;
  uint64_t w = ~words[wi] & ~low_mask(from & 63);
  while (true) {
    if (w != 0) {
      const uint64_t bit = (wi << 6) + static_cast<unsigned>(std::countr_zero(w));
      return bit < end ? bit : end;
    }
    ++wi;
    if ((wi << 6) >= end) return end;
    w = ~words[wi];
  }
}

}  // namespace gapcert::bits
