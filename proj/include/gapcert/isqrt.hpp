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

namespace gapcert {

// floor(sqrt(n)) over the full 64-bit range, integer arithmetic only.
// double-precision sqrt is off by one near 2^63, so the Newton iteration
// runs on integers, followed by a correction step. The comparisons use
// division (r <= n/r  <=>  r*r <= n for positive integers) to avoid
// overflowing the square.
constexpr uint64_t floor_sqrt(uint64_t n) {
  if (n < 2) return n;
  // Start above sqrt(n): n < 2^w implies sqrt(n) < 2^ceil(w/2).
  uint64_t x = uint64_t{1} << ((std::bit_width(n) + 1) / 2);
  while (true) {
    const uint64_t y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (x > n / x) --x;
  while (x + 1 <= n / (x + 1)) ++x;
  return x;
}

}  // namespace gapcert
