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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gapcert/errors.hpp"

namespace gapcert {

// Largest number of integers a single sieve segment may represent. 2^20 bits
// keeps a segment resident in L2.
inline constexpr uint64_t kDefaultSegmentBudget = uint64_t{1} << 20;

enum class Bound : uint8_t { open, closed };

struct Bounds {
  Bound lo = Bound::closed;
  Bound hi = Bound::closed;
};

inline constexpr Bounds kOpen{Bound::open, Bound::open};
inline constexpr Bounds kClosed{Bound::closed, Bound::closed};

// Non-prime flags for the integers [base, base+length-1], one bit each.
// Bit i set means base+i is not prime (0 and 1 are flagged; 2 is not).
struct SieveSegment {
  uint64_t base = 0;
  uint64_t length = 0;
  std::vector<uint64_t> words;

  bool is_composite(uint64_t n) const {
    const uint64_t i = n - base;
    return (words[i >> 6] >> (i & 63)) & 1;
  }
  bool is_prime(uint64_t n) const { return !is_composite(n); }
};

// Sieve the inclusive range [lo, hi] using base primes up to
// floor_sqrt(hi). Throws BudgetError when the range exceeds `budget`.
SieveSegment sieve_range(uint64_t lo, uint64_t hi,
                         uint64_t budget = kDefaultSegmentBudget);

// Primes in the requested interval, ascending. Empty result is valid.
std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi, Bounds bounds);
uint64_t count_primes_in(uint64_t lo, uint64_t hi, Bounds bounds);
std::optional<uint64_t> first_prime_in(uint64_t lo, uint64_t hi, Bounds bounds);

// Adjacent primes. next_prime throws Error past the largest 64-bit prime;
// prev_prime requires n >= 3.
uint64_t next_prime(uint64_t n);
uint64_t prev_prime(uint64_t n);

// A stretch of consecutive non-prime integers, clipped to the queried open
// interval. run_length 0 means the interior holds no such stretch.
struct RunInfo {
  uint64_t start = 0;
  uint64_t run_length = 0;
};

// Longest stretch of consecutive composites strictly inside (lo, hi),
// boundary-clipped; ties resolved to the smallest start. Requires lo < hi.
RunInfo longest_composite_run(uint64_t lo, uint64_t hi,
                              uint64_t budget = kDefaultSegmentBudget);

// Calls fn for every prime in [lo, hi], ascending.
void for_each_prime(uint64_t lo, uint64_t hi,
                    const std::function<void(uint64_t)>& fn,
                    uint64_t budget = kDefaultSegmentBudget);

// Streaming enumerator: yields primes >= start in ascending order, sieving
// one segment at a time. next() returns nullopt once the 64-bit range is
// exhausted.
class PrimeEnumerator {
 public:
  explicit PrimeEnumerator(uint64_t start,
                           uint64_t budget = kDefaultSegmentBudget);
  std::optional<uint64_t> next();

 private:
  bool refill();

  SieveSegment seg_;
  uint64_t budget_;
  uint64_t next_base_;   // first integer of the next segment
  uint64_t cursor_ = 0;  // bit index of the next candidate within seg_
  bool done_ = false;
};

}  // namespace gapcert
