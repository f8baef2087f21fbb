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
#include <span>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gapcert/sieve.hpp"

namespace gapcert {

// Consecutive primes p < q. The composites count q-p-1 is the number of
// integers strictly between them; published tables often list q-p instead,
// which is one larger.
struct PrimeGapRecord {
  uint64_t p = 0;
  uint64_t q = 0;
  uint64_t composites = 0;
  friend bool operator==(const PrimeGapRecord&, const PrimeGapRecord&) = default;
};

// A gap whose composite count exceeds that of every gap between smaller
// primes. Ranks are 1-based and consecutive; prev_composites carries the
// preceding record's count (0 for the first record).
struct MaximalGapRecord {
  PrimeGapRecord record;
  uint32_t rank = 0;
  uint64_t prev_composites = 0;
  friend bool operator==(const MaximalGapRecord&, const MaximalGapRecord&) = default;
};

enum class GapConvention : uint8_t {
  difference,  // table lists q - p
  composites,  // table lists q - p - 1 (native)
};

// Every consecutive-prime pair (p, q) with lo <= p and q <= hi, ascending.
// Pairs straddling hi are not emitted.
void scan_gaps(uint64_t lo, uint64_t hi,
               const std::function<void(const PrimeGapRecord&)>& emit,
               uint64_t budget = kDefaultSegmentBudget);
std::vector<PrimeGapRecord> scan_gaps(uint64_t lo, uint64_t hi,
                                      uint64_t budget = kDefaultSegmentBudget);

// Maximal-gap records among the consecutive-prime pairs with q <= x; the
// gap straddling x is left for a wider scan to close. Requires x >= 3.
std::vector<MaximalGapRecord> maximal_gaps_up_to(
    uint64_t x, uint64_t budget = kDefaultSegmentBudget);

// One contiguous slice [lo, hi) of a partitioned scan: the local maximal
// gaps among pairs fully inside the slice, plus the boundary primes needed
// to stitch neighbouring slices.
struct ScanPart {
  uint64_t lo = 0;
  uint64_t hi = 0;  // half-open
  std::optional<uint64_t> first_prime;
  std::optional<uint64_t> last_prime;
  std::vector<PrimeGapRecord> local_records;
};

ScanPart scan_part(uint64_t lo, uint64_t hi,
                   uint64_t budget = kDefaultSegmentBudget);

// Stitch contiguous parts (first part must start at or below 2) into the
// record list a monolithic scan over the union would produce.
std::vector<MaximalGapRecord> merge_scan_parts(const std::vector<ScanPart>& parts);

// Structural invariants: first record (2,3,0), ranks consecutive, start
// primes / composites strictly increasing, stretches disjoint, odd
// composites for p > 2. With check_primality, every endpoint is also run
// through is_prime. Throws ValidationError.
void validate_records(std::span<const MaximalGapRecord> records,
                      bool check_primality = false);

// Line-oriented table: "<gap> <start_prime>" per line, '#' comments and
// blank lines skipped. Difference-convention gaps are converted by
// subtracting 1. Throws ParseError / ValidationError.
std::vector<MaximalGapRecord> import_gap_table(std::istream& in,
                                               GapConvention convention);

// Canonical native-format table (composites convention, ASCII, LF): a
// comment header followed by "<composites> <start_prime>" lines.
// import(export(r)) == r and export(import(t)) is byte-identical to t for
// canonical t.
void export_gap_table(const std::vector<MaximalGapRecord>& records,
                      std::ostream& out);

// Resumable scan state. Serialization carries a version header, the native
// table lines and an integrity tag; load rejects tampered bytes.
struct ScanCheckpoint {
  uint64_t last_prime = 0;  // 0 = fresh state, nothing scanned yet
  std::vector<MaximalGapRecord> records;

  std::string to_bytes() const;
  static ScanCheckpoint from_bytes(const std::string& bytes);

  // Atomic file round trip (write temp + rename).
  void save_file(const std::string& path) const;
  static ScanCheckpoint load_file(const std::string& path);

  friend bool operator==(const ScanCheckpoint&, const ScanCheckpoint&) = default;
};

// Advance `state` so its records cover every pair with q <= x. With
// workers > 1 the remaining range is partitioned, scanned concurrently and
// stitched deterministically; the result never depends on the worker count.
void advance_scan(ScanCheckpoint& state, uint64_t x, unsigned workers = 1,
                  uint64_t budget = kDefaultSegmentBudget);

// Largest bound B such that every gap starting at a prime <= B is closed by
// the pairs this state has seen: the sound `scanned_to` to hand to the
// record-based certifier. 0 for a fresh state.
uint64_t sound_scanned_to(const ScanCheckpoint& state);

}  // namespace gapcert
