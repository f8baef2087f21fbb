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
#include <optional>
#include <span>
#include <vector>

#include "gapcert/gaps.hpp"
#include "gapcert/report.hpp"
#include "gapcert/sieve.hpp"

namespace gapcert {

// The central claim under test, per window size n: every run of n
// consecutive integers strictly between n^2 and (n+1)^2 contains a prime.
// Equivalently: the longest composite run clipped to that open window is
// shorter than n.

// Verdict for one window size.
//  - refuted: witness is the start of the first all-composite n-window.
//  - proven via records: certifying_rank names the record whose running
//    maximum bounds the window; empty certifying_rank means exhaustive
//    (brute) verification.
//  - undetermined: only the record-based certifier returns this, when the
//    records cannot settle the window.
struct WindowStatus {
  uint64_t n = 0;
  Verdict verdict = Verdict::undetermined;
  std::optional<uint64_t> witness;
  std::optional<uint32_t> certifying_rank;
};

// Exhaustive check of the window (n^2, (n+1)^2); never undetermined.
// Throws Error when (n+1)^2 exceeds the 64-bit range; requires n >= 1.
WindowStatus conjecture1_brute(uint64_t n,
                               uint64_t budget = kDefaultSegmentBudget);

// Certification from maximal-gap records alone.
//
// Premise: `records` lists every maximal gap starting at a prime <=
// scanned_to (see sound_scanned_to for scan states; an imported published
// table is complete up to its last closing prime by construction).
//
// Proven when the records logically rule out any composite run of clipped
// length >= n inside the window: every known record stretch clips shorter
// than n, and no hypothetical gap bounded by the running maximum could fit
// n composites into the window. Never refuted: records alone cannot place
// non-record runs, so a window they cannot certify is undetermined.
WindowStatus conjecture1_from_gaps(std::span<const MaximalGapRecord> records,
                                   uint64_t n, uint64_t scanned_to);

// One n-range certified by a single record under one of the three
// published-table certification rules (see paper_rule_ranges).
struct CertifiedRange {
  uint64_t n_lo = 0;
  uint64_t n_hi = 0;  // inclusive
  uint32_t source_rank = 0;
  int rule = 0;  // 1, 2 or 3
  friend bool operator==(const CertifiedRange&, const CertifiedRange&) = default;
};

// The literal per-record certification rules, with s = floor_sqrt(P) and
// G the record's composite count:
//   rule 1: G <  s                      -> every n in [G-1, s-1]
//   rule 2: G == s and (s+1)^2-P-1 < s  -> n in {s-1, s}
//   rule 3: G >  s and (s+1)^2-P-1 < s
//           and previous record < s     -> n = s
// Ranges are clamped to n >= 1; empty ranges are omitted. Overlaps between
// records are kept. These rules certify a subset of what
// conjecture1_from_gaps proves; they are reproduced verbatim as a
// cross-check, not used as the primary certifier.
std::vector<CertifiedRange> paper_rule_ranges(
    std::span<const MaximalGapRecord> records);

enum class Method : uint8_t { brute, gaps, both };

const char* to_string(Method m);

struct CertifyOptions {
  Method method = Method::brute;
  std::span<const MaximalGapRecord> records = {};
  uint64_t scanned_to = 0;
  unsigned workers = 1;  // 0 = hardware concurrency
  uint64_t segment_budget = kDefaultSegmentBudget;
};

// Per-n verdicts over [n_lo, n_hi].
//  - brute: exhaustive per window.
//  - gaps: record-based; evaluated analytically so wide ranges with few
//    non-proven entries stay cheap.
//  - both: runs the two engines per n, counts any gaps-proven/brute-refuted
//    pair as a disagreement (soundness cross-check), and lets brute settle
//    windows the records leave undetermined.
VerificationReport certify_range(uint64_t n_lo, uint64_t n_hi,
                                 const CertifyOptions& options);

// Re-run undetermined entries of a conjecture1 report through the brute
// engine (entries with n <= max_n only). Returns the number settled.
uint64_t settle_with_brute(VerificationReport& report, uint64_t max_n,
                           uint64_t budget = kDefaultSegmentBudget);

// Largest N such that every n in [report.n_lo, N] is proven; n_lo-1 if the
// first item already is not.
uint64_t longest_proven_prefix(const VerificationReport& report);

// ---- Derived statements -------------------------------------------------

// Primes strictly between n^2 and (n+1)^2; at least two follow from the
// window claim (the 2n interior integers split into two disjoint n-windows).
struct LegendreResult {
  uint64_t count = 0;
  std::optional<uint64_t> first, second;
};
LegendreResult legendre_check(uint64_t n);

// Primes strictly between p^2 and q^2 for consecutive primes 2 < p < q.
// Throws Error when the pair is invalid.
uint64_t brocard_check(uint64_t p, uint64_t q);

// sqrt(q) - sqrt(p) < 1 decided exactly: with d = q - p - 1, the inequality
// is equivalent to d^2 < 4p (no floating point involved).
bool andrica_check(uint64_t p, uint64_t q);

// The worst-case pair p = n^2+n+1, q = n^2+3n+2 satisfies
// sqrt(q) - sqrt(p) < 1; the chain reduces to n^2 < n^2+n+1 in integers.
bool andrica_extremal_bound(uint64_t n);

// Smallest primes in [n^2-n+1, n^2-1] and [n^2+1, n^2+n]; requires n >= 2.
// A missing witness is reported, not thrown: it would be a counterexample.
struct OppermannResult {
  uint64_t low_lo = 0, low_hi = 0;
  uint64_t high_lo = 0, high_hi = 0;
  std::optional<uint64_t> low_witness, high_witness;
  bool found() const { return low_witness && high_witness; }
};
OppermannResult oppermann_check(uint64_t n);

// Smallest prime in a closed interval attached to n.
struct IntervalResult {
  uint64_t lo = 0, hi = 0;
  std::optional<uint64_t> witness;
};

// [n, n + 2*floor_sqrt(n) - 1], n >= 1.
IntervalResult interval_check(uint64_t n);

// Position of a relative to the surrounding squares n^2 < ... < (n+1)^2
// selects the interval granted a prime:
//   square:     a = n^2          -> [a, a + s]
//   lower half: n^2 < a <= n^2+n+1 -> [a, a + s - 1]
//   upper half: n^2+n+2 <= a < (n+1)^2 -> [a, a + 2s - 1]
// with s = floor_sqrt(a). The three classes partition the positive integers.
enum class StatementClass : uint8_t { square, lower_half, upper_half };
const char* to_string(StatementClass c);

struct StatementResult {
  StatementClass cls = StatementClass::square;
  uint64_t lo = 0, hi = 0;
  std::optional<uint64_t> witness;
};
StatementResult statement_bound(uint64_t a);

// Parity-split variant, m >= 2: odd m gets [m, m + 2*floor_sqrt(m) - 2],
// even m gets [m+1, m + 2*floor_sqrt(m) - 1].
IntervalResult parity_variant_check(uint64_t m);

// At least one of [n - floor_sqrt(n) + 1, n] and [n, n + floor_sqrt(n) - 1]
// contains a prime; n >= 2. Reports which side(s) succeeded.
enum class HalfSide : uint8_t { none, left, right, both };
const char* to_string(HalfSide s);

struct HalfIntervalResult {
  HalfSide side = HalfSide::none;
  uint64_t left_lo = 0, left_hi = 0;
  uint64_t right_lo = 0, right_hi = 0;
  std::optional<uint64_t> left_witness, right_witness;
};
HalfIntervalResult half_interval_check(uint64_t n);

// ---- Campaign runners (shared by the CLI and the acceptance suite) ------

VerificationReport verify_legendre(uint64_t n_lo, uint64_t n_hi,
                                   unsigned workers = 1);
// All consecutive prime pairs 2 < p < q <= max_q.
VerificationReport verify_brocard(uint64_t max_q);
// All consecutive prime pairs with p < primes_below; also cross-checks the
// exact integer test against a long-double evaluation (disagreements
// counter).
VerificationReport verify_andrica(uint64_t primes_below);
VerificationReport verify_oppermann(uint64_t n_lo, uint64_t n_hi,
                                    unsigned workers = 1);
VerificationReport verify_interval(uint64_t n_lo, uint64_t n_hi,
                                   unsigned workers = 1);
VerificationReport verify_statements(uint64_t a_lo, uint64_t a_hi,
                                     unsigned workers = 1);
VerificationReport verify_parity(uint64_t m_lo, uint64_t m_hi,
                                 unsigned workers = 1);
VerificationReport verify_half(uint64_t n_lo, uint64_t n_hi,
                               unsigned workers = 1);

}  // namespace gapcert
