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
#include <string>
#include <vector>

namespace gapcert {

enum class Verdict : uint8_t { proven, refuted, undetermined };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// One non-proven item of a verification campaign. `n` is the campaign index
// (window size, interval start, ...); `witness` carries the counterexample
// location when there is one.
struct StatusEntry {
  uint64_t n = 0;
  Verdict verdict = Verdict::undetermined;
  std::optional<uint64_t> witness;
  std::optional<uint32_t> record_rank;
  std::string note;
  friend bool operator==(const StatusEntry&, const StatusEntry&) = default;
};

struct ReportCounters {
  uint64_t proven = 0;
  uint64_t refuted = 0;
  uint64_t undetermined = 0;
  uint64_t disagreements = 0;
  friend bool operator==(const ReportCounters&, const ReportCounters&) = default;
};

// Aggregated result of a range check. Per-item statuses are sparse: only
// non-proven items are retained; proven+refuted+undetermined always sums to
// the number of items checked.
struct VerificationReport {
  std::string kind;    // "conjecture1", "legendre", ...
  std::string method;  // "brute" | "gaps" | "both" | "direct"
  uint64_t n_lo = 0;
  uint64_t n_hi = 0;
  ReportCounters counters;
  std::vector<StatusEntry> non_proven;  // ascending n
  double wall_ms = 0.0;
  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

enum class ReportFormat : uint8_t { json, csv, text };

// JSON has stable key order and round-trips through read_report_json. CSV is
// a header row, one row per non-proven item and a trailing summary row. With
// verbose_all the text format lists every item, proven included.
std::string emit_report(const VerificationReport& report, ReportFormat format,
                        bool verbose_all = false);
VerificationReport read_report_json(const std::string& json_text);

}  // namespace gapcert
