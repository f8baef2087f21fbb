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
#include <string_view>
#include <vector>

// Data-parallel kernels over packed bit arrays. Every kernel has a scalar
// reference implementation; wider variants (AVX2 on x86-64) are selected at
// runtime and must be bit-for-bit equivalent to the scalar one.

namespace gapcert::kernels {

// Result of scanning the bit range [bit_lo, bit_hi) for runs of set bits.
//
// prefix/suffix describe the runs touching the range boundaries so a caller
// can stitch consecutive ranges together:
//   - prefix_len: length of the run starting exactly at bit_lo (0 if clear).
//   - suffix_len: length of the run ending exactly at bit_hi-1 (0 if clear).
//   - best_len/best_start: longest run that starts after bit_lo and is
//     closed by a clear bit before bit_hi. Ties keep the smallest start.
//   - all_set: the whole range is one run; prefix and suffix both cover it.
struct RunScan {
  uint64_t prefix_len = 0;
  uint64_t best_len = 0;
  uint64_t best_start = 0;  // absolute bit index; meaningful iff best_len > 0
  uint64_t suffix_len = 0;
  bool all_set = false;
};

using PopcountFn = uint64_t (*)(const uint64_t* words, uint64_t bit_lo,
                                uint64_t bit_hi);
using ScanRunsFn = RunScan (*)(const uint64_t* words, uint64_t bit_lo,
                               uint64_t bit_hi);

struct Backend {
  const char* name;
  PopcountFn popcount_set;  // number of set bits in [bit_lo, bit_hi)
  ScanRunsFn scan_set_runs;
};

// Always available.
const Backend& scalar_backend();

// Backend in use: the widest supported one, unless overridden by
// set_backend() or the GAPCERT_KERNELS environment variable
// ("scalar" or "avx2").
const Backend& active_backend();
void set_backend(const Backend& backend);

// Lookup by name; nullptr when unknown or unsupported on this CPU.
const Backend* find_backend(std::string_view name);
std::vector<const Backend*> supported_backends();

}  // namespace gapcert::kernels
