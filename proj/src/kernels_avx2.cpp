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

// AVX2 variants of the bit-array kernels. This translation unit is compiled
// with -mavx2 and only reached after a runtime cpuid check, so the rest of
// the library stays runnable on baseline x86-64.

#include <immintrin.h>

#include <cstdint>

#include "gapcert/bits.hpp"
#include "gapcert/kernels.hpp"
#include "run_tracker.hpp"

namespace gapcert::kernels {

namespace {

// Positional popcount via the nibble-lookup shuffle (Mula), accumulated with
// SAD against zero. Handles whole 4-word blocks; edges fall back to scalar.
uint64_t popcount_avx2(const uint64_t* words, uint64_t bit_lo,
                       uint64_t bit_hi) {
  if (bit_lo >= bit_hi) return 0;
  uint64_t total = 0;

  const uint64_t wlo = bit_lo >> 6;
  const uint64_t whi = (bit_hi - 1) >> 6;
  if (wlo == whi) {
    const uint64_t mask = bits::low_mask(static_cast<unsigned>(bit_hi - (wlo << 6))) &
                          ~bits::low_mask(static_cast<unsigned>(bit_lo & 63));
    return static_cast<uint64_t>(__builtin_popcountll(words[wlo] & mask));
  }
  total += static_cast<uint64_t>(__builtin_popcountll(
      words[wlo] & ~bits::low_mask(static_cast<unsigned>(bit_lo & 63))));

  uint64_t wi = wlo + 1;
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                       3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                       2, 3, 2, 3, 3, 4);
  const __m256i nib = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  for (; wi + 4 <= whi; wi += 4) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + wi));
    const __m256i lo = _mm256_and_si256(v, nib);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), nib);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                        _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  total += lanes[0] + lanes[1] + lanes[2] + lanes[3];

  for (; wi < whi; ++wi) {
    total += static_cast<uint64_t>(__builtin_popcountll(words[wi]));
  }
  const unsigned tail = static_cast<unsigned>(bit_hi - (whi << 6));
  total += static_cast<uint64_t>(
      __builtin_popcountll(words[whi] & bits::low_mask(tail)));
  return total;
}

RunScan scan_runs_avx2(const uint64_t* words, uint64_t bit_lo,
                       uint64_t bit_hi) {
  detail::RunTracker tracker(bit_lo);
  if (bit_lo >= bit_hi) return tracker.finish();
  uint64_t pos = bit_lo;

  // Leading partial word.
  if (pos & 63) {
    const unsigned off = static_cast<unsigned>(pos & 63);
    const unsigned avail = 64 - off;
    const uint64_t left = bit_hi - pos;
    const unsigned take = left < avail ? static_cast<unsigned>(left) : avail;
    tracker.step(words[pos >> 6] >> off, take);
    pos += take;
  }

  // 256-bit blocks: skip fully set / fully clear blocks without touching the
  // per-bit bookkeeping.
  const __m256i ones = _mm256_set1_epi64x(-1);
  while (pos + 256 <= bit_hi) {
    const uint64_t wi = pos >> 6;
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + wi));
    if (_mm256_testc_si256(v, ones)) {
      tracker.step_all_set(256);
    } else if (_mm256_testz_si256(v, v)) {
      tracker.step_all_clear(256);
    } else {
      tracker.step(words[wi], 64);
      tracker.step(words[wi + 1], 64);
      tracker.step(words[wi + 2], 64);
      tracker.step(words[wi + 3], 64);
    }
    pos += 256;
  }

  while (pos < bit_hi) {
    const uint64_t left = bit_hi - pos;
    const unsigned take = left < 64 ? static_cast<unsigned>(left) : 64;
    tracker.step(words[pos >> 6], take);
    pos += take;
  }
  return tracker.finish();
}

}  // namespace

const Backend& avx2_backend() {
  static const Backend backend{"avx2", &popcount_avx2, &scan_runs_avx2};
  return backend;
}

}  // namespace gapcert::kernels
