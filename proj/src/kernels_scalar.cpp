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

#include <bit>
#include <cstdint>

#include "gapcert/bits.hpp"
#include "gapcert/kernels.hpp"
#include "run_tracker.hpp"

namespace gapcert::kernels {

namespace {

uint64_t popcount_scalar(const uint64_t* words, uint64_t bit_lo,
                         uint64_t bit_hi) {
  if (bit_lo >= bit_hi) return 0;
  const uint64_t wlo = bit_lo >> 6;
  const uint64_t whi = (bit_hi - 1) >> 6;
  if (wlo == whi) {
    const uint64_t mask = bits::low_mask(static_cast<unsigned>(bit_hi - (wlo << 6))) &
                          ~bits::low_mask(static_cast<unsigned>(bit_lo & 63));
    return static_cast<uint64_t>(std::popcount(words[wlo] & mask));
  }
  uint64_t total = static_cast<uint64_t>(
      std::popcount(words[wlo] & ~bits::low_mask(static_cast<unsigned>(bit_lo & 63))));
  for (uint64_t wi = wlo + 1; wi < whi; ++wi) {
    total += static_cast<uint64_t>(std::popcount(words[wi]));
  }
  const unsigned tail = static_cast<unsigned>(bit_hi - (whi << 6));
  total += static_cast<uint64_t>(std::popcount(words[whi] & bits::low_mask(tail)));
  return total;
}

RunScan scan_runs_scalar(const uint64_t* words, uint64_t bit_lo,
                         uint64_t bit_hi) {
  detail::RunTracker tracker(bit_lo);
  if (bit_lo >= bit_hi) return tracker.finish();
  uint64_t pos = bit_lo;
  while (pos < bit_hi) {
    const uint64_t wi = pos >> 6;
    const unsigned off = static_cast<unsigned>(pos & 63);
    const unsigned avail = 64 - off;
    const uint64_t left = bit_hi - pos;
    const unsigned take = left < avail ? static_cast<unsigned>(left) : avail;
    tracker.step(words[wi] >> off, take);
    pos += take;
  }
  return tracker.finish();
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar", &popcount_scalar, &scan_runs_scalar};
  return backend;
}

}  // namespace gapcert::kernels
