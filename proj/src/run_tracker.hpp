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

#include "gapcert/bits.hpp"
#include "gapcert/kernels.hpp"

// Shared word-at-a-time run bookkeeping. The scalar backend feeds every word
// through step(); the SIMD backends use the same tracker and only fast-path
// blocks that are entirely set (extend) or entirely clear (close).

namespace gapcert::kernels::detail {

class RunTracker {
 public:
  explicit RunTracker(uint64_t bit_lo) : bit_lo_(bit_lo), pos_(bit_lo) {}

  // Consume the low `nbits` bits of `w`; bit 0 corresponds to index pos_.
  void step(uint64_t w, unsigned nbits) {
    w &= bits::low_mask(nbits);
    unsigned i = 0;
    while (i < nbits) {
      const uint64_t rest = w >> i;
      if (rest & 1) {
        const unsigned ones = static_cast<unsigned>(std::countr_one(rest));
        if (cur_len_ == 0) cur_start_ = pos_ + i;
        cur_len_ += ones;
        i += ones;
        if (i < nbits) close_run();
      } else {
        if (cur_len_ != 0) close_run();
        const unsigned zeros = static_cast<unsigned>(std::countr_zero(rest));
        i += zeros > nbits - i ? nbits - i : zeros;
      }
    }
    pos_ += nbits;
  }

  // The whole next block of `nbits` bits is set.
  void step_all_set(uint64_t nbits) {
    if (cur_len_ == 0) cur_start_ = pos_;
    cur_len_ += nbits;
    pos_ += nbits;
  }

  // The whole next block of `nbits` bits is clear.
  void step_all_clear(uint64_t nbits) {
    if (cur_len_ != 0) close_run();
    pos_ += nbits;
  }

  RunScan finish() {
    if (cur_len_ != 0) {
      if (cur_start_ == bit_lo_) {
        out_.prefix_len = cur_len_;
        out_.all_set = true;
      }
      out_.suffix_len = cur_len_;
    }
    return out_;
  }

 private:
  void close_run() {
    if (cur_start_ == bit_lo_) {
      out_.prefix_len = cur_len_;
    } else if (cur_len_ > out_.best_len) {
      out_.best_len = cur_len_;
      out_.best_start = cur_start_;
    }
    cur_len_ = 0;
  }

  uint64_t bit_lo_;
  uint64_t pos_;
  uint64_t cur_len_ = 0;
  uint64_t cur_start_ = 0;
  RunScan out_;
};

}  // namespace gapcert::kernels::detail
