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

#include "gapcert/sieve.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>

#include "gapcert/bits.hpp"
#include "gapcert/isqrt.hpp"
#include "gapcert/kernels.hpp"
#include "gapcert/primality.hpp"

namespace gapcert {

namespace {

constexpr uint64_t kU64Max = std::numeric_limits<uint64_t>::max();

// Shared, lazily grown table of the odd base primes. Snapshots are handed
// out by shared_ptr so concurrent sieving never sees a reallocation.
class BasePrimes {
 public:
  std::shared_ptr<const std::vector<uint32_t>> at_least(uint32_t limit) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (limit <= limit_ && table_) return table_;
    }
    return grow(limit);
  }

 private:
  std::shared_ptr<const std::vector<uint32_t>> grow(uint32_t limit) {
    std::lock_guard<std::mutex> lock(mu_);
    if (limit <= limit_ && table_) return table_;
    uint64_t target = std::max<uint64_t>(limit, 1024);
    target = std::max<uint64_t>(target, uint64_t{limit_} * 2);
    target = std::min<uint64_t>(target, uint64_t{1} << 32);

    // Odd-only flat sieve: bit i represents 2i+1.
    const uint64_t half = target / 2 + 1;
    std::vector<uint64_t> flags((half + 63) / 64, 0);
    const uint64_t root = floor_sqrt(target);
    for (uint64_t p = 3; p <= root; p += 2) {
      if (bits::test(flags.data(), p / 2)) continue;
      for (uint64_t m = p * p; m <= target; m += 2 * p) {
        bits::set(flags.data(), m / 2);
      }
    }
    auto primes = std::make_shared<std::vector<uint32_t>>();
    for (uint64_t p = 3; p <= target; p += 2) {
      if (!bits::test(flags.data(), p / 2)) {
        primes->push_back(static_cast<uint32_t>(p));
      }
    }
    table_ = std::move(primes);
    limit_ = static_cast<uint32_t>(target);
    return table_;
  }

  std::mutex mu_;
  std::shared_ptr<const std::vector<uint32_t>> table_;
  uint32_t limit_ = 0;
};

BasePrimes& base_primes() {
  static BasePrimes instance;
  return instance;
}

// Normalized inclusive interval; empty() when the request has no interior.
struct Incl {
  uint64_t lo = 1;
  uint64_t hi = 0;
  bool empty() const { return lo > hi; }
};

Incl normalize(uint64_t lo, uint64_t hi, Bounds bounds) {
  Incl r{lo, hi};
  if (bounds.lo == Bound::open) {
    if (lo == kU64Max) return {1, 0};
    r.lo = lo + 1;
  }
  if (bounds.hi == Bound::open) {
    if (hi == 0) return {1, 0};
    r.hi = hi - 1;
  }
  return r;
}

}  // namespace

SieveSegment sieve_range(uint64_t lo, uint64_t hi, uint64_t budget) {
  if (lo > hi) throw Error("sieve_range: lo > hi");
  if (hi - lo == kU64Max || hi - lo + 1 > budget) {
    throw BudgetError("sieve_range: range exceeds segment budget");
  }
  const uint64_t length = hi - lo + 1;

  SieveSegment seg;
  seg.base = lo;
  seg.length = length;
  seg.words.assign((length + 63) / 64, 0);
  uint64_t* w = seg.words.data();

  // Mark the even integers wholesale, then fix up 0, 1 and 2.
  const uint64_t even_pattern =
      (lo % 2 == 0) ? 0x5555555555555555ull : 0xaaaaaaaaaaaaaaaaull;
  std::fill(seg.words.begin(), seg.words.end(), even_pattern);
  if (lo <= 2 && 2 <= hi) bits::clear(w, 2 - lo);
  if (lo <= 1) bits::set(w, 1 - lo);
  if (lo == 0) bits::set(w, 0);

  const uint64_t root = floor_sqrt(hi);
  if (root >= 3) {
    auto primes = base_primes().at_least(static_cast<uint32_t>(root));
    for (uint32_t p32 : *primes) {
      const uint64_t p = p32;
      if (p > root) break;
      // First odd multiple of p inside [max(p*p, lo), hi].
      uint64_t start = p * p;
      if (start < lo) {
        const uint64_t rem = lo % p;
        if (rem == 0) {
          start = lo;
        } else if (lo > kU64Max - (p - rem)) {
          continue;  // next multiple would wrap past 2^64
        } else {
          start = lo + (p - rem);
        }
      }
      if (start % 2 == 0) {
        if (start > kU64Max - p) continue;
        start += p;
      }
      if (start > hi) continue;
      const uint64_t step = 2 * p;
      for (uint64_t m = start;;) {
        bits::set(w, m - lo);
        if (hi - m < step) break;
        m += step;
      }
    }
  }

  // Keep slack bits in the last word set so scans can treat them as
  // non-prime without extra masking.
  const unsigned used = static_cast<unsigned>(length & 63);
  if (used != 0) seg.words.back() |= ~bits::low_mask(used);
  return seg;
}

namespace {

// Visits primes in the inclusive range [lo, hi] segment by segment.
template <typename Fn>
void visit_primes(uint64_t lo, uint64_t hi, uint64_t budget, Fn&& fn) {
  if (lo > hi) return;
  uint64_t base = lo;
  while (true) {
    const uint64_t span = std::min<uint64_t>(budget - 1, hi - base);
    const SieveSegment seg = sieve_range(base, base + span, budget);
    const uint64_t nbits = seg.length;
    const uint64_t* w = seg.words.data();
    for (uint64_t bit = bits::next_clear(w, 0, nbits); bit < nbits;
         bit = bits::next_clear(w, bit + 1, nbits)) {
      if (!fn(seg.base + bit)) return;
    }
    if (hi - base <= span) return;
    base += span + 1;
  }
}

}  // namespace

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi, Bounds bounds) {
  std::vector<uint64_t> out;
  const Incl r = normalize(lo, hi, bounds);
  if (r.empty()) return out;
  visit_primes(r.lo, r.hi, kDefaultSegmentBudget, [&](uint64_t p) {
    out.push_back(p);
    return true;
  });
  return out;
}

uint64_t count_primes_in(uint64_t lo, uint64_t hi, Bounds bounds) {
  const Incl r = normalize(lo, hi, bounds);
  if (r.empty()) return 0;
  const auto& kern = kernels::active_backend();
  uint64_t count = 0;
  uint64_t base = r.lo;
  while (true) {
    const uint64_t span = std::min<uint64_t>(kDefaultSegmentBudget - 1, r.hi - base);
    const SieveSegment seg = sieve_range(base, base + span);
    count += seg.length - kern.popcount_set(seg.words.data(), 0, seg.length);
    if (r.hi - base <= span) return count;
    base += span + 1;
  }
}

std::optional<uint64_t> first_prime_in(uint64_t lo, uint64_t hi, Bounds bounds) {
  const Incl r = normalize(lo, hi, bounds);
  if (r.empty()) return std::nullopt;
  std::optional<uint64_t> found;
  visit_primes(r.lo, r.hi, kDefaultSegmentBudget, [&](uint64_t p) {
    found = p;
    return false;
  });
  return found;
}

uint64_t next_prime(uint64_t n) {
  // Point query: a witness test per odd candidate beats sieving here, and
  // stays exact at any magnitude.
  uint64_t c = n < 2 ? 2 : n + 1;
  if (c == 2) return 2;
  if (c % 2 == 0) ++c;
  for (;; c += 2) {
    if (is_prime(c)) return c;
    if (c > kU64Max - 2) throw Error("next_prime: no 64-bit prime above input");
  }
}

uint64_t prev_prime(uint64_t n) {
  if (n < 3) throw Error("prev_prime: no prime below 3");
  if (n == 3) return 2;
  uint64_t c = n - 1;
  if (c % 2 == 0) --c;
  for (; c >= 3; c -= 2) {
    if (is_prime(c)) return c;
  }
  return 2;
}

RunInfo longest_composite_run(uint64_t lo, uint64_t hi, uint64_t budget) {
  if (lo >= hi) throw Error("longest_composite_run: requires lo < hi");
  if (hi - lo < 2) return {};  // empty interior
  const uint64_t int_lo = lo + 1;
  const uint64_t int_hi = hi - 1;

  const auto& kern = kernels::active_backend();
  RunInfo best;
  uint64_t carry_len = 0;  // open run continuing from the previous segment
  const auto offer = [&](uint64_t len, uint64_t start) {
    if (len > best.run_length) {
      best.run_length = len;
      best.start = start;
    }
  };

  uint64_t base = int_lo;
  while (true) {
    const uint64_t span = std::min<uint64_t>(budget - 1, int_hi - base);
    const SieveSegment seg = sieve_range(base, base + span, budget);
    const auto scan = kern.scan_set_runs(seg.words.data(), 0, seg.length);
    if (scan.all_set) {
      carry_len += seg.length;
    } else {
      offer(carry_len + scan.prefix_len, seg.base - carry_len);
      if (scan.best_len > 0) offer(scan.best_len, seg.base + scan.best_start);
      carry_len = scan.suffix_len;
    }
    if (int_hi - base <= span) break;
    base += span + 1;
  }
  offer(carry_len, int_hi - carry_len + 1);
  return best;
}

void for_each_prime(uint64_t lo, uint64_t hi,
                    const std::function<void(uint64_t)>& fn, uint64_t budget) {
  if (lo > hi) return;
  visit_primes(lo, hi, budget, [&](uint64_t p) {
    fn(p);
    return true;
  });
}

PrimeEnumerator::PrimeEnumerator(uint64_t start, uint64_t budget)
    : budget_(budget), next_base_(start) {}

bool PrimeEnumerator::refill() {
  if (next_base_ == 0 && seg_.length != 0) return false;  // wrapped past 2^64
  const uint64_t base = next_base_;
  const uint64_t span = std::min<uint64_t>(budget_ - 1, kU64Max - base);
  seg_ = sieve_range(base, base + span, budget_);
  cursor_ = 0;
  next_base_ = (base + span == kU64Max) ? 0 : base + span + 1;
  return true;
}

std::optional<uint64_t> PrimeEnumerator::next() {
  if (done_) return std::nullopt;
  while (true) {
    if (seg_.length == 0 || cursor_ >= seg_.length) {
      if (seg_.length != 0 && next_base_ == 0) {
        done_ = true;
        return std::nullopt;
      }
      if (!refill()) {
        done_ = true;
        return std::nullopt;
      }
    }
    const uint64_t bit =
        bits::next_clear(seg_.words.data(), cursor_, seg_.length);
    if (bit < seg_.length) {
      cursor_ = bit + 1;
      return seg_.base + bit;
    }
    cursor_ = seg_.length;
  }
}

}  // namespace gapcert
