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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "gapcert/conjectures.hpp"
#include "gapcert/isqrt.hpp"
#include "oracle.hpp"

using namespace gapcert;

TEST_SUITE_BEGIN("conjectures");

TEST_CASE("conjecture1_brute") {
  for (uint64_t n : {1, 2, 3, 10, 100}) {
    const WindowStatus ws = conjecture1_brute(n);
    CHECK(ws.verdict == Verdict::proven);
    CHECK_FALSE(ws.certifying_rank.has_value());  // exhaustive
  }
  CHECK_THROWS_AS(conjecture1_brute(0), Error);
  CHECK_THROWS_AS(conjecture1_brute(UINT64_MAX), Error);
}

TEST_CASE("conjecture1_from_gaps on the desk-scale record list") {
  const auto recs600 = maximal_gaps_up_to(600);

  SUBCASE("n=10 is proven: the 113..127 stretch clips to 7 < 10") {
    const WindowStatus ws = conjecture1_from_gaps(recs600, 10, 600);
    CHECK(ws.verdict == Verdict::proven);
    CHECK(ws.certifying_rank.has_value());
  }

  SUBCASE("n=30 is undetermined: 31^2 exceeds the scanned bound") {
    const WindowStatus ws = conjecture1_from_gaps(recs600, 30, 600);
    CHECK(ws.verdict == Verdict::undetermined);
  }

  SUBCASE("exact undetermined set among n = 1..23") {
    // Records alone cannot exclude a hidden tie-sized run for these n; the
    // brute oracle proves all of them.
    const std::vector<uint64_t> expect{3, 5, 11, 12, 13};
    std::vector<uint64_t> got;
    for (uint64_t n = 1; n <= 23; ++n) {
      if (conjecture1_from_gaps(recs600, n, 600).verdict ==
          Verdict::undetermined) {
        got.push_back(n);
      }
      CHECK(conjecture1_brute(n).verdict == Verdict::proven);
    }
    CHECK(got == expect);
  }

  SUBCASE("soundness: gaps-proven implies brute-proven") {
    const auto recs = maximal_gaps_up_to(1000000);
    for (uint64_t n = 1; n <= 500; ++n) {
      const WindowStatus gv = conjecture1_from_gaps(recs, n, 1000000);
      if (gv.verdict == Verdict::proven) {
        CHECK(conjecture1_brute(n).verdict == Verdict::proven);
      }
    }
  }

  SUBCASE("n=100 proven with records to 10^6") {
    const auto recs = maximal_gaps_up_to(1000000);
    const WindowStatus ws = conjecture1_from_gaps(recs, 100, 1000000);
    CHECK(ws.verdict == Verdict::proven);
    CHECK(conjecture1_brute(100).verdict == Verdict::proven);
  }

  SUBCASE("incomplete record lists are rejected") {
    auto recs = recs600;
    recs.erase(recs.begin());
    for (std::size_t i = 0; i < recs.size(); ++i) {
      recs[i].rank = static_cast<uint32_t>(i + 1);
    }
    recs[0].prev_composites = 0;
    CHECK_THROWS_AS(conjecture1_from_gaps(recs, 10, 600), ValidationError);
  }
}

TEST_CASE("paper_rule_ranges reproduces the three bullet rules") {
  const auto recs600 = maximal_gaps_up_to(600);
  const auto ranges = paper_rule_ranges(recs600);

  // (2,3,0): s=1, rule 1 clamps to the empty range; nothing emitted.
  for (const CertifiedRange& r : ranges) CHECK(r.source_rank != 1);

  // Frozen expectations for the first seven records.
  const std::vector<CertifiedRange> expect{
      {1, 1, 2, 2},    // (3,5,1): G=s=1, clip 0 < 1
      {2, 2, 3, 3},    // (7,11,3): G=3 > s=2, clip 1 < 2, prev 1 < 2
      {4, 4, 4, 3},    // (23,29,5): G=5 > s=4, clip 1 < 4, prev 3 < 4
      {6, 8, 5, 1},    // (89,97,7): G=7 < s=9
      {10, 10, 6, 3},  // (113,127,13): G=13 > s=10, clip 7 < 10, prev 7 < 10
      {16, 21, 7, 1},  // (523,541,17): G=17 < s=22
  };
  CHECK(ranges == expect);
}

TEST_CASE("bullet-rule ranges are subsumed by the certifier") {
  const auto recs = maximal_gaps_up_to(1000000);
  const uint64_t scanned_to = 1000000;
  for (const CertifiedRange& r : paper_rule_ranges(recs)) {
    for (uint64_t n = r.n_lo; n <= r.n_hi; ++n) {
      const WindowStatus ws = conjecture1_from_gaps(recs, n, scanned_to);
      CAPTURE(r.source_rank);
      CAPTURE(n);
      CHECK(ws.verdict == Verdict::proven);
    }
  }
}

TEST_CASE("certify_range") {
  const auto recs = maximal_gaps_up_to(70000);
  const uint64_t scanned_to = 65536;  // sound: records closed well past this

  SUBCASE("brute over a small range") {
    const VerificationReport rep =
        certify_range(1, 200, {.method = Method::brute});
    CHECK(rep.counters.proven == 200);
    CHECK(rep.counters.refuted == 0);
    CHECK(rep.counters.undetermined == 0);
    CHECK(rep.non_proven.empty());
    CHECK(rep.counters.proven + rep.counters.refuted +
              rep.counters.undetermined ==
          rep.n_hi - rep.n_lo + 1);
  }

  SUBCASE("analytic gaps evaluation equals the per-n certifier") {
    CertifyOptions opt;
    opt.method = Method::gaps;
    opt.records = recs;
    opt.scanned_to = scanned_to;
    const VerificationReport rep = certify_range(1, 300, opt);
    uint64_t undetermined = 0;
    for (uint64_t n = 1; n <= 300; ++n) {
      const WindowStatus ws = conjecture1_from_gaps(recs, n, scanned_to);
      const bool listed =
          std::find_if(rep.non_proven.begin(), rep.non_proven.end(),
                       [&](const StatusEntry& e) { return e.n == n; }) !=
          rep.non_proven.end();
      CAPTURE(n);
      CHECK(listed == (ws.verdict == Verdict::undetermined));
      if (ws.verdict == Verdict::undetermined) ++undetermined;
    }
    CHECK(rep.counters.undetermined == undetermined);
    CHECK(rep.counters.proven == 300 - undetermined);
  }

  SUBCASE("analytic vs per-n on random scan bounds") {
    std::mt19937_64 rng(91);
    for (int iter = 0; iter < 5; ++iter) {
      const uint64_t scan_x = 10000 + rng() % 300000;
      const auto table = maximal_gaps_up_to(scan_x);
      const uint64_t bound = scan_x - 300;
      CertifyOptions opt;
      opt.method = Method::gaps;
      opt.records = table;
      opt.scanned_to = bound;
      const uint64_t hi = floor_sqrt(bound) + 20;
      const VerificationReport rep = certify_range(1, hi, opt);
      for (uint64_t n = 1; n <= hi; ++n) {
        const bool per_n = conjecture1_from_gaps(table, n, bound).verdict ==
                           Verdict::undetermined;
        const bool listed =
            std::find_if(rep.non_proven.begin(), rep.non_proven.end(),
                         [&](const StatusEntry& e) { return e.n == n; }) !=
            rep.non_proven.end();
        CAPTURE(scan_x);
        CAPTURE(n);
        CHECK(per_n == listed);
      }
    }
  }

  SUBCASE("both: zero disagreements, brute settles the holes") {
    CertifyOptions opt;
    opt.method = Method::both;
    opt.records = recs;
    opt.scanned_to = scanned_to;
    const VerificationReport rep = certify_range(1, 250, opt);
    CHECK(rep.counters.disagreements == 0);
    CHECK(rep.counters.undetermined == 0);
    CHECK(rep.counters.refuted == 0);
    CHECK(rep.counters.proven == 250);
  }

  SUBCASE("workers do not change the result") {
    CertifyOptions seq{.method = Method::brute, .workers = 1};
    CertifyOptions par{.method = Method::brute, .workers = 4};
    auto a = certify_range(1, 400, seq);
    auto b = certify_range(1, 400, par);
    a.wall_ms = b.wall_ms = 0;
    CHECK(a == b);
  }

  SUBCASE("precondition") {
    CHECK_THROWS_AS(certify_range(0, 5, {.method = Method::brute}), Error);
    CHECK_THROWS_AS(certify_range(5, 2, {.method = Method::brute}), Error);
  }
}

TEST_CASE("settle_with_brute and longest_proven_prefix") {
  const auto recs = maximal_gaps_up_to(70000);
  CertifyOptions opt;
  opt.method = Method::gaps;
  opt.records = recs;
  opt.scanned_to = 65536;
  VerificationReport rep = certify_range(1, 255, opt);
  CHECK(rep.counters.undetermined > 0);
  CHECK(longest_proven_prefix(rep) == 2);  // n=3 is the first hole

  const uint64_t settled = settle_with_brute(rep, 255);
  CHECK(settled > 0);
  CHECK(rep.counters.undetermined == 0);
  CHECK(rep.counters.proven == 255);
  CHECK(longest_proven_prefix(rep) == 255);
}

TEST_CASE("legendre_check") {
  const LegendreResult r3 = legendre_check(3);
  CHECK(r3.count >= 2);
  CHECK(r3.first == 11);
  CHECK(r3.second == 13);

  const LegendreResult r1 = legendre_check(1);
  CHECK(r1.first == 2);
  CHECK(r1.second == 3);

  const LegendreResult r100 = legendre_check(100);
  CHECK(r100.count == 23);  // pi(10201) - pi(10000), by trial division
  CHECK(r100.count ==
        oracle::primes_in_open(10000, 10201).size());
  CHECK(r100.first == 10007);

  CHECK_THROWS_AS(legendre_check(0), Error);
}

TEST_CASE("brocard_check") {
  CHECK(brocard_check(3, 5) == 5);
  CHECK(brocard_check(5, 7) == 6);
  CHECK_THROWS_AS(brocard_check(2, 3), Error);
  CHECK_THROWS_AS(brocard_check(3, 7), Error);   // not consecutive
  CHECK_THROWS_AS(brocard_check(9, 11), Error);  // not prime
}

TEST_CASE("andrica_check decides sqrt(q)-sqrt(p) < 1 exactly") {
  CHECK(andrica_check(7, 11));    // d=3, 9 < 28
  CHECK(andrica_check(113, 127));  // d=13, 169 < 452
  CHECK(andrica_check(2, 3));      // d=0
  CHECK_THROWS_AS(andrica_check(7, 13), Error);

  // exactness against long-double sqrt on random consecutive pairs
  std::mt19937_64 rng(71);
  for (int i = 0; i < 300; ++i) {
    const uint64_t p = oracle::next_prime(2 + rng() % 10000000);
    const uint64_t q = oracle::next_prime(p);
    const bool exact = andrica_check(p, q);
    const bool floated = (std::sqrt(static_cast<long double>(q)) -
                          std::sqrt(static_cast<long double>(p))) < 1.0L;
    CHECK(exact == floated);
  }
}

TEST_CASE("andrica_extremal_bound") {
  CHECK(andrica_extremal_bound(1));
  CHECK(andrica_extremal_bound(3));
  CHECK(andrica_extremal_bound(1000000));
  CHECK(andrica_extremal_bound(UINT64_MAX));
  // the worst-case pair at n=3
  CHECK(3 * 3 + 3 + 1 == 13);
  CHECK(3 * 3 + 3 * 3 + 2 == 20);
}

TEST_CASE("oppermann_check") {
  const OppermannResult r2 = oppermann_check(2);
  CHECK(r2.low_witness == 3);
  CHECK(r2.high_witness == 5);
  CHECK(r2.low_lo == 3);
  CHECK(r2.low_hi == 3);
  CHECK(r2.high_lo == 5);
  CHECK(r2.high_hi == 6);

  const OppermannResult r3 = oppermann_check(3);
  CHECK(r3.low_witness == 7);
  CHECK(r3.high_witness == 11);

  CHECK_THROWS_AS(oppermann_check(1), Error);
}

TEST_CASE("interval_check") {
  const IntervalResult r1 = interval_check(1);
  CHECK(r1.lo == 1);
  CHECK(r1.hi == 2);
  CHECK(r1.witness == 2);

  const IntervalResult r10 = interval_check(10);
  CHECK(r10.lo == 10);
  CHECK(r10.hi == 15);
  CHECK(r10.witness == 11);

  // a = n^2+n+1 at n=3: the interval starts at the prime itself
  const IntervalResult r13 = interval_check(13);
  CHECK(r13.hi == 13 + 2 * 3 - 1);
  CHECK(r13.witness == 13);

  CHECK_THROWS_AS(interval_check(0), Error);
}

TEST_CASE("statement_bound classifies into a partition") {
  const StatementResult s9 = statement_bound(9);
  CHECK(s9.cls == StatementClass::square);
  CHECK(s9.lo == 9);
  CHECK(s9.hi == 12);
  CHECK(s9.witness == 11);

  const StatementResult s13 = statement_bound(13);
  CHECK(s13.cls == StatementClass::lower_half);
  CHECK(s13.hi == 15);
  CHECK(s13.witness == 13);

  const StatementResult s14 = statement_bound(14);
  CHECK(s14.cls == StatementClass::upper_half);
  CHECK(s14.hi == 19);
  CHECK(s14.witness == 17);

  // the classes partition [1, N]
  for (uint64_t a = 1; a <= 5000; ++a) {
    const uint64_t s = oracle::isqrt(a);
    const StatementResult res = statement_bound(a);
    if (s * s == a) {
      CHECK(res.cls == StatementClass::square);
    } else if (a <= s * s + s + 1) {
      CHECK(res.cls == StatementClass::lower_half);
    } else {
      CHECK(res.cls == StatementClass::upper_half);
    }
    // the upper-half interval end dominates the other two forms
    CHECK(a + 2 * s - 1 >= a + s);
    CHECK(a + 2 * s - 1 > a + s - 1);
  }
}

TEST_CASE("parity_variant_check") {
  const IntervalResult m3 = parity_variant_check(3);
  CHECK(m3.lo == 3);
  CHECK(m3.hi == 3);
  CHECK(m3.witness == 3);

  const IntervalResult m10 = parity_variant_check(10);
  CHECK(m10.lo == 11);
  CHECK(m10.hi == 15);
  CHECK(m10.witness == 11);

  const IntervalResult m2 = parity_variant_check(2);
  CHECK(m2.lo == 3);
  CHECK(m2.hi == 3);
  CHECK(m2.witness == 3);

  CHECK_THROWS_AS(parity_variant_check(1), Error);
}

TEST_CASE("half_interval_check") {
  const HalfIntervalResult h4 = half_interval_check(4);
  CHECK(h4.side == HalfSide::both);
  CHECK(h4.left_witness == 3);
  CHECK(h4.right_witness == 5);

  const HalfIntervalResult h2 = half_interval_check(2);
  CHECK(h2.side == HalfSide::both);
  CHECK(h2.left_witness == 2);
  CHECK(h2.right_witness == 2);

  const HalfIntervalResult h24 = half_interval_check(24);
  CHECK(h24.left_witness == 23);
  CHECK_FALSE(h24.right_witness.has_value());  // [24,27] holds no prime
  CHECK(h24.side == HalfSide::left);

  CHECK_THROWS_AS(half_interval_check(1), Error);
}

TEST_CASE("window claim for n forces two primes between the squares") {
  // The 2n interior integers split into two disjoint n-windows, so a proven
  // window claim at n puts a prime in each group.
  for (uint64_t n = 1; n <= 300; ++n) {
    if (conjecture1_brute(n).verdict == Verdict::proven) {
      CHECK(legendre_check(n).count >= 2);
    }
  }
}

TEST_CASE("campaigns stay clean at desk scale") {
  const VerificationReport leg = verify_legendre(1, 400);
  CHECK(leg.counters.refuted == 0);
  CHECK(leg.counters.proven == 400);

  const VerificationReport bro = verify_brocard(100);
  CHECK(bro.counters.refuted == 0);
  CHECK(bro.counters.proven == 23);  // consecutive odd-prime pairs to 100

  const VerificationReport andr = verify_andrica(10000);
  CHECK(andr.counters.refuted == 0);
  CHECK(andr.counters.disagreements == 0);

  const VerificationReport opp = verify_oppermann(2, 400);
  CHECK(opp.counters.refuted == 0);

  const VerificationReport itv = verify_interval(1, 400);
  CHECK(itv.counters.refuted == 0);

  const VerificationReport st = verify_statements(1, 400);
  CHECK(st.counters.refuted == 0);

  const VerificationReport par = verify_parity(2, 400);
  CHECK(par.counters.refuted == 0);

  const VerificationReport half = verify_half(2, 400);
  CHECK(half.counters.refuted == 0);

  // parallel campaign merges deterministically
  VerificationReport leg4 = verify_legendre(1, 400, 4);
  VerificationReport leg1 = leg;
  leg4.wall_ms = leg1.wall_ms = 0;
  CHECK(leg4 == leg1);
}

TEST_CASE("window classification logic is testable on synthetic runs") {
  // A refuted WindowStatus is constructed when a clipped run reaches n; the
  // library cannot produce one from real primes, so check the report path
  // with a hand-built entry instead (see report tests) and the arithmetic
  // here: interior size of (n^2, (n+1)^2) is always 2n.
  for (uint64_t n = 1; n <= 3000; ++n) {
    CHECK((n + 1) * (n + 1) - n * n - 1 == 2 * n);
  }
}

TEST_SUITE_END();
