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

#include <cstdint>
#include <random>
#include <sstream>

#include "gapcert/gaps.hpp"
#include "oracle.hpp"

using namespace gapcert;

namespace {

std::vector<MaximalGapRecord> from_oracle(const std::vector<oracle::GapRecord>& recs) {
  std::vector<MaximalGapRecord> out;
  for (const auto& r : recs) {
    MaximalGapRecord m;
    m.record = {r.p, r.q, r.composites};
    m.rank = static_cast<uint32_t>(out.size() + 1);
    m.prev_composites = out.empty() ? 0 : out.back().record.composites;
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("gaps");

TEST_CASE("scan_gaps emits exactly the pairs inside the range") {
  const auto g1 = scan_gaps(2, 12);
  REQUIRE(g1.size() == 4);
  CHECK(g1[0] == PrimeGapRecord{2, 3, 0});
  CHECK(g1[1] == PrimeGapRecord{3, 5, 1});
  CHECK(g1[2] == PrimeGapRecord{5, 7, 1});
  CHECK(g1[3] == PrimeGapRecord{7, 11, 3});

  const auto g2 = scan_gaps(113, 127);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == PrimeGapRecord{113, 127, 13});

  CHECK(scan_gaps(90, 96).empty());
  CHECK_THROWS_AS(scan_gaps(12, 12), Error);
}

TEST_CASE("maximal_gaps_up_to matches the trial-division oracle") {
  const auto recs130 = maximal_gaps_up_to(130);
  const auto expect130 = from_oracle(oracle::maximal_gaps(130));
  CHECK(recs130 == expect130);
  REQUIRE(recs130.size() == 6);
  CHECK(recs130.back().record == PrimeGapRecord{113, 127, 13});
  CHECK(recs130.back().rank == 6);
  CHECK(recs130.back().prev_composites == 7);

  const auto recs3 = maximal_gaps_up_to(3);
  REQUIRE(recs3.size() == 1);
  CHECK(recs3[0].record == PrimeGapRecord{2, 3, 0});

  const auto recs600 = maximal_gaps_up_to(600);
  CHECK(recs600.back().record == PrimeGapRecord{523, 541, 17});
  CHECK(recs600 == from_oracle(oracle::maximal_gaps(600)));

  CHECK(maximal_gaps_up_to(2000) == from_oracle(oracle::maximal_gaps(2000)));
  CHECK_THROWS_AS(maximal_gaps_up_to(2), Error);
}

TEST_CASE("records satisfy the parity and growth invariants") {
  const auto recs = maximal_gaps_up_to(100000);
  validate_records(recs, /*check_primality=*/true);
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& r = recs[i].record;
    CHECK(r.composites % 2 == 1);  // odd once p > 2
    // steps of at least 2 once both records start above 2
    if (i >= 2) CHECK(r.composites >= recs[i - 1].record.composites + 2);
    CHECK(primes_in(r.p, r.q, kOpen).empty());
  }
}

TEST_CASE("validate_records rejects corrupted lists") {
  auto recs = maximal_gaps_up_to(600);
  CHECK_NOTHROW(validate_records(recs));

  auto bad = recs;
  bad[2].record.composites += 1;  // breaks q-p-1 consistency
  CHECK_THROWS_AS(validate_records(bad), ValidationError);

  bad = recs;
  bad.erase(bad.begin());  // no longer starts at (2,3)
  CHECK_THROWS_AS(validate_records(bad), ValidationError);

  bad = recs;
  std::swap(bad[1], bad[2]);
  CHECK_THROWS_AS(validate_records(bad), ValidationError);

  bad = recs;
  bad[3].prev_composites += 1;
  CHECK_THROWS_AS(validate_records(bad), ValidationError);

  bad = recs;
  bad[4].record.p += 2;  // endpoint no longer prime
  bad[4].record.q += 2;
  CHECK_THROWS_AS(validate_records(bad, true), ValidationError);
}

TEST_CASE("merge_scan_parts") {
  SUBCASE("two parts equal the monolithic scan") {
    const std::vector<ScanPart> parts{scan_part(2, 60), scan_part(60, 130)};
    CHECK(merge_scan_parts(parts) == maximal_gaps_up_to(129));
  }

  SUBCASE("single part is the identity") {
    const std::vector<ScanPart> parts{scan_part(2, 131)};
    CHECK(merge_scan_parts(parts) == maximal_gaps_up_to(130));
  }

  SUBCASE("split inside the 113..127 gap still finds the record") {
    const std::vector<ScanPart> parts{scan_part(2, 120), scan_part(120, 130)};
    const auto merged = merge_scan_parts(parts);
    CHECK(merged == maximal_gaps_up_to(129));
    CHECK(merged.back().record == PrimeGapRecord{113, 127, 13});
  }

  SUBCASE("random partitions match") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 25; ++iter) {
      const uint64_t x = 2000 + rng() % 30000;
      std::vector<uint64_t> cuts{2, x + 1};
      const int k = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < k; ++i) cuts.push_back(2 + rng() % x);
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      std::vector<ScanPart> parts;
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        parts.push_back(scan_part(cuts[i], cuts[i + 1]));
      }
      CHECK(merge_scan_parts(parts) == maximal_gaps_up_to(x));
    }
  }

  SUBCASE("rejects bad part lists") {
    CHECK_THROWS_AS(merge_scan_parts({}), ValidationError);
    CHECK_THROWS_AS(
        merge_scan_parts({scan_part(2, 50), scan_part(60, 100)}),
        ValidationError);
    CHECK_THROWS_AS(merge_scan_parts({scan_part(10, 100)}), ValidationError);
    auto part = scan_part(2, 100);
    part.last_prime.reset();
    CHECK_THROWS_AS(merge_scan_parts({part}), ValidationError);
  }
}

TEST_CASE("advance_scan is incremental and worker-count independent") {
  ScanCheckpoint a;
  advance_scan(a, 100000, 1);

  ScanCheckpoint b;
  advance_scan(b, 137, 1);
  advance_scan(b, 50000, 1);
  advance_scan(b, 100000, 1);
  CHECK(a.records == b.records);
  CHECK(a.last_prime == b.last_prime);

  ScanCheckpoint c;
  advance_scan(c, 100000, 4, /*budget=*/4096);
  CHECK(a.records == c.records);
  CHECK(a.last_prime == c.last_prime);

  CHECK(a.records == maximal_gaps_up_to(100000));
  CHECK(sound_scanned_to(a) == prev_prime(a.last_prime));
}

TEST_CASE("import converts the difference convention") {
  SUBCASE("single lines") {
    std::istringstream one("4 7\n");
    const auto recs = import_gap_table(one, GapConvention::difference);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].record == PrimeGapRecord{7, 11, 3});

    std::istringstream first("1 2\n");
    const auto r2 = import_gap_table(first, GapConvention::difference);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].record == PrimeGapRecord{2, 3, 0});

    std::istringstream same("3 7\n");
    const auto r3 = import_gap_table(same, GapConvention::composites);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].record == PrimeGapRecord{7, 11, 3});
  }

  SUBCASE("first ten published records") {
    std::istringstream in(
        "# first ten maximal gaps, difference convention\n"
        "1 2\n"
        "2 3\n"
        "4 7\n"
        "6 23\n"
        "8 89\n"
        "14 113\n"
        "18 523\n"
        "20 887\n"
        "22 1129\n"
        "34 1327\n");
    const auto recs = import_gap_table(in, GapConvention::difference);
    REQUIRE(recs.size() == 10);
    const std::vector<uint64_t> expect{0, 1, 3, 5, 7, 13, 17, 19, 21, 33};
    for (std::size_t i = 0; i < recs.size(); ++i) {
      CHECK(recs[i].record.composites == expect[i]);
    }
    CHECK(recs[2].record == PrimeGapRecord{7, 11, 3});
    CHECK(recs[0].record == PrimeGapRecord{2, 3, 0});
    // agrees with an exhaustive scan to 1400
    CHECK(recs == from_oracle(oracle::maximal_gaps(1400)));
  }
}

TEST_CASE("import validation errors carry line numbers") {
  SUBCASE("malformed line") {
    std::istringstream in("1 2\n2 3\nfour 7\n");
    try {
      import_gap_table(in, GapConvention::difference);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }

  SUBCASE("non-increasing record") {
    std::istringstream in("1 2\n2 3\n4 7\n4 23\n");
    try {
      import_gap_table(in, GapConvention::difference);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 4);
    }
  }

  SUBCASE("parity violation") {
    std::istringstream in("1 2\n2 3\n5 7\n");
    CHECK_THROWS_AS(import_gap_table(in, GapConvention::difference),
                    ParseError);
  }

  SUBCASE("endpoint fails primality") {
    std::istringstream in("1 2\n2 3\n4 9\n");
    CHECK_THROWS_AS(import_gap_table(in, GapConvention::difference),
                    ValidationError);
  }
}

TEST_CASE("export / import round trips") {
  const auto recs = maximal_gaps_up_to(5000);

  std::ostringstream table;
  export_gap_table(recs, table);
  std::istringstream back(table.str());
  const auto reread = import_gap_table(back, GapConvention::composites);
  CHECK(reread == recs);

  std::ostringstream again;
  export_gap_table(reread, again);
  CHECK(again.str() == table.str());  // byte-exact
}

TEST_CASE("checkpoints") {
  ScanCheckpoint state;
  advance_scan(state, 20000);

  SUBCASE("byte round trip with integrity tag") {
    const std::string bytes = state.to_bytes();
    const ScanCheckpoint back = ScanCheckpoint::from_bytes(bytes);
    CHECK(back == state);
  }

  SUBCASE("tampering is detected") {
    std::string bytes = state.to_bytes();
    const std::size_t pos = bytes.size() / 2;  // well inside the table lines
    bytes[pos] = bytes[pos] == '5' ? '6' : '5';
    CHECK_THROWS_AS(ScanCheckpoint::from_bytes(bytes), ValidationError);
  }

  SUBCASE("resume equals a fresh scan") {
    ScanCheckpoint fresh;
    advance_scan(fresh, 400000);

    const std::string path = "/tmp/gapcert_test_ckpt.txt";
    state.save_file(path);
    ScanCheckpoint resumed = ScanCheckpoint::load_file(path);
    advance_scan(resumed, 400000);
    CHECK(resumed.records == fresh.records);
    CHECK(resumed.last_prime == fresh.last_prime);
    std::remove(path.c_str());
  }
}

TEST_SUITE_END();
