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

#include "gapcert/gaps.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "gapcert/primality.hpp"

namespace gapcert {

namespace {

// Appends `gap` to `records` when it sets a new running maximum.
void consider_record(std::vector<MaximalGapRecord>& records,
                     const PrimeGapRecord& gap) {
  const bool is_record =
      records.empty() || gap.composites > records.back().record.composites;
  if (!is_record) return;
  MaximalGapRecord rec;
  rec.record = gap;
  rec.rank = static_cast<uint32_t>(records.size() + 1);
  rec.prev_composites = records.empty() ? 0 : records.back().record.composites;
  records.push_back(rec);
}

uint64_t fnv1a(std::string_view bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

void scan_gaps(uint64_t lo, uint64_t hi,
               const std::function<void(const PrimeGapRecord&)>& emit,
               uint64_t budget) {
  if (lo >= hi) throw Error("scan_gaps: requires lo < hi");
  PrimeEnumerator primes(lo, budget);
  std::optional<uint64_t> prev;
  while (auto p = primes.next()) {
    if (*p > hi) break;
    if (prev) emit({*prev, *p, *p - *prev - 1});
    prev = *p;
  }
}

std::vector<PrimeGapRecord> scan_gaps(uint64_t lo, uint64_t hi,
                                      uint64_t budget) {
  std::vector<PrimeGapRecord> out;
  scan_gaps(lo, hi, [&](const PrimeGapRecord& g) { out.push_back(g); }, budget);
  return out;
}

ScanPart scan_part(uint64_t lo, uint64_t hi, uint64_t budget) {
  if (lo >= hi) throw Error("scan_part: requires lo < hi");
  ScanPart part;
  part.lo = lo;
  part.hi = hi;
  PrimeEnumerator primes(lo, budget);
  int64_t local_best = -1;
  std::optional<uint64_t> prev;
  while (auto p = primes.next()) {
    if (*p >= hi) break;
    if (!part.first_prime) part.first_prime = *p;
    if (prev) {
      const uint64_t c = *p - *prev - 1;
      if (static_cast<int64_t>(c) > local_best) {
        part.local_records.push_back({*prev, *p, c});
        local_best = static_cast<int64_t>(c);
      }
    }
    prev = *p;
  }
  part.last_prime = prev;
  return part;
}

namespace {

// Applies one part to a running scan state. The caller has already checked
// contiguity. Boundary gaps between the previous slice's last prime and this
// slice's first prime are formed here.
void stitch_part(ScanCheckpoint& state, const ScanPart& part) {
  if (!part.first_prime) return;  // slice without primes; nothing to stitch
  if (state.last_prime != 0 && *part.first_prime > state.last_prime) {
    consider_record(state.records, {state.last_prime, *part.first_prime,
                                    *part.first_prime - state.last_prime - 1});
  }
  for (const PrimeGapRecord& g : part.local_records) {
    consider_record(state.records, g);
  }
  state.last_prime = *part.last_prime;
}

void validate_parts(const std::vector<ScanPart>& parts, uint64_t start_at) {
  if (parts.empty()) throw ValidationError("merge: no parts");
  if (parts.front().lo > start_at) {
    throw ValidationError("merge: parts must start at or below " +
                          std::to_string(start_at));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const ScanPart& part = parts[i];
    if (part.lo >= part.hi) throw ValidationError("merge: empty part range");
    if (i > 0 && parts[i - 1].hi != part.lo) {
      throw ValidationError("merge: parts not contiguous at index " +
                            std::to_string(i));
    }
    if (part.first_prime.has_value() != part.last_prime.has_value() ||
        (!part.first_prime && !part.local_records.empty())) {
      throw ValidationError("merge: part missing boundary primes");
    }
  }
}

}  // namespace

std::vector<MaximalGapRecord> merge_scan_parts(
    const std::vector<ScanPart>& parts) {
  validate_parts(parts, 2);
  ScanCheckpoint state;
  for (const ScanPart& part : parts) stitch_part(state, part);
  return std::move(state.records);
}

void advance_scan(ScanCheckpoint& state, uint64_t x, unsigned workers,
                  uint64_t budget) {
  if (state.last_prime != 0 && x <= state.last_prime) return;
  const uint64_t from = state.last_prime == 0 ? 2 : state.last_prime;
  if (x < from) return;
  if (workers == 0) workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;

  // x itself must be included: parts are half-open.
  const uint64_t end = x == UINT64_MAX ? x : x + 1;
  const uint64_t span = end - from;
  const unsigned nparts =
      workers == 1 ? 1
                   : static_cast<unsigned>(std::min<uint64_t>(
                         workers * 4, std::max<uint64_t>(1, span / budget)));
  if (nparts <= 1) {
    stitch_part(state, scan_part(from, end, budget));
    return;
  }

  std::vector<ScanPart> parts(nparts);
  std::vector<std::thread> pool;
  std::atomic<unsigned> next{0};
  const uint64_t chunk = span / nparts;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const unsigned i = next.fetch_add(1);
        if (i >= nparts) return;
        const uint64_t lo = from + chunk * i;
        const uint64_t hi = (i + 1 == nparts) ? end : from + chunk * (i + 1);
        parts[i] = scan_part(lo, hi, budget);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const ScanPart& part : parts) stitch_part(state, part);
}

uint64_t sound_scanned_to(const ScanCheckpoint& state) {
  if (state.last_prime == 0) return 0;
  if (state.last_prime <= 2) return 1;
  return prev_prime(state.last_prime);
}

std::vector<MaximalGapRecord> maximal_gaps_up_to(uint64_t x, uint64_t budget) {
  if (x < 3) throw Error("maximal_gaps_up_to: requires x >= 3");
  ScanCheckpoint state;
  advance_scan(state, x, 1, budget);
  return std::move(state.records);
}

void validate_records(std::span<const MaximalGapRecord> records,
                      bool check_primality) {
  if (records.empty()) throw ValidationError("records: empty list");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const MaximalGapRecord& r = records[i];
    const PrimeGapRecord& g = r.record;
    const std::string at = "records[" + std::to_string(i) + "]: ";
    if (g.p >= g.q) throw ValidationError(at + "p >= q");
    if (g.composites != g.q - g.p - 1) {
      throw ValidationError(at + "composites != q - p - 1");
    }
    if (g.p > 2 && g.composites % 2 == 0) {
      throw ValidationError(at + "even composite count for start prime > 2");
    }
    if (r.rank != i + 1) throw ValidationError(at + "rank not consecutive");
    if (i > 0) {
      const MaximalGapRecord& prev = records[i - 1];
      if (g.p <= prev.record.p) {
        throw ValidationError(at + "start primes not increasing");
      }
      if (prev.record.q > g.p) {
        throw ValidationError(at + "overlaps previous record stretch");
      }
      if (g.composites <= prev.record.composites) {
        throw ValidationError(at + "composite counts not increasing");
      }
      if (r.prev_composites != prev.record.composites) {
        throw ValidationError(at + "prev_composites mismatch");
      }
    } else if (r.prev_composites != 0) {
      throw ValidationError(at + "first record must carry prev_composites 0");
    }
    if (check_primality && (!is_prime(g.p) || !is_prime(g.q))) {
      throw ValidationError(at + "endpoint fails primality check");
    }
  }
}

namespace {

uint64_t parse_u64_field(std::string_view field, std::size_t line_no,
                         const char* what) {
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line_no, std::string("invalid ") + what + " '" +
                                  std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<MaximalGapRecord> import_gap_table(std::istream& in,
                                               GapConvention convention) {
  std::vector<MaximalGapRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::string gap_str, prime_str, extra;
    if (!(fields >> gap_str >> prime_str) || (fields >> extra)) {
      throw ParseError(line_no, "expected two fields: <gap> <start_prime>");
    }
    const uint64_t gap = parse_u64_field(gap_str, line_no, "gap value");
    const uint64_t p = parse_u64_field(prime_str, line_no, "start prime");

    uint64_t composites = gap;
    if (convention == GapConvention::difference) {
      if (gap == 0) throw ParseError(line_no, "difference gap must be >= 1");
      composites = gap - 1;
    }
    if (p > UINT64_MAX - composites - 1) {
      throw ParseError(line_no, "gap end exceeds 64-bit range");
    }
    PrimeGapRecord g{p, p + composites + 1, composites};
    if (p > 2 && composites % 2 == 0) {
      throw ParseError(line_no, "even composite count for start prime > 2");
    }
    if (!records.empty()) {
      const PrimeGapRecord& prev = records.back().record;
      if (p <= prev.p || composites <= prev.composites) {
        throw ParseError(line_no, "record does not increase on previous");
      }
    }
    MaximalGapRecord rec;
    rec.record = g;
    rec.rank = static_cast<uint32_t>(records.size() + 1);
    rec.prev_composites =
        records.empty() ? 0 : records.back().record.composites;
    records.push_back(rec);
  }
  if (!records.empty()) validate_records(records, /*check_primality=*/true);
  return records;
}

void export_gap_table(const std::vector<MaximalGapRecord>& records,
                      std::ostream& out) {
  out << "# maximal prime gap table\n";
  out << "# convention: composites (value = q - p - 1)\n";
  out << "# columns: composites start_prime\n";
  for (const MaximalGapRecord& r : records) {
    out << r.record.composites << ' ' << r.record.p << '\n';
  }
}

std::string ScanCheckpoint::to_bytes() const {
  std::ostringstream body;
  body << "# gapcert-checkpoint v1\n";
  body << "last_prime " << last_prime << '\n';
  body << "records " << records.size() << '\n';
  for (const MaximalGapRecord& r : records) {
    body << r.record.composites << ' ' << r.record.p << '\n';
  }
  std::string bytes = body.str();
  char tag[32];
  std::snprintf(tag, sizeof tag, "checksum %016llx\n",
                static_cast<unsigned long long>(fnv1a(bytes)));
  bytes += tag;
  return bytes;
}

ScanCheckpoint ScanCheckpoint::from_bytes(const std::string& bytes) {
  const std::size_t tag_pos = bytes.rfind("checksum ");
  if (tag_pos == std::string::npos || tag_pos == 0 ||
      bytes[tag_pos - 1] != '\n') {
    throw ValidationError("checkpoint: missing integrity tag");
  }
  const std::string_view payload(bytes.data(), tag_pos);
  const std::string_view tag_line(bytes.data() + tag_pos,
                                  bytes.size() - tag_pos);
  char expected[32];
  std::snprintf(expected, sizeof expected, "checksum %016llx\n",
                static_cast<unsigned long long>(fnv1a(payload)));
  if (tag_line != expected) {
    throw ValidationError("checkpoint: integrity tag mismatch");
  }

  std::istringstream in{std::string(payload)};
  std::string line;
  if (!std::getline(in, line) || line != "# gapcert-checkpoint v1") {
    throw ValidationError("checkpoint: unknown header/version");
  }
  ScanCheckpoint state;
  std::string word;
  std::size_t count = 0;
  if (!(in >> word >> state.last_prime) || word != "last_prime") {
    throw ValidationError("checkpoint: missing last_prime");
  }
  if (!(in >> word >> count) || word != "records") {
    throw ValidationError("checkpoint: missing record count");
  }
  for (std::size_t i = 0; i < count; ++i) {
    uint64_t composites = 0, p = 0;
    if (!(in >> composites >> p)) {
      throw ValidationError("checkpoint: truncated record list");
    }
    MaximalGapRecord rec;
    rec.record = {p, p + composites + 1, composites};
    rec.rank = static_cast<uint32_t>(i + 1);
    rec.prev_composites =
        state.records.empty() ? 0 : state.records.back().record.composites;
    state.records.push_back(rec);
  }
  if (!state.records.empty()) validate_records(state.records);
  return state;
}

void ScanCheckpoint::save_file(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("checkpoint: cannot open " + tmp);
    out << to_bytes();
    if (!out.flush()) throw Error("checkpoint: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

ScanCheckpoint ScanCheckpoint::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("checkpoint: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_bytes(buf.str());
}

}  // namespace gapcert
