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

// Command-line surface: scan maximal gaps (with checkpoint/resume), import
// published tables, run verification campaigns and emit reports.
//
// Exit codes: 0 success, 1 usage or I/O failure, 2 counterexample found
// (the report is still written; --strict also fails undetermined items).

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gapcert/conjectures.hpp"
#include "gapcert/gaps.hpp"
#include "gapcert/kernels.hpp"
#include "gapcert/report.hpp"

namespace {

using namespace gapcert;

// Numeric flags accept underscore separators, e.g. 1_193_806_023.
uint64_t parse_u64(const std::string& text, const std::string& flag) {
  std::string digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c == '_') continue;
    digits.push_back(c);
  }
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() ||
      digits.empty()) {
    throw CLI::ValidationError(flag, "expected an unsigned integer");
  }
  return value;
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw CLI::ValidationError("--format", "expected json, csv or text");
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  const std::string tmp = path + ".tmp";
  std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open output file " + tmp);
  out << bytes;
  if (!out.flush()) throw Error("write failed for " + tmp);
  out.close();
  std::filesystem::rename(tmp, path);
}

std::vector<MaximalGapRecord> load_table(const std::string& path,
                                         GapConvention convention) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table " + path);
  return import_gap_table(in, convention);
}

struct CommonFlags {
  std::string from = "1";
  std::string to;
  std::string out;
  std::string format = "text";
  std::string workers = "0";
  std::string segment_budget = std::to_string(kDefaultSegmentBudget);
  bool strict = false;
  bool verbose = false;
};

int finish_verify(const VerificationReport& report, const CommonFlags& flags) {
  const std::string bytes =
      emit_report(report, parse_format(flags.format), flags.verbose);
  write_output(flags.out, bytes);
  if (report.counters.refuted > 0 || report.counters.disagreements > 0) {
    return 2;
  }
  if (flags.strict && report.counters.undetermined > 0) return 2;
  return 0;
}

int cmd_scan(const std::string& to_str, const std::string& out_path,
             const std::string& checkpoint_path, bool resume,
             const std::string& workers_str, const std::string& budget_str) {
  const uint64_t to = parse_u64(to_str, "--to");
  const unsigned workers =
      static_cast<unsigned>(parse_u64(workers_str, "--workers"));
  const uint64_t budget = parse_u64(budget_str, "--segment-budget");
  if (to < 3) throw Error("scan: --to must be at least 3");
  if (resume && checkpoint_path.empty()) {
    throw Error("scan: --resume requires --checkpoint");
  }

  ScanCheckpoint state;
  if (resume) {
    state = ScanCheckpoint::load_file(checkpoint_path);
    std::cerr << "resumed at prime " << state.last_prime << " with "
              << state.records.size() << " records\n";
  }

  // Checkpoint after every chunk: a chunk is at most 10^9 integers, so a
  // kill loses bounded work, and any chunk containing a new record has the
  // record persisted as soon as the chunk closes.
  constexpr uint64_t kChunk = 1'000'000'000;
  while (state.last_prime < to) {
    const uint64_t cur = state.last_prime == 0 ? 2 : state.last_prime;
    const uint64_t next = (to - cur <= kChunk) ? to : cur + kChunk;
    advance_scan(state, next, workers, budget);
    if (!checkpoint_path.empty()) state.save_file(checkpoint_path);
    if (next >= to) break;
  }

  std::ostringstream table;
  export_gap_table(state.records, table);
  write_output(out_path, table.str());
  return 0;
}

int cmd_import(const std::string& table_path, const std::string& convention,
               const std::string& out_path) {
  GapConvention conv;
  if (convention == "difference") {
    conv = GapConvention::difference;
  } else if (convention == "composites") {
    conv = GapConvention::composites;
  } else {
    throw Error("import: --convention must be difference or composites");
  }
  const auto records = load_table(table_path, conv);
  std::ostringstream table;
  export_gap_table(records, table);
  write_output(out_path, table.str());
  std::cerr << "imported " << records.size()
            << " records; last start prime " << records.back().record.p
            << ", composites " << records.back().record.composites << "\n";
  return 0;
}

int cmd_report(const std::string& in_path, const CommonFlags& flags) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw Error("cannot open report " + in_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const VerificationReport report = read_report_json(buf.str());
  write_output(flags.out,
               emit_report(report, parse_format(flags.format), flags.verbose));
  return 0;
}

int cmd_verify(const std::string& checker, const CommonFlags& flags,
               const std::string& method_str, const std::string& table_path,
               const std::string& convention, const std::string& scanned_to_str,
               const std::string& primes_to_str,
               const std::string& settle_below_str) {
  const unsigned workers =
      static_cast<unsigned>(parse_u64(flags.workers, "--workers"));
  const uint64_t budget = parse_u64(flags.segment_budget, "--segment-budget");
  const uint64_t lo = parse_u64(flags.from, "--from");

  if (checker == "andrica") {
    if (primes_to_str.empty()) {
      throw Error("verify andrica: requires --primes-to");
    }
    return finish_verify(verify_andrica(parse_u64(primes_to_str, "--primes-to")),
                         flags);
  }
  if (flags.to.empty()) throw Error("verify: requires --to");
  const uint64_t hi = parse_u64(flags.to, "--to");

  if (checker == "conjecture1") {
    CertifyOptions opt;
    opt.workers = workers;
    opt.segment_budget = budget;
    if (method_str == "brute") {
      opt.method = Method::brute;
    } else if (method_str == "gaps") {
      opt.method = Method::gaps;
    } else if (method_str == "both") {
      opt.method = Method::both;
    } else {
      throw Error("verify: --method must be brute, gaps or both");
    }
    std::vector<MaximalGapRecord> records;
    if (opt.method != Method::brute) {
      if (table_path.empty()) {
        throw Error("verify conjecture1: gaps/both methods require --table");
      }
      records = load_table(table_path, convention == "difference"
                                           ? GapConvention::difference
                                           : GapConvention::composites);
      opt.records = records;
      opt.scanned_to = scanned_to_str.empty()
                           ? records.back().record.q
                           : parse_u64(scanned_to_str, "--scanned-to");
    }
    VerificationReport report = certify_range(lo, hi, opt);
    if (!settle_below_str.empty()) {
      const uint64_t settled = settle_with_brute(
          report, parse_u64(settle_below_str, "--settle-below"), budget);
      std::cerr << "settled " << settled << " windows with the brute oracle\n";
    }
    return finish_verify(report, flags);
  }
  if (checker == "legendre") {
    return finish_verify(verify_legendre(lo, hi, workers), flags);
  }
  if (checker == "brocard") return finish_verify(verify_brocard(hi), flags);
  if (checker == "oppermann") {
    return finish_verify(verify_oppermann(std::max<uint64_t>(lo, 2), hi, workers),
                         flags);
  }
  if (checker == "interval") {
    return finish_verify(verify_interval(lo, hi, workers), flags);
  }
  if (checker == "statements") {
    return finish_verify(verify_statements(lo, hi, workers), flags);
  }
  if (checker == "parity") {
    return finish_verify(verify_parity(std::max<uint64_t>(lo, 2), hi, workers),
                         flags);
  }
  if (checker == "half") {
    return finish_verify(verify_half(std::max<uint64_t>(lo, 2), hi, workers),
                         flags);
  }
  throw Error("verify: unknown checker '" + checker + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime gap scanning and square-window conjecture verification"};
  app.require_subcommand(1);

  // scan
  auto* scan = app.add_subcommand("scan", "scan maximal prime gaps");
  std::string scan_to, scan_out, scan_checkpoint;
  std::string scan_workers = "0";
  std::string scan_budget = std::to_string(kDefaultSegmentBudget);
  bool scan_resume = false;
  scan->add_option("--to", scan_to, "scan gaps among pairs with q <= N")
      ->required();
  scan->add_option("--out", scan_out, "table output path (default stdout)");
  scan->add_option("--checkpoint", scan_checkpoint, "checkpoint file path");
  scan->add_flag("--resume", scan_resume, "resume from the checkpoint");
  scan->add_option("--workers", scan_workers, "worker threads (0 = all)");
  scan->add_option("--segment-budget", scan_budget, "sieve segment size");

  // import
  auto* import = app.add_subcommand("import", "normalize an external table");
  std::string import_table, import_convention, import_out;
  import->add_option("--table", import_table, "input table path")->required();
  import
      ->add_option("--convention", import_convention,
                   "difference (q-p) or composites (q-p-1)")
      ->required();
  import->add_option("--out", import_out, "output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  std::string checker;
  verify
      ->add_option("checker", checker,
                   "conjecture1|legendre|brocard|andrica|oppermann|interval|"
                   "statements|parity|half")
      ->required();
  CommonFlags flags;
  std::string method = "brute", table_path, table_convention = "composites";
  std::string scanned_to, primes_to;
  verify->add_option("--from", flags.from, "first n (default 1)");
  verify->add_option("--to", flags.to, "last n");
  verify->add_option("--method", method, "conjecture1: brute|gaps|both");
  verify->add_option("--table", table_path, "maximal-gap table path");
  verify->add_option("--convention", table_convention,
                     "table convention (default composites)");
  verify->add_option("--scanned-to", scanned_to,
                     "bound the table is complete to (default: its last q)");
  verify->add_option("--primes-to", primes_to, "andrica: check pairs with p < N");
  std::string settle_below;
  verify->add_option("--settle-below", settle_below,
                     "re-run undetermined windows with n <= N through brute");
  verify->add_option("--format", flags.format, "json|csv|text");
  verify->add_option("--out", flags.out, "report path (default stdout)");
  verify->add_flag("--strict", flags.strict, "fail on undetermined items");
  verify->add_option("--workers", flags.workers, "worker threads (0 = all)");
  verify->add_option("--segment-budget", flags.segment_budget,
                     "sieve segment size");
  verify->add_flag("--verbose", flags.verbose, "text format lists every item");

  // report
  auto* report = app.add_subcommand("report", "re-emit a JSON report");
  std::string report_in;
  CommonFlags report_flags;
  report->add_option("--in", report_in, "JSON report path")->required();
  report->add_option("--format", report_flags.format, "json|csv|text");
  report->add_option("--out", report_flags.out, "output path (default stdout)");
  report->add_flag("--verbose", report_flags.verbose,
                   "text format lists every item");

  CLI11_PARSE(app, argc, argv);

  try {
    if (scan->parsed()) {
      return cmd_scan(scan_to, scan_out, scan_checkpoint, scan_resume,
                      scan_workers, scan_budget);
    }
    if (import->parsed()) {
      return cmd_import(import_table, import_convention, import_out);
    }
    if (verify->parsed()) {
      return cmd_verify(checker, flags, method, table_path, table_convention,
                        scanned_to, primes_to, settle_below);
    }
    if (report->parsed()) return cmd_report(report_in, report_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
