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

#include "gapcert/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gapcert/errors.hpp"

namespace gapcert {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::proven:
      return "proven";
    case Verdict::refuted:
      return "refuted";
    case Verdict::undetermined:
      return "undetermined";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "proven") return Verdict::proven;
  if (s == "refuted") return Verdict::refuted;
  if (s == "undetermined") return Verdict::undetermined;
  throw Error("unknown verdict '" + s + "'");
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json entry_to_json(const StatusEntry& e) {
  ordered_json j;
  j["n"] = e.n;
  j["verdict"] = to_string(e.verdict);
  if (e.witness) j["witness"] = *e.witness;
  if (e.record_rank) j["record_rank"] = *e.record_rank;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

std::string emit_json(const VerificationReport& r) {
  ordered_json j;
  j["schema"] = "gapcert-report-v1";
  j["kind"] = r.kind;
  j["method"] = r.method;
  j["n_lo"] = r.n_lo;
  j["n_hi"] = r.n_hi;
  j["counters"]["proven"] = r.counters.proven;
  j["counters"]["refuted"] = r.counters.refuted;
  j["counters"]["undetermined"] = r.counters.undetermined;
  j["counters"]["disagreements"] = r.counters.disagreements;
  j["non_proven"] = ordered_json::array();
  for (const StatusEntry& e : r.non_proven) {
    j["non_proven"].push_back(entry_to_json(e));
  }
  j["wall_ms"] = r.wall_ms;
  return j.dump(2) + "\n";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string emit_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "n,verdict,witness,record_rank,note\n";
  for (const StatusEntry& e : r.non_proven) {
    out << e.n << ',' << to_string(e.verdict) << ',';
    if (e.witness) out << *e.witness;
    out << ',';
    if (e.record_rank) out << *e.record_rank;
    out << ',' << csv_escape(e.note) << '\n';
  }
  out << "summary,proven=" << r.counters.proven
      << ",refuted=" << r.counters.refuted
      << ",undetermined=" << r.counters.undetermined
      << ",disagreements=" << r.counters.disagreements << '\n';
  return out.str();
}

std::string emit_text(const VerificationReport& r, bool verbose_all) {
  std::ostringstream out;
  out << r.kind << " [" << r.n_lo << ", " << r.n_hi << "] method=" << r.method
      << '\n';
  out << "  proven       " << r.counters.proven << '\n';
  out << "  refuted      " << r.counters.refuted << '\n';
  out << "  undetermined " << r.counters.undetermined << '\n';
  if (r.counters.disagreements != 0) {
    out << "  disagreements " << r.counters.disagreements << '\n';
  }
  out << "  wall time    " << r.wall_ms << " ms\n";
  if (verbose_all) {
    auto it = r.non_proven.begin();
    for (uint64_t n = r.n_lo; n <= r.n_hi && n >= r.n_lo; ++n) {
      out << "  n=" << n << ' ';
      if (it != r.non_proven.end() && it->n == n) {
        out << to_string(it->verdict);
        if (it->witness) out << " witness=" << *it->witness;
        if (!it->note.empty()) out << " (" << it->note << ")";
        ++it;
      } else {
        out << "proven";
      }
      out << '\n';
      if (n == r.n_hi) break;
    }
  } else {
    for (const StatusEntry& e : r.non_proven) {
      out << "  n=" << e.n << ' ' << to_string(e.verdict);
      if (e.witness) out << " witness=" << *e.witness;
      if (e.record_rank) out << " record_rank=" << *e.record_rank;
      if (!e.note.empty()) out << " (" << e.note << ")";
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string emit_report(const VerificationReport& r, ReportFormat format,
                        bool verbose_all) {
  switch (format) {
    case ReportFormat::json:
      return emit_json(r);
    case ReportFormat::csv:
      return emit_csv(r);
    case ReportFormat::text:
      return emit_text(r, verbose_all);
  }
  throw Error("unknown report format");
}

VerificationReport read_report_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report: bad JSON: ") + e.what());
  }
  if (j.value("schema", "") != "gapcert-report-v1") {
    throw Error("report: unknown schema");
  }
  VerificationReport r;
  r.kind = j.at("kind").get<std::string>();
  r.method = j.at("method").get<std::string>();
  r.n_lo = j.at("n_lo").get<uint64_t>();
  r.n_hi = j.at("n_hi").get<uint64_t>();
  const auto& c = j.at("counters");
  r.counters.proven = c.at("proven").get<uint64_t>();
  r.counters.refuted = c.at("refuted").get<uint64_t>();
  r.counters.undetermined = c.at("undetermined").get<uint64_t>();
  r.counters.disagreements = c.at("disagreements").get<uint64_t>();
  for (const auto& je : j.at("non_proven")) {
    StatusEntry e;
    e.n = je.at("n").get<uint64_t>();
    e.verdict = verdict_from_string(je.at("verdict").get<std::string>());
    if (je.contains("witness")) e.witness = je.at("witness").get<uint64_t>();
    if (je.contains("record_rank")) {
      e.record_rank = je.at("record_rank").get<uint32_t>();
    }
    if (je.contains("note")) e.note = je.at("note").get<std::string>();
    r.non_proven.push_back(std::move(e));
  }
  r.wall_ms = j.at("wall_ms").get<double>();
  return r;
}

}  // namespace gapcert
