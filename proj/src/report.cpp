// Copyright 2026 the greedylab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "greedylab/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace greedylab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string encode_witness(const std::string& kind, const Vec& f,
                           const IndexSet& a) {
  std::string out = "k=" + kind + "|f=";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ";";
    out += format_double(f[i]);
  }
  out += "|A=";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(a[i]);
  }
  return out;
}

bool decode_witness(const std::string& payload, std::string* kind, Vec* f,
                    IndexSet* a) {
  if (payload.rfind("k=", 0) != 0) return false;
  const auto fbar = payload.find("|f=");
  const auto abar = payload.find("|A=");
  if (fbar == std::string::npos || abar == std::string::npos || abar < fbar)
    return false;
  *kind = payload.substr(2, fbar - 2);
  f->clear();
  a->clear();
  const std::string fs = payload.substr(fbar + 3, abar - fbar - 3);
  const std::string as = payload.substr(abar + 3);
  std::stringstream fss(fs);
  std::string tok;
  while (std::getline(fss, tok, ';'))
    if (!tok.empty()) f->push_back(std::strtod(tok.c_str(), nullptr));
  std::stringstream ass(as);
  while (std::getline(ass, tok, ';'))
    if (!tok.empty())
      a->push_back(static_cast<std::size_t>(std::strtoull(tok.c_str(), nullptr, 10)));
  return true;
}

std::string ReportRow::witness_digest() const {
  return witness_payload.empty() ? "" : hex64(fnv1a64(witness_payload));
}

void Report::add(std::string key, double value, bool exact,
                 std::string witness_payload, double runtime_ms) {
  rows.push_back({std::move(key), value, exact, std::move(witness_payload),
                  runtime_ms});
}

std::string Report::data_section() const {
  std::string out = "command=" + command + "\n";
  for (const auto& [k, v] : metadata) {
    if (k == "timestamp") continue;
    out += k + "=" + v + "\n";
  }
  for (const ReportRow& r : rows) {
    out += r.key + "," + format_double(r.value) + "," + (r.exact ? "1" : "0") +
           "," + r.witness_digest() + "\n";
  }
  return out;
}

std::string Report::to_csv() const {
  std::string out;
  out += "# command=" + command + "\n";
  for (const auto& [k, v] : metadata) out += "# " + k + "=" + v + "\n";
  out += "key,value,exact,witness,runtime_ms\n";
  for (const ReportRow& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.3f", r.runtime_ms);
    out += r.key + "," + format_double(r.value) + "," + (r.exact ? "1" : "0") +
           "," + r.witness_digest() + "," + ms + "\n";
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["metadata"] = metadata;
  nlohmann::json rows_json = nlohmann::json::array();
  for (const ReportRow& r : rows) {
    nlohmann::json row;
    row["key"] = r.key;
    row["value"] = r.value;
    row["exact"] = r.exact;
    row["witness"] = r.witness_payload;
    row["witness_digest"] = r.witness_digest();
    row["runtime_ms"] = r.runtime_ms;
    rows_json.push_back(row);
  }
  j["rows"] = rows_json;
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw std::runtime_error("unsupported report schema version");
  Report rep;
  rep.command = j.value("command", "");
  if (j.contains("metadata"))
    for (auto it = j["metadata"].begin(); it != j["metadata"].end(); ++it)
      rep.metadata[it.key()] = it.value().get<std::string>();
  for (const auto& row : j["rows"]) {
    ReportRow r;
    r.key = row.value("key", "");
    r.value = row.value("value", 0.0);
    r.exact = row.value("exact", false);
    r.witness_payload = row.value("witness", "");
    r.runtime_ms = row.value("runtime_ms", 0.0);
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

}  // namespace greedylab
