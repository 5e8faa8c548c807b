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

#ifndef GREEDYLAB_REPORT_HPP
#define GREEDYLAB_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "greedylab/fseq.hpp"

namespace greedylab {

inline constexpr int kSchemaVersion = 1;

// Deterministic shortest-roundtrip-ish formatting; identical inputs give
// identical strings, which is what the byte-level determinism contract needs.
std::string format_double(double v);
std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

// Compact self-describing witness payload; semicolon/pipe separated so it
// embeds in CSV cells without quoting. `kind` says how to re-evaluate:
//   proj   value = ||S_A f|| / ||f||
//   resid  value = ||f - S_A f|| / ||f||
//   ind    value = norm of the indicator of A
//   dual   value = <f, 1_A> with ||f|| <= 1
// Empty payload = exact value with no witness.
std::string encode_witness(const std::string& kind, const Vec& f,
                           const IndexSet& a);
bool decode_witness(const std::string& payload, std::string* kind, Vec* f,
                    IndexSet* a);

struct ReportRow {
  std::string key;
  double value = 0.0;
  bool exact = false;
  std::string witness_payload;  // empty when no witness
  double runtime_ms = 0.0;

  std::string witness_digest() const;
};

struct Report {
  std::string command;
  std::map<std::string, std::string> metadata;  // config echo, seed, version
  std::vector<ReportRow> rows;

  void add(std::string key, double value, bool exact,
           std::string witness_payload = "", double runtime_ms = 0.0);

  // CSV: fixed columns key,value,exact,witness,runtime_ms. Metadata rides in
  // leading comment lines; the timestamp comment is the only
  // run-dependent line outside runtime_ms.
  std::string to_csv() const;
  std::string to_json() const;

  // The determinism contract covers everything except the timestamp line and
  // the runtime_ms column.
  std::string data_section() const;
};

Report report_from_json(const std::string& text);

}  // namespace greedylab

#endif  // GREEDYLAB_REPORT_HPP
