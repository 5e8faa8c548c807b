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

#ifndef GREEDYLAB_CONFIG_HPP
#define GREEDYLAB_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace greedylab {

// Flat structured-text config: `[section]` headers followed by `key = value`
// lines; `#` starts a comment. No nesting, no includes.
struct ConfigSection {
  std::string name;
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;  // throws when missing
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int_or(const std::string& key, std::int64_t fallback) const;
};

struct Config {
  std::vector<ConfigSection> sections;
};

// Throws std::runtime_error with line number and offending text on malformed
// input.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

}  // namespace greedylab

#endif  // GREEDYLAB_CONFIG_HPP
