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

#include "greedylab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace greedylab {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

}  // namespace

bool ConfigSection::has(const std::string& key) const {
  return values.count(key) > 0;
}

std::string ConfigSection::get(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end())
    throw std::runtime_error("config: missing key '" + key + "' in section [" +
                             name + "]");
  return it->second;
}

std::string ConfigSection::get_or(const std::string& key,
                                  const std::string& fallback) const {
  const auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

double ConfigSection::get_double(const std::string& key) const {
  const std::string v = get(key);
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw std::runtime_error("config: key '" + key + "' is not a number: " + v);
  return x;
}

double ConfigSection::get_double_or(const std::string& key,
                                    double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

std::int64_t ConfigSection::get_int(const std::string& key) const {
  const std::string v = get(key);
  char* end = nullptr;
  const long long x = std::strtoll(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw std::runtime_error("config: key '" + key + "' is not an integer: " + v);
  return x;
}

std::int64_t ConfigSection::get_int_or(const std::string& key,
                                       std::int64_t fallback) const {
  return has(key) ? get_int(key) : fallback;
}

Config parse_config(const std::string& text) {
  Config cfg;
  std::stringstream ss(text);
  std::string line;
  std::size_t lineno = 0;
  ConfigSection current;
  current.name = "default";
  bool have_content = false;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw std::runtime_error("config line " + std::to_string(lineno) +
                                 ": unterminated section header: " + s);
      if (have_content) cfg.sections.push_back(current);
      current = ConfigSection{};
      current.name = strip(s.substr(1, s.size() - 2));
      have_content = true;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected 'key = value', got: " + s);
    const std::string key = strip(s.substr(0, eq));
    const std::string value = strip(s.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": empty key");
    current.values[key] = value;
    have_content = true;
  }
  if (have_content) cfg.sections.push_back(current);
  if (cfg.sections.empty())
    throw std::runtime_error("config: no sections or keys found");
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace greedylab
