/*
 * Copyright 2026 The gksmote authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "gksmote/csv.hpp"
#include "gksmote/error.hpp"

// Flat key=value run manifest written alongside every CLI output. It records
// the resolved configuration and the exact command line, carries no
// timestamps, and is byte-stable across reruns.

namespace gksmote {

class RunManifest {
 public:
  void set(const std::string& key, const std::string& value) { entries_[key] = value; }
  void set(const std::string& key, const char* value) { entries_[key] = value; }
  void set(const std::string& key, double value) {
    entries_[key] = detail::format_double(value);
  }
  void set(const std::string& key, std::uint64_t value) {
    entries_[key] = std::to_string(value);
  }
  void set(const std::string& key, bool value) { entries_[key] = value ? "true" : "false"; }

  const std::string& get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw ParseError("manifest has no key '" + key + "'");
    return it->second;
  }
  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::string str() const {
    std::ostringstream os;
    for (const auto& [key, value] : entries_) os << key << '=' << value << '\n';
    return os.str();
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write manifest '" + path + "'");
    out << str();
  }

  static RunManifest load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open manifest '" + path + "'");
    RunManifest m;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("manifest line lacks '=': " + line);
      m.entries_[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return m;
  }

 private:
  std::map<std::string, std::string> entries_;  // sorted keys, stable output
};

}  // namespace gksmote
