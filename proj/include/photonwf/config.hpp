// Copyright 2026 The photonwf Authors
//
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
#pragma once

// Flat `dotted.key = value` configuration documents.
//
//   file    := { line }
//   line    := blank | comment | entry
//   comment := '#' anything
//   entry   := key '=' value [ comment ]
//   key     := ident { '.' ident },  ident := [a-z_][a-z0-9_]*
//   value   := JSON number | JSON string | true | false | JSON array | bareword
//
// A bareword ([A-Za-z_][A-Za-z0-9_]*) is read as a string. Keys may appear
// once. Every entry remembers its line for diagnostics.

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include <json.hpp>

namespace photonwf {

struct ConfigEntry {
  nlohmann::json value;
  int line = 0;
};

class ConfigDocument {
 public:
  /// Throws Error(Config) with "source:line: message" diagnostics.
  static ConfigDocument parse(std::string_view text, std::string source);
  static ConfigDocument load(const std::filesystem::path& path);

  const std::string& source() const { return source_; }
  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  /// Marks the key as consumed; nullptr when absent.
  const ConfigEntry* find(const std::string& key) const;
  const ConfigEntry& require(const std::string& key, const std::string& why) const;

  /// Throws for the first entry nobody asked for.
  void reject_unused() const;

  /// "source:line: message"
  [[noreturn]] void fail(const ConfigEntry& entry, const std::string& message) const;
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::string source_;
  std::map<std::string, ConfigEntry> entries_;
  mutable std::set<std::string> used_;
};

}  // namespace photonwf
