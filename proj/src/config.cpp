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
#include "photonwf/config.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "photonwf/types.hpp"

namespace photonwf {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Drops a trailing '#' comment that is not inside a string literal.
std::string strip_comment(std::string_view s) {
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) in_string = !in_string;
    if (s[i] == '#' && !in_string) return std::string(s.substr(0, i));
  }
  return std::string(s);
}

const std::regex& key_pattern() {
  static const std::regex re("[a-z_][a-z0-9_]*(\\.[a-z_][a-z0-9_]*)*");
  return re;
}

const std::regex& bareword_pattern() {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return re;
}

}  // namespace

ConfigDocument ConfigDocument::parse(std::string_view text, std::string source) {
  ConfigDocument doc;
  doc.source_ = std::move(source);
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = trim(strip_comment(raw));
    if (body.empty()) continue;
    auto where = [&](const std::string& msg) {
      return doc.source_ + ":" + std::to_string(line) + ": " + msg;
    };
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Config, where("expected 'key = value'"));
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (!std::regex_match(key, key_pattern())) {
      throw Error(ErrorKind::Config, where("invalid key '" + key + "'"));
    }
    if (value.empty()) throw Error(ErrorKind::Config, where("missing value for '" + key + "'"));
    if (auto it = doc.entries_.find(key); it != doc.entries_.end()) {
      throw Error(ErrorKind::Config, where("duplicate key '" + key + "' (first set on line " +
                                           std::to_string(it->second.line) + ")"));
    }
    ConfigEntry entry;
    entry.line = line;
    if (std::regex_match(value, bareword_pattern()) && value != "true" && value != "false") {
      entry.value = value;
    } else {
      try {
        entry.value = nlohmann::json::parse(value);
      } catch (const nlohmann::json::parse_error&) {
        throw Error(ErrorKind::Config, where("cannot parse value '" + value + "' for '" + key + "'"));
      }
      if (entry.value.is_object() || entry.value.is_null()) {
        throw Error(ErrorKind::Config, where("unsupported value type for '" + key + "'"));
      }
    }
    doc.entries_.emplace(key, std::move(entry));
  }
  return doc;
}

ConfigDocument ConfigDocument::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, path.string() + ": cannot open configuration file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.string());
}

const ConfigEntry* ConfigDocument::find(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return nullptr;
  used_.insert(key);
  return &it->second;
}

const ConfigEntry& ConfigDocument::require(const std::string& key, const std::string& why) const {
  if (const ConfigEntry* e = find(key)) return *e;
  fail("missing required key '" + key + "' (" + why + ")");
}

void ConfigDocument::reject_unused() const {
  for (const auto& [key, entry] : entries_) {
    if (!used_.count(key)) fail(entry, "unknown or unused key '" + key + "'");
  }
}

void ConfigDocument::fail(const ConfigEntry& entry, const std::string& message) const {
  throw Error(ErrorKind::Config, source_ + ":" + std::to_string(entry.line) + ": " + message);
}

void ConfigDocument::fail(const std::string& message) const {
  throw Error(ErrorKind::Config, source_ + ": " + message);
}

}  // namespace photonwf
