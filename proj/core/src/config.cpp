// Copyright 2026 The qfi-conveyor Authors
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

#include "qfic/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qfic {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text,
                                         std::string experiment) {
  ExperimentConfig cfg(std::move(experiment));
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line " + std::to_string(lineno) +
                            " has no '='");
    }
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key.empty()) {
      throw ValidationError("config line " + std::to_string(lineno) +
                            " has an empty key");
    }
    cfg.entries_[key] = value;
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path,
                                        std::string experiment) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), std::move(experiment));
}

std::string ExperimentConfig::serialize() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

bool ExperimentConfig::has(const std::string& key) const {
  return entries_.count(key) != 0;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  entries_[key] = value;
}

std::string ExperimentConfig::get_string(
    const std::string& key, std::optional<std::string> fallback) const {
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  if (fallback) return *fallback;
  throw ValidationError("missing required config key '" + key +
                        "' for experiment '" + experiment_ + "'");
}

double ExperimentConfig::get_double(const std::string& key,
                                    std::optional<double> fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (fallback) return *fallback;
    throw ValidationError("missing required config key '" + key +
                          "' for experiment '" + experiment_ + "'");
  }
  char* end = nullptr;
  const double v = std::strtod(it->second.c_str(), &end);
  if (end == it->second.c_str() || *end != '\0') {
    throw ValidationError("config key '" + key + "' is not a number: " +
                          it->second);
  }
  return v;
}

int ExperimentConfig::get_int(const std::string& key,
                              std::optional<int> fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (fallback) return *fallback;
    throw ValidationError("missing required config key '" + key +
                          "' for experiment '" + experiment_ + "'");
  }
  char* end = nullptr;
  const long v = std::strtol(it->second.c_str(), &end, 10);
  if (end == it->second.c_str() || *end != '\0') {
    throw ValidationError("config key '" + key + "' is not an integer: " +
                          it->second);
  }
  return static_cast<int>(v);
}

bool ExperimentConfig::get_bool(const std::string& key, bool fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  if (it->second == "true" || it->second == "1") return true;
  if (it->second == "false" || it->second == "0") return false;
  throw ValidationError("config key '" + key + "' is not a boolean: " +
                        it->second);
}

}  // namespace qfic
