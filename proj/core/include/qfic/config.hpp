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

#ifndef QFIC_CONFIG_HPP_
#define QFIC_CONFIG_HPP_

#include <map>
#include <optional>
#include <string>

#include "qfic/common.hpp"

namespace qfic {

// Flat "key = value" experiment configuration; '#' starts a comment. The
// canonical serialization (sorted keys) is what gets echoed into CSV
// headers, so identical configs always produce identical output files.
class ExperimentConfig {
 public:
  ExperimentConfig() = default;
  explicit ExperimentConfig(std::string experiment)
      : experiment_(std::move(experiment)) {}

  static ExperimentConfig parse(const std::string& text,
                                std::string experiment);
  static ExperimentConfig load(const std::string& path,
                               std::string experiment);

  std::string serialize() const;

  const std::string& experiment() const { return experiment_; }
  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  std::string get_string(const std::string& key,
                         std::optional<std::string> fallback = {}) const;
  double get_double(const std::string& key,
                    std::optional<double> fallback = {}) const;
  int get_int(const std::string& key, std::optional<int> fallback = {}) const;
  bool get_bool(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& entries() const {
    return entries_;
  }

 private:
  std::string experiment_;
  std::map<std::string, std::string> entries_;
};

}  // namespace qfic

#endif  // QFIC_CONFIG_HPP_
